#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "meshcore/error.hpp"
#include "meshcore/geometry.hpp"
#include "meshcore/topology.hpp"
#include "meshcore/types.hpp"

namespace meshcore {

/// A mesh: cell kind, topology and geometry. The topology always carries
/// the minimal class D -> 0 (the vertices of each cell); all other
/// incidence classes are computed on demand.
///
/// A mesh is immutable after construction except through explicit mutating
/// operations (connectivity computation, ordering). Concurrent readers are
/// safe; mutation requires exclusive access.
class Mesh {
public:
  Mesh(CellKind kind, MeshTopology topology, MeshGeometry geometry)
      : kind_(kind), topology_(std::move(topology)),
        geometry_(std::move(geometry)) {
    const Dim d = cell_dim(kind_);
    if (topology_.dim() != d)
      throw ArgumentError("topology dimension " +
                          std::to_string(topology_.dim()) +
                          " does not match cell kind " + to_string(kind_));
    if (topology_.entity_count(d) == 0)
      throw ArgumentError("mesh has no cells");
    if (topology_.entity_count(0) < d + 1)
      throw ArgumentError("mesh has fewer vertices than one cell needs");
    if (geometry_.num_points() != topology_.entity_count(0))
      throw ArgumentError(
          "geometry has " + std::to_string(geometry_.num_points()) +
          " points but topology has " +
          std::to_string(topology_.entity_count(0)) + " vertices");
    const Connectivity* cells = topology_.connectivity(d, 0);
    if (!cells)
      throw ArgumentError("the minimal class D->0 is missing");
    const std::uint32_t width = vertices_per_cell(kind_);
    for (std::uint32_t c = 0; c < cells->num_rows(); ++c)
      if (cells->row_size(c) != width)
        throw ArgumentError("cell " + std::to_string(c) + " has " +
                            std::to_string(cells->row_size(c)) +
                            " vertices, expected " + std::to_string(width));
  }

  CellKind kind() const { return kind_; }
  Dim tdim() const { return topology_.dim(); }
  std::uint32_t gdim() const { return geometry_.gdim(); }

  MeshTopology& topology() { return topology_; }
  const MeshTopology& topology() const { return topology_; }
  MeshGeometry& geometry() { return geometry_; }
  const MeshGeometry& geometry() const { return geometry_; }

  std::uint32_t num_entities(Dim d) const { return topology_.entity_count(d); }
  std::uint32_t num_vertices() const { return topology_.entity_count(0); }
  std::uint32_t num_cells() const { return topology_.entity_count(tdim()); }

  /// Coordinates of vertex v (n doubles).
  std::span<const double> point(EntityIndex v) const {
    return geometry_.point(v);
  }

  /// Payload bytes: stored connectivity arrays plus coordinates.
  std::size_t size_bytes() const {
    return topology_.size_bytes() + geometry_.size_bytes();
  }

private:
  CellKind kind_;
  MeshTopology topology_;
  MeshGeometry geometry_;
};

/// Lightweight view of one mesh entity (d, i). Stores no mesh data.
class MeshEntityRef {
public:
  MeshEntityRef(Mesh& mesh, Dim dim, EntityIndex index)
      : mesh_(&mesh), dim_(dim), index_(index) {
    const std::uint32_t n = mesh.topology().entity_count(dim);
    if (index >= n)
      throw RangeError("entity (" + std::to_string(dim) + ", " +
                       std::to_string(index) + ") out of range (count: " +
                       std::to_string(n) + ")");
  }

  Dim dim() const { return dim_; }
  EntityIndex index() const { return index_; }
  Mesh& mesh() const { return *mesh_; }

  /// The stored row (d -> d')_i. Throws StateError if the class has not
  /// been computed; the iterator layer computes it automatically instead.
  std::span<const EntityIndex> incident(Dim dp) const {
    const Connectivity* c = mesh_->topology().connectivity(dim_, dp);
    if (!c)
      throw StateError("connectivity " + std::to_string(dim_) + "->" +
                       std::to_string(dp) + " not initialized");
    return c->row(index_);
  }

  /// Coordinates, for vertex entities only.
  std::span<const double> point() const {
    if (dim_ != 0)
      throw RangeError("point() is only defined for vertices");
    return mesh_->point(index_);
  }

private:
  friend class EntityCursor;
  struct Unchecked {};
  // cursor fast path: validity guaranteed by the CRS invariants
  MeshEntityRef(Unchecked, Mesh& mesh, Dim dim, EntityIndex index) noexcept
      : mesh_(&mesh), dim_(dim), index_(index) {}

  Mesh* mesh_;
  Dim dim_;
  EntityIndex index_;
};

} // namespace meshcore
