#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "meshcore/error.hpp"
#include "meshcore/mesh.hpp"
#include "meshcore/types.hpp"

namespace meshcore {

/// Incremental mesh definition: open, declare and add vertices, declare
/// and add cells, close. Calls must follow that order; indices must be
/// added exactly once each, densely from 0.
class MeshEditor {
public:
  void open(CellKind kind, Dim tdim, std::uint32_t gdim) {
    if (phase_ != Phase::closed)
      throw StateError("editor already open");
    if (tdim != cell_dim(kind))
      throw ArgumentError("topological dimension " + std::to_string(tdim) +
                          " does not match cell kind " + to_string(kind));
    if (gdim < 1 || gdim > 3 || gdim < tdim)
      throw ArgumentError("geometric dimension " + std::to_string(gdim) +
                          " invalid for topological dimension " +
                          std::to_string(tdim));
    kind_ = kind;
    gdim_ = gdim;
    phase_ = Phase::opened;
  }

  void init_vertices(std::uint32_t n) {
    require(Phase::opened, "init_vertices");
    if (n == 0) throw ArgumentError("a mesh needs at least one vertex");
    coordinates_.assign(static_cast<std::size_t>(n) * gdim_, 0.0);
    vertex_added_.assign(n, false);
    vertices_added_ = 0;
    phase_ = Phase::vertices;
  }

  void add_vertex(EntityIndex i, std::span<const double> x) {
    require(Phase::vertices, "add_vertex");
    if (i >= vertex_added_.size())
      throw ArgumentError("vertex index " + std::to_string(i) +
                          " out of range (declared: " +
                          std::to_string(vertex_added_.size()) + ")");
    if (x.size() != gdim_)
      throw ArgumentError("vertex " + std::to_string(i) + " has " +
                          std::to_string(x.size()) +
                          " coordinates, expected " + std::to_string(gdim_));
    if (vertex_added_[i])
      throw ArgumentError("duplicate vertex index " + std::to_string(i));
    std::copy(x.begin(), x.end(),
              coordinates_.begin() + static_cast<std::size_t>(i) * gdim_);
    vertex_added_[i] = true;
    ++vertices_added_;
  }

  void add_vertex(EntityIndex i, double x) {
    const double c[1] = {x};
    add_vertex(i, std::span<const double>(c, 1));
  }
  void add_vertex(EntityIndex i, double x, double y) {
    const double c[2] = {x, y};
    add_vertex(i, std::span<const double>(c, 2));
  }
  void add_vertex(EntityIndex i, double x, double y, double z) {
    const double c[3] = {x, y, z};
    add_vertex(i, std::span<const double>(c, 3));
  }

  void init_cells(std::uint32_t n) {
    require(Phase::vertices, "init_cells");
    if (vertices_added_ != vertex_added_.size())
      throw StateError("init_cells called with " +
                       std::to_string(vertices_added_) + " of " +
                       std::to_string(vertex_added_.size()) +
                       " vertices added");
    if (n == 0) throw ArgumentError("a mesh needs at least one cell");
    const std::uint32_t width = vertices_per_cell(kind_);
    cell_vertices_.assign(static_cast<std::size_t>(n) * width, 0);
    cell_added_.assign(n, false);
    cells_added_ = 0;
    phase_ = Phase::cells;
  }

  void add_cell(EntityIndex i, std::span<const EntityIndex> vertices) {
    require(Phase::cells, "add_cell");
    const std::uint32_t width = vertices_per_cell(kind_);
    if (i >= cell_added_.size())
      throw ArgumentError("cell index " + std::to_string(i) +
                          " out of range (declared: " +
                          std::to_string(cell_added_.size()) + ")");
    if (vertices.size() != width)
      throw ArgumentError("cell " + std::to_string(i) + " has " +
                          std::to_string(vertices.size()) +
                          " vertices, expected " + std::to_string(width));
    for (EntityIndex v : vertices)
      if (v >= vertex_added_.size())
        throw ArgumentError("cell " + std::to_string(i) +
                            " references vertex " + std::to_string(v) +
                            " but only " +
                            std::to_string(vertex_added_.size()) +
                            " vertices are declared");
    if (cell_added_[i])
      throw ArgumentError("duplicate cell index " + std::to_string(i));
    std::copy(vertices.begin(), vertices.end(),
              cell_vertices_.begin() + static_cast<std::size_t>(i) * width);
    cell_added_[i] = true;
    ++cells_added_;
  }

  void add_cell(EntityIndex i, EntityIndex v0) {
    const EntityIndex v[1] = {v0};
    add_cell(i, std::span<const EntityIndex>(v, 1));
  }
  void add_cell(EntityIndex i, EntityIndex v0, EntityIndex v1) {
    const EntityIndex v[2] = {v0, v1};
    add_cell(i, std::span<const EntityIndex>(v, 2));
  }
  void add_cell(EntityIndex i, EntityIndex v0, EntityIndex v1,
                EntityIndex v2) {
    const EntityIndex v[3] = {v0, v1, v2};
    add_cell(i, std::span<const EntityIndex>(v, 3));
  }
  void add_cell(EntityIndex i, EntityIndex v0, EntityIndex v1, EntityIndex v2,
                EntityIndex v3) {
    const EntityIndex v[4] = {v0, v1, v2, v3};
    add_cell(i, std::span<const EntityIndex>(v, 4));
  }

  /// Validate fill completeness and produce the mesh. The editor can be
  /// reused (open again) afterwards.
  Mesh close() {
    require(Phase::cells, "close");
    if (cells_added_ != cell_added_.size())
      throw StateError("close called with " + std::to_string(cells_added_) +
                       " of " + std::to_string(cell_added_.size()) +
                       " cells added");
    const Dim tdim = cell_dim(kind_);
    const std::uint32_t width = vertices_per_cell(kind_);
    const std::uint32_t n_cells =
        static_cast<std::uint32_t>(cell_added_.size());
    const std::uint32_t n_vertices =
        static_cast<std::uint32_t>(vertex_added_.size());

    MeshTopology topology(tdim);
    topology.set_entity_count(0, n_vertices);
    topology.set_entity_count(tdim, n_cells);
    std::vector<std::uint32_t> offsets(n_cells + 1);
    for (std::uint32_t c = 0; c <= n_cells; ++c) offsets[c] = c * width;
    topology.set_connectivity(
        tdim, 0, Connectivity(std::move(offsets), std::move(cell_vertices_)));

    MeshGeometry geometry(gdim_, std::move(coordinates_));

    phase_ = Phase::closed;
    coordinates_.clear();
    cell_vertices_.clear();
    vertex_added_.clear();
    cell_added_.clear();
    return Mesh(kind_, std::move(topology), std::move(geometry));
  }

private:
  enum class Phase { closed, opened, vertices, cells };

  void require(Phase expected, const char* op) const {
    if (phase_ != expected)
      throw StateError(std::string(op) +
                       " called out of protocol order (open, init_vertices, "
                       "add_vertex..., init_cells, add_cell..., close)");
  }

  Phase phase_ = Phase::closed;
  CellKind kind_ = CellKind::interval;
  std::uint32_t gdim_ = 1;
  std::vector<double> coordinates_;
  std::vector<EntityIndex> cell_vertices_;
  std::vector<bool> vertex_added_;
  std::vector<bool> cell_added_;
  std::uint32_t vertices_added_ = 0;
  std::uint32_t cells_added_ = 0;
};

} // namespace meshcore
