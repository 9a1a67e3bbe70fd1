#pragma once

#include <cstdint>
#include <iterator>
#include <span>

#include "meshcore/compute.hpp"
#include "meshcore/error.hpp"
#include "meshcore/mesh.hpp"
#include "meshcore/types.hpp"

namespace meshcore {

/// Forward cursor over entity indices of a fixed dimension, either the
/// global set 0..N_d-1 or the incident row of one entity. Cursors are
/// invalidated by any mesh mutation that bumps the topology revision;
/// using a stale cursor raises StateError.
class EntityCursor {
public:
  using value_type = MeshEntityRef;
  using difference_type = std::ptrdiff_t;

  EntityCursor(Mesh& mesh, Dim dim, std::uint32_t count)
      : mesh_(&mesh), dim_(dim), count_(count),
        revision_(mesh.topology().revision()) {}

  EntityCursor(Mesh& mesh, Dim dim, std::span<const EntityIndex> row)
      : mesh_(&mesh), dim_(dim), row_(row.data()),
        count_(static_cast<std::uint32_t>(row.size())),
        revision_(mesh.topology().revision()) {}

  bool at_end() const { return pos_ == count_; }

  MeshEntityRef operator*() const {
    check_fresh();
    if (pos_ == count_)
      throw StateError("cursor dereferenced at end");
    return {MeshEntityRef::Unchecked{}, *mesh_, dim_,
            row_ ? row_[pos_] : pos_};
  }

  EntityCursor& operator++() {
    check_fresh();
    if (pos_ == count_)
      throw StateError("cursor advanced past end");
    ++pos_;
    return *this;
  }

  void operator++(int) { ++*this; }

  bool operator==(std::default_sentinel_t) const { return at_end(); }

private:
  void check_fresh() const {
    if (mesh_->topology().revision() != revision_)
      throw StateError("stale cursor: the mesh changed after this cursor "
                       "was created");
  }

  Mesh* mesh_;
  Dim dim_;
  const EntityIndex* row_ = nullptr; // nullptr: global mode
  std::uint32_t pos_ = 0;
  std::uint32_t count_ = 0;
  std::uint64_t revision_;
};

/// Iterable view over entities. Construction computes any connectivity the
/// iteration needs, so iteration bodies never mutate the mesh.
class EntityRange {
public:
  /// All entities of dimension d, in index order. Builds the entities of
  /// dimension d if they do not exist yet.
  EntityRange(Mesh& mesh, Dim d) : mesh_(&mesh), dim_(d) {
    count_ = mesh.topology().entity_count(d);
    if (count_ == 0) {
      ensure_entities(mesh, d);
      count_ = mesh.topology().entity_count(d);
    }
  }

  /// The entities of dimension d incident to one entity, in stored row
  /// order. Computes the class entity.dim() -> d on first use.
  EntityRange(MeshEntityRef entity, Dim d) : mesh_(&entity.mesh()), dim_(d) {
    const Connectivity* c =
        entity.mesh().topology().connectivity(entity.dim(), d);
    if (!c) {
      compute_connectivity(entity.mesh(), entity.dim(), d);
      c = entity.mesh().topology().connectivity(entity.dim(), d);
    }
    row_ = c->row(entity.index());
    count_ = static_cast<std::uint32_t>(row_.size());
  }

  EntityCursor begin() const {
    if (row_.data()) return {*mesh_, dim_, row_};
    return {*mesh_, dim_, count_};
  }

  std::default_sentinel_t end() const { return {}; }

  std::uint32_t size() const { return count_; }

private:
  Mesh* mesh_;
  Dim dim_;
  std::span<const EntityIndex> row_{};
  std::uint32_t count_ = 0;
};

inline EntityRange entities(Mesh& mesh, Dim d) { return {mesh, d}; }

inline EntityRange incident_entities(MeshEntityRef entity, Dim d) {
  return {entity, d};
}

namespace detail {

inline Dim named_dim(const Mesh& mesh, Dim d, const char* name) {
  if (d > mesh.tdim())
    throw RangeError(std::string(name) + " iteration needs dimension " +
                     std::to_string(d) + " but the mesh has dimension " +
                     std::to_string(mesh.tdim()));
  return d;
}

inline Dim facet_dim(const Mesh& mesh) {
  if (mesh.tdim() == 0)
    throw RangeError("a dimension-0 mesh has no facets");
  return mesh.tdim() - 1;
}

} // namespace detail

// Named iterators over the whole mesh.
inline EntityRange vertices(Mesh& m) { return {m, 0}; }
inline EntityRange edges(Mesh& m) { return {m, detail::named_dim(m, 1, "edge")}; }
inline EntityRange faces(Mesh& m) { return {m, detail::named_dim(m, 2, "face")}; }
inline EntityRange facets(Mesh& m) { return {m, detail::facet_dim(m)}; }
inline EntityRange cells(Mesh& m) { return {m, m.tdim()}; }

// Named iterators over the entities incident to one entity.
inline EntityRange vertices(MeshEntityRef e) { return {e, 0}; }
inline EntityRange edges(MeshEntityRef e) {
  return {e, detail::named_dim(e.mesh(), 1, "edge")};
}
inline EntityRange faces(MeshEntityRef e) {
  return {e, detail::named_dim(e.mesh(), 2, "face")};
}
inline EntityRange facets(MeshEntityRef e) {
  return {e, detail::facet_dim(e.mesh())};
}
inline EntityRange cells(MeshEntityRef e) { return {e, e.mesh().tdim()}; }

} // namespace meshcore
