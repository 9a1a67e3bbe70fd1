#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "meshcore/compute.hpp"
#include "meshcore/editor.hpp"
#include "meshcore/error.hpp"
#include "meshcore/mesh.hpp"
#include "meshcore/mesh_function.hpp"
#include "meshcore/partition.hpp"

namespace meshcore {

/// One rank of a distributed mesh: the local mesh T_i plus two facet
/// functions — S_i mapping each local facet to the rank it is shared with
/// (itself when unshared) and F_i mapping shared facets to the matching
/// facet index on that rank (0 when unshared) — and the map from local to
/// original vertex indices.
struct RankMesh {
  Mesh mesh;
  MeshFunction<std::uint32_t> facet_rank;   // S_i
  MeshFunction<std::uint32_t> facet_remote; // F_i
  MeshFunction<std::uint32_t> global_vertex;
};

/// A mesh distributed over n simulated ranks as tuples (T_i, S_i, F_i).
struct DistributedMesh {
  std::vector<RankMesh> ranks;

  std::uint32_t n_ranks() const {
    return static_cast<std::uint32_t>(ranks.size());
  }
};

/// Split a mesh by cell ownership. Each rank's cells keep ascending global
/// order and its vertices are renumbered ascending by original index. The
/// facet functions are built by matching rank-boundary facets through
/// original vertex ids; a facet present on more than two ranks is
/// rejected. Every local mesh leaves the classes (D-1) -> 0 and (D-1) -> D
/// computed, which the dof numbering relies on.
inline DistributedMesh distribute(Mesh& mesh, const Partition& partition) {
  const Dim D = mesh.tdim();
  if (D == 0)
    throw ArgumentError("distribution is unsupported for dimension-0 meshes");
  const std::uint32_t n = partition.n_ranks;
  const std::uint32_t n_cells = mesh.num_cells();
  if (partition.owner.size() != n_cells)
    throw ArgumentError("partition owner function does not match the mesh");

  std::vector<std::vector<std::uint32_t>> rank_cells(n);
  for (std::uint32_t c = 0; c < n_cells; ++c) {
    const std::uint32_t r = partition.owner.get(c);
    if (r >= n)
      throw ArgumentError("cell " + std::to_string(c) + " owned by rank " +
                          std::to_string(r) + " >= " + std::to_string(n));
    rank_cells[r].push_back(c);
  }
  for (std::uint32_t r = 0; r < n; ++r)
    if (rank_cells[r].empty())
      throw ArgumentError("rank " + std::to_string(r) + " owns no cells");

  const Connectivity* cells = mesh.topology().connectivity(D, 0);
  const std::uint32_t n_vertices = mesh.num_vertices();
  const Dim fdim = D - 1;

  DistributedMesh dm;
  dm.ranks.reserve(n);
  std::vector<std::uint32_t> local_id(n_vertices);

  for (std::uint32_t r = 0; r < n; ++r) {
    // local vertices: ascending original index
    std::vector<bool> used(n_vertices, false);
    for (std::uint32_t c : rank_cells[r])
      for (std::uint32_t v : cells->row(c)) used[v] = true;
    std::vector<std::uint32_t> original;
    for (std::uint32_t v = 0; v < n_vertices; ++v)
      if (used[v]) {
        local_id[v] = static_cast<std::uint32_t>(original.size());
        original.push_back(v);
      }

    MeshEditor editor;
    editor.open(mesh.kind(), D, mesh.gdim());
    editor.init_vertices(static_cast<std::uint32_t>(original.size()));
    for (std::uint32_t v = 0; v < original.size(); ++v)
      editor.add_vertex(v, mesh.point(original[v]));
    editor.init_cells(static_cast<std::uint32_t>(rank_cells[r].size()));
    std::vector<EntityIndex> tuple(D + 1);
    for (std::uint32_t c = 0; c < rank_cells[r].size(); ++c) {
      const auto row = cells->row(rank_cells[r][c]);
      for (std::size_t i = 0; i < row.size(); ++i) tuple[i] = local_id[row[i]];
      editor.add_cell(c, tuple);
    }
    Mesh local = editor.close();
    if (fdim > 0) compute_connectivity(local, fdim, 0);
    compute_connectivity(local, fdim, D);

    const std::uint32_t n_facets = local.topology().entity_count(fdim);
    dm.ranks.push_back(
        {std::move(local),
         MeshFunction<std::uint32_t>(fdim, std::vector<std::uint32_t>(
                                               n_facets, r)),
         MeshFunction<std::uint32_t>(fdim, std::vector<std::uint32_t>(
                                               n_facets, 0)),
         MeshFunction<std::uint32_t>(0, std::move(original))});
  }

  // match rank-boundary facets across ranks by original vertex sets
  std::map<std::vector<std::uint32_t>, std::vector<std::pair<std::uint32_t,
                                                             std::uint32_t>>>
      shared; // sorted original vertices -> (rank, local facet)
  for (std::uint32_t r = 0; r < n; ++r) {
    RankMesh& rm = dm.ranks[r];
    const MeshTopology& topology = rm.mesh.topology();
    const Connectivity* facet_to_cell = topology.connectivity(fdim, D);
    const Connectivity* facet_to_vertex =
        fdim > 0 ? topology.connectivity(fdim, 0) : nullptr;
    const std::uint32_t n_facets = topology.entity_count(fdim);
    for (std::uint32_t f = 0; f < n_facets; ++f) {
      if (facet_to_cell->row_size(f) != 1) continue; // interior facet
      std::vector<std::uint32_t> key;
      if (fdim == 0) {
        key.push_back(rm.global_vertex.get(f));
      } else {
        for (std::uint32_t v : facet_to_vertex->row(f))
          key.push_back(rm.global_vertex.get(v));
        std::sort(key.begin(), key.end());
      }
      shared[std::move(key)].emplace_back(r, f);
    }
  }

  for (const auto& [key, where] : shared) {
    if (where.size() == 1) continue; // true boundary facet
    if (where.size() > 2)
      throw PartitionError("a facet is shared by " +
                           std::to_string(where.size()) +
                           " ranks (non-manifold partition)");
    const auto [ri, fi] = where[0];
    const auto [rj, fj] = where[1];
    dm.ranks[ri].facet_rank.set(fi, rj);
    dm.ranks[ri].facet_remote.set(fi, fj);
    dm.ranks[rj].facet_rank.set(fj, ri);
    dm.ranks[rj].facet_remote.set(fj, fi);
  }

  return dm;
}

} // namespace meshcore
