#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "meshcore/distribute.hpp"
#include "meshcore/dofmap.hpp"
#include "meshcore/mesh.hpp"

namespace meshcore {

/// Nonzero positions of the assembled global operator (structure only;
/// values are a linear-algebra backend's business).
using SparsityPattern = std::set<std::pair<std::uint32_t, std::uint32_t>>;

/// Pattern of a P1 stiffness matrix assembled over all ranks: every pair
/// of global dofs sharing a cell, diagonal included.
inline SparsityPattern sparsity_pattern(const DistributedMesh& dm,
                                        const DofMapResult& result) {
  SparsityPattern pattern;
  for (std::uint32_t r = 0; r < dm.n_ranks(); ++r) {
    const std::uint32_t n_cells = dm.ranks[r].mesh.num_cells();
    for (std::uint32_t c = 0; c < n_cells; ++c)
      for (std::uint32_t a = 0; a < result.dofs_per_cell; ++a)
        for (std::uint32_t b = 0; b < result.dofs_per_cell; ++b)
          pattern.emplace(result.dof(r, c, a), result.dof(r, c, b));
  }
  return pattern;
}

/// The same pattern assembled serially, with dofs numbered by the global
/// vertex indices directly.
inline SparsityPattern serial_pattern(const Mesh& mesh) {
  SparsityPattern pattern;
  const Connectivity* cells =
      mesh.topology().connectivity(mesh.tdim(), 0);
  for (std::uint32_t c = 0; c < cells->num_rows(); ++c) {
    const auto row = cells->row(c);
    for (std::uint32_t a : row)
      for (std::uint32_t b : row) pattern.emplace(a, b);
  }
  return pattern;
}

/// Original vertex -> parallel global dof number (the relabeling under
/// which the serial and distributed patterns must agree).
inline std::vector<std::uint32_t>
parallel_renumbering(const Mesh& mesh, const DistributedMesh& dm,
                     const DofMapResult& result) {
  std::vector<std::uint32_t> to_global(mesh.num_vertices(), invalid_index);
  const auto to_dof = vertex_dofs(dm, result);
  for (std::uint32_t r = 0; r < dm.n_ranks(); ++r)
    for (std::uint32_t v = 0; v < to_dof[r].size(); ++v)
      to_global[dm.ranks[r].global_vertex.get(v)] = to_dof[r][v];
  return to_global;
}

/// serial_pattern relabeled through the parallel numbering.
inline SparsityPattern relabeled_serial_pattern(const Mesh& mesh,
                                                const DistributedMesh& dm,
                                                const DofMapResult& result) {
  const auto to_global = parallel_renumbering(mesh, dm, result);
  SparsityPattern relabeled;
  for (const auto& [a, b] : serial_pattern(mesh))
    relabeled.emplace(to_global[a], to_global[b]);
  return relabeled;
}

} // namespace meshcore
