#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "meshcore/compute.hpp"
#include "meshcore/error.hpp"
#include "meshcore/mesh.hpp"
#include "meshcore/mesh_function.hpp"

namespace meshcore {

/// Assignment of every cell to one of n ranks. Every rank owns at least
/// one cell and ranks are used densely.
struct Partition {
  std::uint32_t n_ranks = 1;
  MeshFunction<std::uint32_t> owner; // on cells
};

/// Deterministic greedy BFS partition over the facet-adjacency graph of
/// the cells: each part is seeded from the lowest-index unassigned cell
/// and grown by repeatedly taking the lowest-index frontier cell,
/// targeting ceil(N_D / n) cells per part (capped so every later rank
/// still gets a cell). The index-ordered frontier sweeps lattice-ordered
/// meshes without cutting off pockets, which plain FIFO growth does. A
/// dedicated graph partitioner would do better; this is only meant to
/// produce valid, reproducible partitions for the distributed numbering.
inline Partition partition_cells(Mesh& mesh, std::uint32_t n) {
  const Dim D = mesh.tdim();
  if (D == 0)
    throw ArgumentError("partitioning is unsupported for dimension-0 meshes");
  const std::uint32_t n_cells = mesh.num_cells();
  if (n < 1 || n > n_cells)
    throw ArgumentError("rank count " + std::to_string(n) +
                        " out of range (cells: " + std::to_string(n_cells) +
                        ")");

  const Dim fdim = D - 1;
  compute_connectivity(mesh, D, fdim);
  compute_connectivity(mesh, fdim, D);
  const Connectivity* cell_to_facet = mesh.topology().connectivity(D, fdim);
  const Connectivity* facet_to_cell = mesh.topology().connectivity(fdim, D);

  std::vector<std::uint32_t> owner(n_cells, invalid_index);
  const std::uint32_t target = (n_cells + n - 1) / n;
  std::uint32_t next_seed = 0;
  std::uint32_t assigned = 0;

  for (std::uint32_t rank = 0; rank < n; ++rank) {
    const std::uint32_t ranks_after = n - 1 - rank;
    const std::uint32_t available = n_cells - assigned - ranks_after;
    const std::uint32_t budget =
        (rank == n - 1) ? n_cells - assigned : std::min(target, available);
    std::uint32_t taken = 0;
    std::set<std::uint32_t> frontier;
    while (taken < budget) {
      if (frontier.empty()) {
        while (next_seed < n_cells && owner[next_seed] != invalid_index)
          ++next_seed;
        if (next_seed == n_cells) break;
        // re-seeding keeps total coverage even if the unassigned region
        // is disconnected
        frontier.insert(next_seed);
      }
      const std::uint32_t c = *frontier.begin();
      frontier.erase(frontier.begin());
      if (owner[c] != invalid_index) continue;
      owner[c] = rank;
      ++taken;
      ++assigned;
      for (std::uint32_t f : cell_to_facet->row(c))
        for (std::uint32_t neighbor : facet_to_cell->row(f))
          if (owner[neighbor] == invalid_index) frontier.insert(neighbor);
    }
  }

  // Carving can cut pockets off a later part. Donate every component that
  // does not contain its rank's lowest-index cell to the rank owning the
  // lowest-index adjacent cell, until every part is facet-connected.
  std::vector<std::uint32_t> lowest(n, invalid_index);
  std::vector<std::uint32_t> component;
  std::vector<char> visited(n_cells, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    std::fill(lowest.begin(), lowest.end(), invalid_index);
    for (std::uint32_t c = 0; c < n_cells; ++c)
      if (lowest[owner[c]] == invalid_index) lowest[owner[c]] = c;
    std::fill(visited.begin(), visited.end(), 0);
    for (std::uint32_t c0 = 0; c0 < n_cells && !changed; ++c0) {
      if (visited[c0]) continue;
      const std::uint32_t rank = owner[c0];
      component.assign(1, c0);
      visited[c0] = 1;
      bool keeps_lowest = (c0 == lowest[rank]);
      std::uint32_t donate_to = invalid_index;
      for (std::size_t i = 0; i < component.size(); ++i) {
        for (std::uint32_t f : cell_to_facet->row(component[i])) {
          for (std::uint32_t neighbor : facet_to_cell->row(f)) {
            if (owner[neighbor] == rank) {
              if (!visited[neighbor]) {
                visited[neighbor] = 1;
                keeps_lowest = keeps_lowest || (neighbor == lowest[rank]);
                component.push_back(neighbor);
              }
            } else if (neighbor < donate_to) {
              donate_to = neighbor;
            }
          }
        }
      }
      if (!keeps_lowest && donate_to != invalid_index) {
        for (std::uint32_t c : component) owner[c] = owner[donate_to];
        changed = true;
      }
    }
  }

  return {n, MeshFunction<std::uint32_t>(D, std::move(owner))};
}

} // namespace meshcore
