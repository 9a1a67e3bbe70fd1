#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "meshcore/compute.hpp"
#include "meshcore/mesh.hpp"

namespace meshcore {

/// Sort each cell's vertex tuple ascending by global index. Every derived
/// connectivity class is recomputed (derived entity numbering depends on
/// cell tuples), so outstanding cursors become stale. Geometry is
/// untouched.
inline void order(Mesh& mesh) {
  MeshTopology& topology = mesh.topology();
  const Dim D = topology.dim();

  std::vector<std::pair<Dim, Dim>> stored;
  for (Dim d = 0; d <= D; ++d)
    for (Dim dp = 0; dp <= D; ++dp)
      if (!(d == D && dp == 0) && topology.has(d, dp))
        stored.emplace_back(d, dp);
  for (auto [d, dp] : stored) topology.clear(d, dp);
  for (Dim d = 1; d < D; ++d) topology.set_entity_count(d, 0);

  const Connectivity* cells = topology.connectivity(D, 0);
  Connectivity sorted(cells->offsets(), cells->indices());
  for (std::uint32_t c = 0; c < sorted.num_rows(); ++c) {
    auto row = sorted.mutable_row(c);
    std::sort(row.begin(), row.end());
  }
  topology.set_connectivity(D, 0, std::move(sorted));

  for (auto [d, dp] : stored) compute_connectivity(mesh, d, dp);
}

} // namespace meshcore
