#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "meshcore/distribute.hpp"
#include "meshcore/error.hpp"
#include "meshcore/mesh.hpp"

namespace meshcore {

/// Finite elements supported by the distributed numbering. Only P1 (one
/// dof per vertex) for now; the enum is the seam for richer elements.
enum class ElementKind { p1 };

/// The parallel local-to-global numbering: per rank a dense table mapping
/// (cell, local dof) to a global dof number, plus the per-rank offsets and
/// owned-dof counts that produced it.
struct DofMapResult {
  std::uint32_t n_global = 0;
  std::uint32_t dofs_per_cell = 0;
  std::vector<std::uint32_t> offsets; // numbering start per rank
  std::vector<std::uint32_t> owned;   // dofs not shared with lower ranks
  std::vector<std::vector<std::uint32_t>> cell_dofs; // per rank, dense

  std::uint32_t dof(std::uint32_t rank, std::uint32_t cell,
                    std::uint32_t local) const {
    return cell_dofs[rank][cell * dofs_per_cell + local];
  }
};

/// Compute a global dof numbering over a distributed mesh in four stages:
/// per-rank owned counts and offsets, numbering on cells at facets shared
/// with higher ranks, sequential communication of shared numbers from
/// lower to higher ranks, then the remaining interior dofs. Rank i always
/// numbers the dofs it shares with ranks j > i; dofs on facets shared with
/// a lower rank are left to that rank and received in stage 2.
///
/// Throws PartitionError when the result is not a bijection — the failure
/// mode of partitions whose ranks share dofs without a facet path.
inline DofMapResult compute_mapping(const DistributedMesh& dm,
                                    ElementKind element = ElementKind::p1) {
  (void)element; // P1 only
  const std::uint32_t n = dm.n_ranks();
  if (n == 0) throw ArgumentError("empty distributed mesh");
  const Dim D = dm.ranks[0].mesh.tdim();
  const Dim fdim = D - 1;
  const std::uint32_t dofs_per_cell = D + 1;

  // P1: local dof l of cell c is the cell's l-th vertex, so the rank-local
  // dof numbering is the local vertex numbering.
  std::vector<const Connectivity*> cells(n), facet_to_cell(n),
      facet_to_vertex(n);
  std::vector<std::uint32_t> n_local(n), n_facets(n);
  for (std::uint32_t r = 0; r < n; ++r) {
    const MeshTopology& topology = dm.ranks[r].mesh.topology();
    cells[r] = topology.connectivity(D, 0);
    facet_to_cell[r] = topology.connectivity(fdim, D);
    facet_to_vertex[r] = fdim > 0 ? topology.connectivity(fdim, 0) : nullptr;
    if (!facet_to_cell[r] || (fdim > 0 && !facet_to_vertex[r]))
      throw StateError("distributed mesh lacks facet connectivity");
    n_local[r] = topology.entity_count(0);
    n_facets[r] = topology.entity_count(fdim);
  }
  auto facet_dofs = [&](std::uint32_t r,
                        const std::uint32_t& f) -> std::span<const EntityIndex> {
    return fdim == 0 ? std::span<const EntityIndex>(&f, 1)
                     : facet_to_vertex[r]->row(f);
  };

  // dofs on any facet shared with a lower rank are owned elsewhere
  std::vector<std::vector<bool>> lower_shared(n);
  for (std::uint32_t r = 0; r < n; ++r) {
    lower_shared[r].assign(n_local[r], false);
    for (std::uint32_t f = 0; f < n_facets[r]; ++f)
      if (dm.ranks[r].facet_rank.get(f) < r)
        for (std::uint32_t v : facet_dofs(r, f)) lower_shared[r][v] = true;
  }

  DofMapResult result;
  result.dofs_per_cell = dofs_per_cell;
  result.owned.resize(n);
  result.offsets.resize(n);

  // --- stage 0: owned counts, offsets passed rank to rank
  for (std::uint32_t r = 0; r < n; ++r) {
    std::uint32_t count = 0;
    for (std::uint32_t v = 0; v < n_local[r]; ++v)
      if (!lower_shared[r][v]) ++count;
    result.owned[r] = count;
  }
  result.offsets[0] = 0;
  for (std::uint32_t r = 1; r < n; ++r)
    result.offsets[r] = result.offsets[r - 1] + result.owned[r - 1];
  result.n_global = result.offsets[n - 1] + result.owned[n - 1];

  // translation: local vertex -> global dof, filled as numbering proceeds
  std::vector<std::vector<std::uint32_t>> translation(n);
  std::vector<std::uint32_t> counter(n);
  result.cell_dofs.resize(n);
  for (std::uint32_t r = 0; r < n; ++r) {
    translation[r].assign(n_local[r], invalid_index);
    counter[r] = result.offsets[r];
    result.cell_dofs[r].assign(
        static_cast<std::size_t>(cells[r]->num_rows()) * dofs_per_cell,
        invalid_index);
  }

  auto number_cell = [&](std::uint32_t r, std::uint32_t c, bool skip_lower) {
    const auto row = cells[r]->row(c);
    for (std::uint32_t l = 0; l < dofs_per_cell; ++l) {
      const std::uint32_t v = row[l];
      if (skip_lower && lower_shared[r][v]) continue;
      std::uint32_t& slot = result.cell_dofs[r][c * dofs_per_cell + l];
      if (translation[r][v] != invalid_index) {
        slot = translation[r][v];
      } else {
        translation[r][v] = counter[r];
        slot = counter[r];
        ++counter[r];
      }
    }
  };

  // --- stage 1: cells at facets shared with higher ranks
  for (std::uint32_t r = 0; r < n; ++r) {
    for (std::uint32_t f = 0; f < n_facets[r]; ++f) {
      if (dm.ranks[r].facet_rank.get(f) <= r) continue;
      const auto incident = facet_to_cell[r]->row(f);
      // a shared facet lies on the rank boundary: exactly one cell
      number_cell(r, incident[0], /*skip_lower=*/true);
    }
  }

  // --- stage 2: sequential communication, lower to higher ranks
  for (std::uint32_t j = 1; j < n; ++j) {
    // original vertex id -> local vertex, for matching received dofs
    std::map<std::uint32_t, std::uint32_t> local_of_original;
    for (std::uint32_t v = 0; v < n_local[j]; ++v)
      local_of_original[dm.ranks[j].global_vertex.get(v)] = v;
    for (std::uint32_t f = 0; f < n_facets[j]; ++f) {
      const std::uint32_t i = dm.ranks[j].facet_rank.get(f);
      if (i >= j) continue;
      const std::uint32_t remote = dm.ranks[j].facet_remote.get(f);
      // "message" from rank i: (original vertex, global dof) pairs for the
      // dofs on the matched facet
      for (std::uint32_t v : facet_dofs(i, remote)) {
        const std::uint32_t global_dof = translation[i][v];
        if (global_dof == invalid_index) continue; // sender has no number
        const auto it =
            local_of_original.find(dm.ranks[i].global_vertex.get(v));
        if (it != local_of_original.end())
          translation[j][it->second] = global_dof;
      }
    }
  }

  // --- stage 3: remaining interior dofs
  for (std::uint32_t r = 0; r < n; ++r)
    for (std::uint32_t c = 0; c < cells[r]->num_rows(); ++c)
      number_cell(r, c, /*skip_lower=*/false);

  // --- post-hoc validation: the numbering must be a bijection between
  // original dofs and [0, n_global)
  std::map<std::uint32_t, std::uint32_t> seen; // original vertex -> dof
  std::vector<bool> used(result.n_global, false);
  for (std::uint32_t r = 0; r < n; ++r) {
    for (std::uint32_t v = 0; v < n_local[r]; ++v) {
      const std::uint32_t dof = translation[r][v];
      const std::uint32_t original = dm.ranks[r].global_vertex.get(v);
      if (dof == invalid_index || dof >= result.n_global)
        throw PartitionError("invalid partition: dof of original vertex " +
                             std::to_string(original) + " is unnumbered");
      auto [it, inserted] = seen.try_emplace(original, dof);
      if (!inserted && it->second != dof)
        throw PartitionError(
            "invalid partition: original vertex " + std::to_string(original) +
            " received two global numbers (" + std::to_string(it->second) +
            " and " + std::to_string(dof) +
            "); shared dofs need a shared-facet path between ranks");
      used[dof] = true;
    }
  }
  for (std::uint32_t g = 0; g < result.n_global; ++g)
    if (!used[g])
      throw PartitionError("invalid partition: global number " +
                           std::to_string(g) + " is unused");

  return result;
}

/// Per rank, local vertex -> global dof, reconstructed from the cell
/// tables (P1: local dof l of a cell is its l-th vertex).
inline std::vector<std::vector<std::uint32_t>>
vertex_dofs(const DistributedMesh& dm, const DofMapResult& result) {
  std::vector<std::vector<std::uint32_t>> to_dof(dm.n_ranks());
  for (std::uint32_t r = 0; r < dm.n_ranks(); ++r) {
    const Mesh& mesh = dm.ranks[r].mesh;
    const Connectivity* cells = mesh.topology().connectivity(mesh.tdim(), 0);
    to_dof[r].assign(mesh.num_vertices(), invalid_index);
    for (std::uint32_t c = 0; c < cells->num_rows(); ++c) {
      const auto row = cells->row(c);
      for (std::uint32_t l = 0; l < result.dofs_per_cell; ++l)
        to_dof[r][row[l]] = result.dof(r, c, l);
    }
  }
  return to_dof;
}

/// Check that every matched facet pair carries identical dof numbers for
/// corresponding (same original vertex) facet dofs.
inline bool matched_facet_dofs_agree(const DistributedMesh& dm,
                                     const DofMapResult& result) {
  const auto to_dof = vertex_dofs(dm, result);
  const Dim D = dm.ranks[0].mesh.tdim();
  const Dim fdim = D - 1;
  auto gather = [&](const RankMesh& side, std::uint32_t rank,
                    std::uint32_t facet,
                    std::map<std::uint32_t, std::uint32_t>& into) {
    if (fdim == 0) {
      into[side.global_vertex.get(facet)] = to_dof[rank][facet];
      return;
    }
    const Connectivity* f2v = side.mesh.topology().connectivity(fdim, 0);
    for (std::uint32_t v : f2v->row(facet))
      into[side.global_vertex.get(v)] = to_dof[rank][v];
  };
  for (std::uint32_t r = 0; r < dm.n_ranks(); ++r) {
    const RankMesh& rm = dm.ranks[r];
    const std::uint32_t n_facets = rm.mesh.topology().entity_count(fdim);
    for (std::uint32_t f = 0; f < n_facets; ++f) {
      const std::uint32_t j = rm.facet_rank.get(f);
      if (j == r) continue;
      std::map<std::uint32_t, std::uint32_t> mine, theirs;
      gather(rm, r, f, mine);
      gather(dm.ranks[j], j, rm.facet_remote.get(f), theirs);
      if (mine != theirs) return false;
    }
  }
  return true;
}

} // namespace meshcore
