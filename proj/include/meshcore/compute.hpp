#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "meshcore/connectivity.hpp"
#include "meshcore/error.hpp"
#include "meshcore/local_templates.hpp"
#include "meshcore/mesh.hpp"
#include "meshcore/topology.hpp"
#include "meshcore/types.hpp"

namespace meshcore {

/// How Build locates an already-created entity for a candidate vertex set:
/// by rescanning lower-numbered incident cells (the reference variant) or
/// through a global key-to-index map. Both produce identical arrays.
enum class BuildStrategy { neighbor_scan, global_map };

/// One step performed by the connectivity driver, for introspection.
struct ComputeStep {
  enum class Op { build, transpose, intersection };
  Op op;
  Dim d = 0;
  Dim dp = 0;
  Dim dpp = 0; // intersection only
  bool operator==(const ComputeStep&) const = default;
};
using ComputeTrace = std::vector<ComputeStep>;

/// Compute d -> d' from d' -> d for d < d'. Entries of each row appear in
/// increasing j order. Runs twice: a counting pass, then a filling pass.
inline void transpose(MeshTopology& topology, Dim d, Dim dp) {
  if (!(d < dp))
    throw ArgumentError("transpose requires d < d', got " + std::to_string(d) +
                        " -> " + std::to_string(dp));
  const Connectivity* src = topology.connectivity(dp, d);
  if (!src)
    throw StateError("transpose(" + std::to_string(d) + ", " +
                     std::to_string(dp) + ") requires the class " +
                     std::to_string(dp) + "->" + std::to_string(d));
  const std::uint32_t n_rows = topology.entity_count(d);
  if (n_rows == 0)
    throw StateError("entities of dimension " + std::to_string(d) +
                     " not computed");

  std::vector<std::uint32_t> sizes(n_rows, 0);
  for (std::uint32_t i : src->indices()) ++sizes[i];

  Connectivity out = Connectivity::with_row_sizes(sizes);
  std::vector<std::uint32_t> cursor(n_rows, 0);
  for (std::uint32_t j = 0; j < src->num_rows(); ++j)
    for (std::uint32_t i : src->row(j))
      out.mutable_row(i)[cursor[i]++] = j;

  topology.set_connectivity(d, dp, std::move(out));
}

/// Compute d -> d' from d -> d'' and d'' -> d' for d >= d'. For d = d',
/// entities are incident when distinct and sharing a dimension-d''
/// neighbor; for d > d', when the vertex set of (d', j) is contained in
/// the vertex set of (d, i). Rows hold first-encounter order without
/// duplicates; duplicate detection uses a stamp array of size N_d' reused
/// across rows. Runs twice: counting pass, then filling pass.
inline void intersection(MeshTopology& topology, Dim d, Dim dp, Dim dpp) {
  if (!(d >= dp))
    throw ArgumentError("intersection requires d >= d', got " +
                        std::to_string(d) + " -> " + std::to_string(dp));
  const Connectivity* d_to_dpp = topology.connectivity(d, dpp);
  const Connectivity* dpp_to_dp = topology.connectivity(dpp, dp);
  if (!d_to_dpp || !dpp_to_dp)
    throw StateError("intersection(" + std::to_string(d) + ", " +
                     std::to_string(dp) + ", " + std::to_string(dpp) +
                     ") requires the classes d->d'' and d''->d'");
  const Connectivity* d_to_zero = nullptr;
  const Connectivity* dp_to_zero = nullptr;
  if (d > dp) {
    d_to_zero = topology.connectivity(d, 0);
    dp_to_zero = topology.connectivity(dp, 0);
    if (!d_to_zero || !dp_to_zero)
      throw StateError("intersection with d > d' requires d->0 and d'->0");
  }

  const std::uint32_t n_rows = topology.entity_count(d);
  const std::uint32_t n_cols = topology.entity_count(dp);
  const std::uint32_t n_vertices = topology.entity_count(0);

  std::vector<std::uint32_t> seen(n_cols, invalid_index);
  std::vector<std::uint32_t> vertex_mark;
  if (d > dp) vertex_mark.assign(n_vertices, invalid_index);

  auto for_each_row = [&](auto&& emit) {
    for (std::uint32_t i = 0; i < n_rows; ++i) {
      if (d > dp)
        for (std::uint32_t v : d_to_zero->row(i)) vertex_mark[v] = i;
      for (std::uint32_t k : d_to_dpp->row(i)) {
        for (std::uint32_t j : dpp_to_dp->row(k)) {
          if (seen[j] == i) continue;
          seen[j] = i;
          bool incident;
          if (d == dp) {
            incident = (i != j);
          } else {
            incident = true;
            for (std::uint32_t v : dp_to_zero->row(j))
              if (vertex_mark[v] != i) {
                incident = false;
                break;
              }
          }
          if (incident) emit(i, j);
        }
      }
    }
  };

  std::vector<std::uint32_t> sizes(n_rows, 0);
  for_each_row([&](std::uint32_t i, std::uint32_t) { ++sizes[i]; });

  // reset stamps between the two passes
  seen.assign(seen.size(), invalid_index);
  if (d > dp) vertex_mark.assign(vertex_mark.size(), invalid_index);

  Connectivity out = Connectivity::with_row_sizes(sizes);
  std::vector<std::uint32_t> cursor(n_rows, 0);
  for_each_row([&](std::uint32_t i, std::uint32_t j) {
    out.mutable_row(i)[cursor[i]++] = j;
  });

  topology.set_connectivity(d, dp, std::move(out));
}

/// Compute D -> d and d -> 0 from D -> 0 and D -> D for 0 < d < D: the
/// sub-entities of dimension d of each cell, numbered so that incident
/// cells agree on shared entity indices. New entities get indices in
/// first-creating-cell order (template order within a cell). Runs twice
/// (count, then fill).
inline void build_entities(Mesh& mesh, Dim d,
                           BuildStrategy strategy = BuildStrategy::neighbor_scan) {
  MeshTopology& topology = mesh.topology();
  const Dim D = topology.dim();
  if (!(d > 0 && d < D))
    throw RangeError("build requires 0 < d < D, got d=" + std::to_string(d));
  const Connectivity* cells = topology.connectivity(D, 0);
  const Connectivity* cell_to_cell = topology.connectivity(D, D);
  if (!cells || !cell_to_cell)
    throw StateError("build requires the classes D->0 and D->D");

  const std::uint32_t n_cells = topology.entity_count(D);
  const auto tpls = local_vertex_templates(D, d);
  const std::uint32_t per_cell = static_cast<std::uint32_t>(tpls.size());
  const std::uint32_t width = d + 1;

  Connectivity cell_to_entity;   // D -> d, written in the fill pass
  Connectivity entity_to_vertex; // d -> 0

  std::vector<VertexKey> cell_keys, neighbor_keys;
  std::vector<std::uint32_t> resolved(per_cell);

  // One pass of Algorithm Build. In fill mode the connectivities are
  // written; in count mode only the number of distinct entities matters.
  auto scan_pass = [&](bool fill) -> std::uint32_t {
    std::uint32_t next = 0;
    for (std::uint32_t c = 0; c < n_cells; ++c) {
      detail::make_local_keys(tpls, cells->row(c), cell_keys);
      std::fill(resolved.begin(), resolved.end(), invalid_index);
      std::uint32_t unresolved = per_cell;
      for (std::uint32_t j : cell_to_cell->row(c)) {
        if (j >= c || unresolved == 0) continue;
        detail::make_local_keys(tpls, cells->row(j), neighbor_keys);
        for (std::uint32_t s = 0; s < per_cell; ++s) {
          if (resolved[s] != invalid_index) continue;
          for (std::uint32_t p = 0; p < per_cell; ++p) {
            if (neighbor_keys[p] == cell_keys[s]) {
              // index((D, j), d, v): slot p of the already-written row of j
              resolved[s] = fill ? cell_to_entity.row(j)[p] : 0;
              --unresolved;
              break;
            }
          }
        }
      }
      for (std::uint32_t s = 0; s < per_cell; ++s) {
        if (resolved[s] == invalid_index) {
          if (fill) {
            auto row = entity_to_vertex.mutable_row(next);
            std::copy(cell_keys[s].view().begin(), cell_keys[s].view().end(),
                      row.begin());
            cell_to_entity.mutable_row(c)[s] = next;
          }
          ++next;
        } else if (fill) {
          cell_to_entity.mutable_row(c)[s] = resolved[s];
        }
      }
    }
    return next;
  };

  // Map variant of one pass: global key -> index table, same traversal
  // order and therefore the same numbering as the reference variant.
  std::unordered_map<VertexKey, std::uint32_t, VertexKeyHash> index_of;
  auto map_pass = [&](bool fill) -> std::uint32_t {
    std::uint32_t next = 0;
    std::vector<bool> written;
    if (fill) written.assign(topology.entity_count(d), false);
    for (std::uint32_t c = 0; c < n_cells; ++c) {
      detail::make_local_keys(tpls, cells->row(c), cell_keys);
      for (std::uint32_t s = 0; s < per_cell; ++s) {
        const VertexKey& key = cell_keys[s];
        std::uint32_t index;
        if (fill) {
          index = index_of.at(key);
          if (!written[index]) {
            auto row = entity_to_vertex.mutable_row(index);
            std::copy(key.view().begin(), key.view().end(), row.begin());
            written[index] = true;
          }
          cell_to_entity.mutable_row(c)[s] = index;
        } else {
          auto [it, inserted] = index_of.try_emplace(key, next);
          if (inserted) ++next;
        }
      }
    }
    return next;
  };

  const bool use_map = (strategy == BuildStrategy::global_map);
  const std::uint32_t count = use_map ? map_pass(false) : scan_pass(false);
  topology.set_entity_count(d, count);
  cell_to_entity = Connectivity::with_uniform_rows(n_cells, per_cell);
  entity_to_vertex = Connectivity::with_uniform_rows(count, width);
  if (use_map)
    map_pass(true);
  else
    scan_pass(true);

  topology.set_connectivity(D, d, std::move(cell_to_entity));
  topology.set_connectivity(d, 0, std::move(entity_to_vertex));
}

inline void compute_connectivity(Mesh& mesh, Dim d, Dim dp,
                                 ComputeTrace* trace = nullptr,
                                 BuildStrategy strategy = BuildStrategy::neighbor_scan);

/// Make sure the entities of dimension d exist (N_d known), running Build
/// (and its D -> D prerequisite) if needed.
inline void ensure_entities(Mesh& mesh, Dim d, ComputeTrace* trace = nullptr,
                            BuildStrategy strategy = BuildStrategy::neighbor_scan) {
  MeshTopology& topology = mesh.topology();
  const Dim D = topology.dim();
  if (d > D)
    throw RangeError("dimension " + std::to_string(d) +
                     " out of range (mesh dimension: " + std::to_string(D) +
                     ")");
  if (topology.entity_count(d) != 0) return;
  // vertex and cell counts are set at construction, so 0 < d < D here
  compute_connectivity(mesh, D, D, trace, strategy);
  build_entities(mesh, d, strategy);
  if (trace) trace->push_back({ComputeStep::Op::build, d, 0, 0});
}

/// Compute any class d -> d' from the minimal class D -> 0 by recursive
/// application of Build, Transpose and Intersection:
///   - build missing entity dimensions first,
///   - return if the class is already stored,
///   - d < d': compute d' -> d, then transpose;
///   - otherwise intersect through d'' = D when d = d' = 0, else d'' = 0
///     (which also bootstraps D -> D itself).
/// Already-stored classes are left untouched, so repeated requests are
/// no-ops and intermediate classes stay cached; use MeshTopology::clear to
/// drop classes that are no longer needed.
inline void compute_connectivity(Mesh& mesh, Dim d, Dim dp,
                                 ComputeTrace* trace,
                                 BuildStrategy strategy) {
  MeshTopology& topology = mesh.topology();
  const Dim D = topology.dim();
  if (d > D || dp > D)
    throw RangeError("connectivity " + std::to_string(d) + "->" +
                     std::to_string(dp) + " out of range (mesh dimension: " +
                     std::to_string(D) + ")");
  ensure_entities(mesh, d, trace, strategy);
  ensure_entities(mesh, dp, trace, strategy);
  if (topology.has(d, dp)) return;

  if (d < dp) {
    compute_connectivity(mesh, dp, d, trace, strategy);
    transpose(topology, d, dp);
    if (trace) trace->push_back({ComputeStep::Op::transpose, d, dp, 0});
  } else if (dp == 0 && d > 0 && d < D) {
    // only reachable when a cleared d -> 0 is requested again: re-Build
    compute_connectivity(mesh, D, D, trace, strategy);
    build_entities(mesh, d, strategy);
    if (trace) trace->push_back({ComputeStep::Op::build, d, 0, 0});
  } else {
    const Dim dpp = (d == 0 && dp == 0) ? D : 0;
    compute_connectivity(mesh, d, dpp, trace, strategy);
    compute_connectivity(mesh, dpp, dp, trace, strategy);
    intersection(topology, d, dp, dpp);
    if (trace) trace->push_back({ComputeStep::Op::intersection, d, dp, dpp});
  }
}

} // namespace meshcore
