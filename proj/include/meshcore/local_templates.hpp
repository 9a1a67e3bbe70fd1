#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "meshcore/error.hpp"
#include "meshcore/types.hpp"

namespace meshcore {

/// Sorted tuple of d+1 global vertex indices identifying a candidate
/// entity of dimension d (d <= 2, so at most three vertices).
struct VertexKey {
  std::array<EntityIndex, 3> v{};
  std::uint8_t n = 0;

  static VertexKey sorted_from(std::span<const EntityIndex> vertices) {
    VertexKey k;
    k.n = static_cast<std::uint8_t>(vertices.size());
    std::copy(vertices.begin(), vertices.end(), k.v.begin());
    std::sort(k.v.begin(), k.v.begin() + k.n);
    return k;
  }

  std::span<const EntityIndex> view() const { return {v.data(), n}; }

  bool operator==(const VertexKey& o) const {
    if (n != o.n) return false;
    for (std::uint8_t i = 0; i < n; ++i)
      if (v[i] != o.v[i]) return false;
    return true;
  }

  bool operator<(const VertexKey& o) const {
    return std::lexicographical_compare(v.begin(), v.begin() + n, o.v.begin(),
                                        o.v.begin() + o.n);
  }
};

struct VertexKeyHash {
  std::size_t operator()(const VertexKey& k) const {
    std::size_t h = k.n;
    for (std::uint8_t i = 0; i < k.n; ++i)
      h = h * 0x9e3779b97f4a7c15ull + k.v[i];
    return h;
  }
};

/// Local vertex positions of the dimension-d sub-entities of a cell with
/// topological dimension D: all strictly increasing (d+1)-tuples of
/// positions 0..D, in reverse lexicographic order. This is the
/// opposite-vertex convention (edge k of a triangle omits vertex k, face k
/// of a tetrahedron omits vertex k) and matches the UFC ordering for
/// tetrahedron edges.
inline std::vector<std::vector<std::uint8_t>> local_vertex_templates(Dim D,
                                                                     Dim d) {
  if (d == 0 || d >= D)
    throw RangeError("local templates require 0 < d < D, got d=" +
                     std::to_string(d) + ", D=" + std::to_string(D));
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> tuple(d + 1);
  // enumerate lexicographically, then reverse
  for (std::uint8_t i = 0; i <= d; ++i) tuple[i] = i;
  while (true) {
    out.push_back(tuple);
    // next combination
    int pos = static_cast<int>(d);
    while (pos >= 0 && tuple[pos] == D - d + pos) --pos;
    if (pos < 0) break;
    ++tuple[pos];
    for (int i = pos + 1; i <= static_cast<int>(d); ++i)
      tuple[i] = tuple[i - 1] + 1;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

namespace detail {

/// Apply position templates to the ascending-sorted vertices of one cell,
/// writing one key per template into `out` (cleared first).
inline void make_local_keys(const std::vector<std::vector<std::uint8_t>>& tpls,
                            std::span<const EntityIndex> cell_vertices,
                            std::vector<VertexKey>& out) {
  std::array<EntityIndex, 4> sorted{};
  std::copy(cell_vertices.begin(), cell_vertices.end(), sorted.begin());
  std::sort(sorted.begin(), sorted.begin() + cell_vertices.size());
  out.clear();
  for (const auto& tpl : tpls) {
    VertexKey k;
    k.n = static_cast<std::uint8_t>(tpl.size());
    for (std::uint8_t i = 0; i < k.n; ++i) k.v[i] = sorted[tpl[i]];
    out.push_back(k);
  }
}

} // namespace detail

/// The vertex sets of the dimension-d sub-entities of one cell, one sorted
/// key per template tuple, in template order.
inline std::vector<VertexKey>
local_entity_vertex_sets(CellKind kind, Dim d,
                         std::span<const EntityIndex> cell_vertices) {
  const Dim D = cell_dim(kind);
  if (cell_vertices.size() != vertices_per_cell(kind))
    throw ArgumentError("cell vertex tuple has " +
                        std::to_string(cell_vertices.size()) +
                        " entries, expected " +
                        std::to_string(vertices_per_cell(kind)));
  const auto tpls = local_vertex_templates(D, d);
  std::vector<VertexKey> keys;
  keys.reserve(tpls.size());
  detail::make_local_keys(tpls, cell_vertices, keys);
  return keys;
}

} // namespace meshcore
