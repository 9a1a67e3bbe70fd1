#pragma once

#include <cstdint>
#include <string>

#include "meshcore/error.hpp"

namespace meshcore {

/// Topological dimension of a mesh entity (0 = vertex, ..., D = cell).
using Dim = std::uint32_t;

/// Index of a mesh entity within its topological dimension.
/// Fixed at 32 bits; meshes beyond 2^32-1 entities per dimension are
/// unsupported.
using EntityIndex = std::uint32_t;

inline constexpr EntityIndex invalid_index = 0xffffffffu;

/// Simplex cell types. `point` only appears as the cell type of the
/// boundary of an interval mesh; the editor and generators produce the
/// other three.
enum class CellKind : std::uint8_t { point, interval, triangle, tetrahedron };

constexpr Dim cell_dim(CellKind kind) {
  switch (kind) {
  case CellKind::point: return 0;
  case CellKind::interval: return 1;
  case CellKind::triangle: return 2;
  case CellKind::tetrahedron: return 3;
  }
  return 0;
}

constexpr std::uint32_t vertices_per_cell(CellKind kind) {
  return cell_dim(kind) + 1;
}

inline std::string to_string(CellKind kind) {
  switch (kind) {
  case CellKind::point: return "point";
  case CellKind::interval: return "interval";
  case CellKind::triangle: return "triangle";
  case CellKind::tetrahedron: return "tetrahedron";
  }
  return "?";
}

inline CellKind cell_kind_from_string(const std::string& name) {
  if (name == "point") return CellKind::point;
  if (name == "interval") return CellKind::interval;
  if (name == "triangle") return CellKind::triangle;
  if (name == "tetrahedron") return CellKind::tetrahedron;
  throw ArgumentError("unknown cell kind \"" + name + "\"");
}

/// Cell kind of a facet (one topological dimension down).
inline CellKind facet_kind(CellKind kind) {
  switch (kind) {
  case CellKind::interval: return CellKind::point;
  case CellKind::triangle: return CellKind::interval;
  case CellKind::tetrahedron: return CellKind::triangle;
  case CellKind::point: break;
  }
  throw ArgumentError("point cells have no facets");
}

constexpr std::uint32_t binomial(std::uint32_t n, std::uint32_t k) {
  if (k > n) return 0;
  std::uint32_t r = 1;
  for (std::uint32_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

/// Number of dimension-d sub-entities of a cell: C(D+1, d+1).
constexpr std::uint32_t num_subentities(CellKind kind, Dim d) {
  return binomial(cell_dim(kind) + 1, d + 1);
}

} // namespace meshcore
