#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "meshcore/compute.hpp"
#include "meshcore/editor.hpp"
#include "meshcore/error.hpp"
#include "meshcore/measure.hpp"
#include "meshcore/mesh.hpp"

namespace meshcore {

namespace detail {

// Local edge slot of the pair (a, b), a < b, within the reverse-lex edge
// templates of a cell of dimension D.
inline std::uint32_t local_edge_slot(Dim D, std::uint32_t a, std::uint32_t b) {
  if (D == 2) {
    // templates (1,2), (0,2), (0,1)
    if (a == 1) return 0;
    return b == 2 ? 1 : 2;
  }
  // D == 3: templates (2,3), (1,3), (1,2), (0,3), (0,2), (0,1)
  static constexpr std::uint32_t slot[4][4] = {{9, 5, 4, 3},
                                               {9, 9, 2, 1},
                                               {9, 9, 9, 0},
                                               {9, 9, 9, 9}};
  return slot[a][b];
}

} // namespace detail

/// One uniform refinement step. Intervals are bisected; triangles split
/// 1 -> 4 through their edge midpoints; tetrahedra split 1 -> 8 into four
/// corner tetrahedra plus four from the inner octahedron, cut along its
/// shortest diagonal (ties broken by the smaller midpoint index pair).
/// New vertices are the old vertices 0..N_0-1 followed by the edge
/// midpoints in edge-index order; child cells are grouped by parent in
/// parent order. Children preserve the parent's orientation, so signed
/// volumes sum to the parent volume.
inline Mesh refine_uniform(Mesh& mesh) {
  const Dim D = mesh.tdim();
  if (D == 0)
    throw ArgumentError("refinement is unsupported for dimension-0 meshes");

  // midpoints need the edges; cells need their edge lists for D >= 2
  if (D >= 2) {
    compute_connectivity(mesh, 1, 0);
    compute_connectivity(mesh, D, 1);
  }

  const MeshTopology& topology = mesh.topology();
  const std::uint32_t n_vertices = topology.entity_count(0);
  const std::uint32_t n_cells = topology.entity_count(D);
  const std::uint32_t n_edges = topology.entity_count(1); // = n_cells if D==1
  const std::uint32_t gdim = mesh.gdim();
  const Connectivity* cells = topology.connectivity(D, 0);
  const Connectivity* edge_to_vertex =
      D >= 2 ? topology.connectivity(1, 0) : cells;
  const Connectivity* cell_to_edge =
      D >= 2 ? topology.connectivity(D, 1) : nullptr;

  MeshEditor editor;
  editor.open(mesh.kind(), D, gdim);
  editor.init_vertices(n_vertices + n_edges);
  std::vector<double> x(gdim);
  for (std::uint32_t v = 0; v < n_vertices; ++v)
    editor.add_vertex(v, mesh.point(v));
  for (std::uint32_t e = 0; e < n_edges; ++e) {
    const auto ev = edge_to_vertex->row(e);
    const auto p = mesh.point(ev[0]);
    const auto q = mesh.point(ev[1]);
    for (std::uint32_t i = 0; i < gdim; ++i) x[i] = 0.5 * (p[i] + q[i]);
    editor.add_vertex(n_vertices + e, x);
  }

  const std::uint32_t children = 1u << D;
  editor.init_cells(children * n_cells);
  std::uint32_t next_cell = 0;

  if (D == 1) {
    for (std::uint32_t c = 0; c < n_cells; ++c) {
      const auto cv = cells->row(c);
      const EntityIndex m = n_vertices + c; // the cell is its own edge
      editor.add_cell(next_cell++, cv[0], m);
      editor.add_cell(next_cell++, m, cv[1]);
    }
    return editor.close();
  }

  std::array<EntityIndex, 4> s{};
  for (std::uint32_t c = 0; c < n_cells; ++c) {
    const auto cv = cells->row(c);
    std::copy(cv.begin(), cv.end(), s.begin());
    std::sort(s.begin(), s.begin() + D + 1);
    const auto ce = cell_to_edge->row(c);
    // midpoint vertex of the local pair (a, b) of the sorted tuple
    auto mid = [&](std::uint32_t a, std::uint32_t b) -> EntityIndex {
      return n_vertices + ce[detail::local_edge_slot(D, a, b)];
    };

    // Children are constructed with the orientation of the sorted tuple;
    // flip them when the stored tuple is an odd permutation of it, so
    // each child keeps the parent's orientation and signed volumes sum.
    int inversions = 0;
    for (std::size_t i = 0; i < cv.size(); ++i)
      for (std::size_t j = i + 1; j < cv.size(); ++j)
        if (cv[i] > cv[j]) ++inversions;
    const bool flip = (inversions % 2) == 1;
    auto add_child = [&](std::array<EntityIndex, 4> t) {
      if (flip) std::swap(t[1], t[2]);
      editor.add_cell(next_cell++,
                      std::span<const EntityIndex>(t.data(), D + 1));
    };

    if (D == 2) {
      // corner triangles substitute midpoints positionally, preserving
      // orientation; the medial triangle is a scaled copy
      add_child({s[0], mid(0, 1), mid(0, 2), 0});
      add_child({mid(0, 1), s[1], mid(1, 2), 0});
      add_child({mid(0, 2), mid(1, 2), s[2], 0});
      add_child({mid(1, 2), mid(0, 2), mid(0, 1), 0});
      continue;
    }

    // D == 3: four corner tetrahedra
    const EntityIndex m01 = mid(0, 1), m02 = mid(0, 2), m03 = mid(0, 3);
    const EntityIndex m12 = mid(1, 2), m13 = mid(1, 3), m23 = mid(2, 3);
    add_child({s[0], m01, m02, m03});
    add_child({m01, s[1], m12, m13});
    add_child({m02, m12, s[2], m23});
    add_child({m03, m13, m23, s[3]});

    auto coord = [&](EntityIndex vtx, int i) -> double {
      if (vtx < n_vertices) return mesh.point(vtx)[i];
      const auto ev = edge_to_vertex->row(vtx - n_vertices);
      return 0.5 * (mesh.point(ev[0])[i] + mesh.point(ev[1])[i]);
    };
    auto sqdist = [&](EntityIndex a, EntityIndex b) {
      double out = 0.0;
      for (int i = 0; i < 3; ++i) {
        const double diff = coord(a, i) - coord(b, i);
        out += diff * diff;
      }
      return out;
    };

    // inner octahedron: cut along the shortest of its three diagonals
    struct Diagonal {
      EntityIndex a, b;
      std::array<EntityIndex, 4> equator; // cycle around the diagonal
    };
    const Diagonal diagonals[3] = {
        {m01, m23, {m02, m03, m13, m12}},
        {m02, m13, {m01, m03, m23, m12}},
        {m03, m12, {m01, m02, m23, m13}},
    };
    int best = 0;
    double best_len = sqdist(diagonals[0].a, diagonals[0].b);
    for (int k = 1; k < 3; ++k) {
      const double len = sqdist(diagonals[k].a, diagonals[k].b);
      const auto key = std::minmax(diagonals[k].a, diagonals[k].b);
      const auto best_key = std::minmax(diagonals[best].a, diagonals[best].b);
      if (len < best_len || (len == best_len && key < best_key)) {
        best = k;
        best_len = len;
      }
    }
    const Diagonal& diag = diagonals[best];
    const double parent_volume = cell_signed_volume(mesh, c);
    for (int k = 0; k < 4; ++k) {
      std::array<EntityIndex, 4> tet = {diag.a, diag.b, diag.equator[k],
                                        diag.equator[(k + 1) % 4]};
      double ux[3], vx[3], wx[3];
      for (int i = 0; i < 3; ++i) {
        ux[i] = coord(tet[1], i) - coord(tet[0], i);
        vx[i] = coord(tet[2], i) - coord(tet[0], i);
        wx[i] = coord(tet[3], i) - coord(tet[0], i);
      }
      const double det = ux[0] * (vx[1] * wx[2] - vx[2] * wx[1]) -
                         ux[1] * (vx[0] * wx[2] - vx[2] * wx[0]) +
                         ux[2] * (vx[0] * wx[1] - vx[1] * wx[0]);
      // orient to the parent's sign so child volumes sum to the parent
      if ((det < 0) != (parent_volume < 0)) std::swap(tet[2], tet[3]);
      editor.add_cell(next_cell++,
                      std::span<const EntityIndex>(tet.data(), 4));
    }
  }

  return editor.close();
}

} // namespace meshcore
