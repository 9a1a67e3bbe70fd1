#pragma once

#include <cstdint>
#include <vector>

#include "meshcore/editor.hpp"
#include "meshcore/error.hpp"
#include "meshcore/mesh.hpp"

namespace meshcore {

/// Mesh of [0,1] with nx equal cells; vertices at i/nx in ascending order.
inline Mesh unit_interval(std::uint32_t nx) {
  if (nx == 0) throw ArgumentError("subdivision count must be positive");
  MeshEditor editor;
  editor.open(CellKind::interval, 1, 1);
  editor.init_vertices(nx + 1);
  for (std::uint32_t i = 0; i <= nx; ++i)
    editor.add_vertex(i, static_cast<double>(i) / nx);
  editor.init_cells(nx);
  for (std::uint32_t i = 0; i < nx; ++i) editor.add_cell(i, i, i + 1);
  return editor.close();
}

/// Triangular mesh of the unit square on an (nx+1) x (ny+1) lattice in
/// row-major order (x fastest). Each lattice cell is split into two
/// triangles along the diagonal from its lower-left to its upper-right
/// corner; cells are numbered lattice-major, then by sub-triangle.
inline Mesh unit_square(std::uint32_t nx, std::uint32_t ny) {
  if (nx == 0 || ny == 0)
    throw ArgumentError("subdivision counts must be positive");
  MeshEditor editor;
  editor.open(CellKind::triangle, 2, 2);
  const std::uint32_t w = nx + 1;
  editor.init_vertices(w * (ny + 1));
  for (std::uint32_t iy = 0; iy <= ny; ++iy)
    for (std::uint32_t ix = 0; ix <= nx; ++ix)
      editor.add_vertex(iy * w + ix, static_cast<double>(ix) / nx,
                        static_cast<double>(iy) / ny);
  editor.init_cells(2 * nx * ny);
  std::uint32_t c = 0;
  for (std::uint32_t iy = 0; iy < ny; ++iy) {
    for (std::uint32_t ix = 0; ix < nx; ++ix) {
      const std::uint32_t v00 = iy * w + ix;
      const std::uint32_t v10 = v00 + 1;
      const std::uint32_t v01 = v00 + w;
      const std::uint32_t v11 = v01 + 1;
      editor.add_cell(c++, v00, v10, v11);
      editor.add_cell(c++, v00, v01, v11);
    }
  }
  return editor.close();
}

inline Mesh unit_square(std::uint32_t n) { return unit_square(n, n); }

/// Tetrahedral mesh of the unit cube on an (nx+1) x (ny+1) x (nz+1)
/// lattice in row-major order (x fastest). Each lattice cell is split
/// into six tetrahedra sharing its main diagonal (Kuhn subdivision), one
/// per monotone lattice path from the low to the high corner; the split
/// is identical in every cell, so neighboring cells agree on the shared
/// face diagonals. Cells are numbered lattice-major, then by path.
inline Mesh unit_cube(std::uint32_t nx, std::uint32_t ny, std::uint32_t nz) {
  if (nx == 0 || ny == 0 || nz == 0)
    throw ArgumentError("subdivision counts must be positive");
  MeshEditor editor;
  editor.open(CellKind::tetrahedron, 3, 3);
  const std::uint32_t w = nx + 1;
  const std::uint32_t h = ny + 1;
  editor.init_vertices(w * h * (nz + 1));
  for (std::uint32_t iz = 0; iz <= nz; ++iz)
    for (std::uint32_t iy = 0; iy <= ny; ++iy)
      for (std::uint32_t ix = 0; ix <= nx; ++ix)
        editor.add_vertex((iz * h + iy) * w + ix,
                          static_cast<double>(ix) / nx,
                          static_cast<double>(iy) / ny,
                          static_cast<double>(iz) / nz);

  // vertex index steps along x, y, z
  const std::uint32_t step[3] = {1, w, w * h};
  // the six monotone paths (axis permutations), in lexicographic order
  static constexpr std::uint8_t paths[6][3] = {{0, 1, 2}, {0, 2, 1},
                                               {1, 0, 2}, {1, 2, 0},
                                               {2, 0, 1}, {2, 1, 0}};

  editor.init_cells(6 * nx * ny * nz);
  std::uint32_t c = 0;
  for (std::uint32_t iz = 0; iz < nz; ++iz) {
    for (std::uint32_t iy = 0; iy < ny; ++iy) {
      for (std::uint32_t ix = 0; ix < nx; ++ix) {
        const std::uint32_t v0 = (iz * h + iy) * w + ix;
        for (const auto& p : paths) {
          const std::uint32_t v1 = v0 + step[p[0]];
          const std::uint32_t v2 = v1 + step[p[1]];
          const std::uint32_t v3 = v2 + step[p[2]];
          editor.add_cell(c++, v0, v1, v2, v3);
        }
      }
    }
  }
  return editor.close();
}

inline Mesh unit_cube(std::uint32_t n) { return unit_cube(n, n, n); }

} // namespace meshcore
