#pragma once

// Shared test meshes.

#include "meshcore/editor.hpp"
#include "meshcore/mesh.hpp"

namespace fixtures {

// The two-triangle square with cells (0, 1, 3) and (1, 2, 3): the mesh
// whose 2 -> 0 storage is indices [0, 1, 3, 1, 2, 3], offsets [0, 3, 6].
inline meshcore::Mesh two_triangles() {
  meshcore::MeshEditor editor;
  editor.open(meshcore::CellKind::triangle, 2, 2);
  editor.init_vertices(4);
  editor.add_vertex(0, 0.0, 0.0);
  editor.add_vertex(1, 1.0, 0.0);
  editor.add_vertex(2, 1.0, 1.0);
  editor.add_vertex(3, 0.0, 1.0);
  editor.init_cells(2);
  editor.add_cell(0, 0, 1, 3);
  editor.add_cell(1, 1, 2, 3);
  return editor.close();
}

// The editor demo square: cells (0, 1, 2) and (0, 2, 3).
inline meshcore::Mesh editor_square() {
  meshcore::MeshEditor editor;
  editor.open(meshcore::CellKind::triangle, 2, 2);
  editor.init_vertices(4);
  editor.add_vertex(0, 0.0, 0.0);
  editor.add_vertex(1, 1.0, 0.0);
  editor.add_vertex(2, 1.0, 1.0);
  editor.add_vertex(3, 0.0, 1.0);
  editor.init_cells(2);
  editor.add_cell(0, 0, 1, 2);
  editor.add_cell(1, 0, 2, 3);
  return editor.close();
}

inline meshcore::Mesh single_triangle() {
  meshcore::MeshEditor editor;
  editor.open(meshcore::CellKind::triangle, 2, 2);
  editor.init_vertices(3);
  editor.add_vertex(0, 0.0, 0.0);
  editor.add_vertex(1, 1.0, 0.0);
  editor.add_vertex(2, 0.0, 1.0);
  editor.init_cells(1);
  editor.add_cell(0, 0, 1, 2);
  return editor.close();
}

inline meshcore::Mesh single_tetrahedron() {
  meshcore::MeshEditor editor;
  editor.open(meshcore::CellKind::tetrahedron, 3, 3);
  editor.init_vertices(4);
  editor.add_vertex(0, 0.0, 0.0, 0.0);
  editor.add_vertex(1, 1.0, 0.0, 0.0);
  editor.add_vertex(2, 0.0, 1.0, 0.0);
  editor.add_vertex(3, 0.0, 0.0, 1.0);
  editor.init_cells(1);
  editor.add_cell(0, 0, 1, 2, 3);
  return editor.close();
}

// Two triangles sharing only vertex 2: the vertex-only-contact shape that
// distributed numbering must reject when split between two ranks.
inline meshcore::Mesh bowtie() {
  meshcore::MeshEditor editor;
  editor.open(meshcore::CellKind::triangle, 2, 2);
  editor.init_vertices(5);
  editor.add_vertex(0, 0.0, 0.0);
  editor.add_vertex(1, 1.0, 0.0);
  editor.add_vertex(2, 1.0, 1.0);
  editor.add_vertex(3, 2.0, 1.0);
  editor.add_vertex(4, 2.0, 2.0);
  editor.init_cells(2);
  editor.add_cell(0, 0, 1, 2);
  editor.add_cell(1, 2, 3, 4);
  return editor.close();
}

} // namespace fixtures
