#pragma once

#include <cstdint>
#include <vector>

#include "meshcore/compute.hpp"
#include "meshcore/editor.hpp"
#include "meshcore/error.hpp"
#include "meshcore/mesh.hpp"
#include "meshcore/mesh_function.hpp"

namespace meshcore {

/// A boundary mesh plus the two mappings back into the parent mesh:
/// boundary vertex -> parent vertex index and boundary cell -> parent
/// facet index. The boundary mesh owns copies of its coordinates and is a
/// regular mesh (it can be refined, written to file, and so on).
struct BoundaryExtraction {
  Mesh boundary;
  MeshFunction<std::uint32_t> vertex_map; // on boundary vertices
  MeshFunction<std::uint32_t> cell_map;   // on boundary cells
};

/// Extract the boundary: the facets incident to exactly one cell. Boundary
/// cells are numbered densely in ascending parent-facet order and boundary
/// vertices in ascending parent-vertex order, so the maps are monotone.
inline BoundaryExtraction boundary_mesh(Mesh& mesh) {
  const Dim D = mesh.tdim();
  if (D == 0)
    throw ArgumentError("boundary extraction is unsupported for "
                        "dimension-0 meshes");
  const Dim fdim = D - 1;
  if (fdim > 0) compute_connectivity(mesh, fdim, 0);
  compute_connectivity(mesh, fdim, D);

  const MeshTopology& topology = mesh.topology();
  const Connectivity* facet_to_vertex = topology.connectivity(fdim, 0);
  const Connectivity* facet_to_cell = topology.connectivity(fdim, D);
  const std::uint32_t n_facets = topology.entity_count(fdim);
  const std::uint32_t n_vertices = topology.entity_count(0);

  // a dimension-0 facet is its own single vertex
  auto facet_vertices = [&](const std::uint32_t& f) {
    return fdim == 0 ? std::span<const EntityIndex>(&f, 1)
                     : facet_to_vertex->row(f);
  };

  std::vector<std::uint32_t> boundary_facets;
  for (std::uint32_t f = 0; f < n_facets; ++f)
    if (facet_to_cell->row_size(f) == 1) boundary_facets.push_back(f);

  std::vector<std::uint32_t> local_vertex(n_vertices, invalid_index);
  std::vector<std::uint32_t> parent_vertex;
  for (const std::uint32_t& f : boundary_facets)
    for (std::uint32_t v : facet_vertices(f)) local_vertex[v] = 0; // mark
  for (std::uint32_t v = 0; v < n_vertices; ++v)
    if (local_vertex[v] != invalid_index) {
      local_vertex[v] = static_cast<std::uint32_t>(parent_vertex.size());
      parent_vertex.push_back(v);
    }

  MeshEditor editor;
  editor.open(facet_kind(mesh.kind()), fdim, mesh.gdim());
  editor.init_vertices(static_cast<std::uint32_t>(parent_vertex.size()));
  for (std::uint32_t b = 0; b < parent_vertex.size(); ++b)
    editor.add_vertex(b, mesh.point(parent_vertex[b]));
  editor.init_cells(static_cast<std::uint32_t>(boundary_facets.size()));
  std::vector<EntityIndex> tuple(fdim + 1);
  for (std::uint32_t b = 0; b < boundary_facets.size(); ++b) {
    const auto row = facet_vertices(boundary_facets[b]);
    for (std::size_t i = 0; i < row.size(); ++i)
      tuple[i] = local_vertex[row[i]];
    editor.add_cell(b, tuple);
  }
  Mesh boundary = editor.close();

  MeshFunction<std::uint32_t> vertex_map(0, std::move(parent_vertex));
  MeshFunction<std::uint32_t> cell_map(fdim, std::move(boundary_facets));
  return {std::move(boundary), std::move(vertex_map), std::move(cell_map)};
}

} // namespace meshcore
