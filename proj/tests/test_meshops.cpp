#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "meshcore/boundary.hpp"
#include "meshcore/compute.hpp"
#include "meshcore/generate.hpp"
#include "meshcore/measure.hpp"
#include "meshcore/refine.hpp"
#include "meshcore/validate.hpp"

#include "fixtures.hpp"

using namespace meshcore;

namespace {

// the two maps must be consistent: the original vertices of each boundary
// cell equal the vertex set of the original facet it maps to
void check_map_consistency(Mesh& mesh, BoundaryExtraction& extraction) {
  const Dim fdim = mesh.tdim() - 1;
  const Connectivity* boundary_cells =
      extraction.boundary.topology().connectivity(fdim, 0);
  for (std::uint32_t b = 0; b < extraction.boundary.num_cells(); ++b) {
    std::set<std::uint32_t> through_vertex_map;
    for (std::uint32_t v : boundary_cells->row(b))
      through_vertex_map.insert(extraction.vertex_map.get(v));

    std::set<std::uint32_t> original_facet;
    const std::uint32_t f = extraction.cell_map.get(b);
    if (fdim == 0) {
      original_facet.insert(f);
    } else {
      for (std::uint32_t v :
           mesh.topology().connectivity(fdim, 0)->row(f))
        original_facet.insert(v);
    }
    CHECK(through_vertex_map == original_facet);
  }
  // both maps are injective
  std::set<std::uint32_t> vertex_targets(
      extraction.vertex_map.values().begin(),
      extraction.vertex_map.values().end());
  CHECK(vertex_targets.size() == extraction.vertex_map.size());
  std::set<std::uint32_t> cell_targets(extraction.cell_map.values().begin(),
                                       extraction.cell_map.values().end());
  CHECK(cell_targets.size() == extraction.cell_map.size());
}

// every boundary (D-2)-entity is incident to exactly two boundary cells
void check_closed_manifold(Mesh& boundary) {
  const Dim bd = boundary.tdim();
  compute_connectivity(boundary, bd - 1, bd);
  const Connectivity* ridge_to_cell =
      boundary.topology().connectivity(bd - 1, bd);
  for (std::uint32_t r = 0; r < ridge_to_cell->num_rows(); ++r)
    CHECK(ridge_to_cell->row_size(r) == 2);
}

double total_volume(const Mesh& mesh) {
  double sum = 0.0;
  for (std::uint32_t c = 0; c < mesh.num_cells(); ++c)
    sum += cell_signed_volume(mesh, c);
  return sum;
}

} // namespace

TEST_CASE("boundary of the two-triangle mesh excludes the diagonal") {
  Mesh mesh = fixtures::two_triangles();
  BoundaryExtraction extraction = boundary_mesh(mesh);
  CHECK(extraction.boundary.num_vertices() == 4);
  CHECK(extraction.boundary.num_cells() == 4);
  CHECK(extraction.boundary.kind() == CellKind::interval);

  // the diagonal (1, 3) is incident to both cells, so no boundary cell
  // maps to it
  const Connectivity* e2v = mesh.topology().connectivity(1, 0);
  for (std::uint32_t b = 0; b < 4; ++b) {
    const auto row = e2v->row(extraction.cell_map.get(b));
    std::vector<std::uint32_t> verts(row.begin(), row.end());
    std::sort(verts.begin(), verts.end());
    CHECK(verts != std::vector<std::uint32_t>{1, 3});
  }
  check_map_consistency(mesh, extraction);
}

TEST_CASE("boundary of the unit cube") {
  Mesh mesh = unit_cube(1);
  BoundaryExtraction extraction = boundary_mesh(mesh);
  CHECK(extraction.boundary.num_vertices() == 8);
  CHECK(extraction.boundary.num_cells() == 12);
  CHECK(extraction.boundary.kind() == CellKind::triangle);
  CHECK(extraction.boundary.gdim() == 3);
  CHECK(validate(extraction.boundary).ok);
  check_map_consistency(mesh, extraction);
  check_closed_manifold(extraction.boundary);
}

TEST_CASE("boundary of an interval mesh is its endpoints") {
  Mesh mesh = unit_interval(2);
  BoundaryExtraction extraction = boundary_mesh(mesh);
  CHECK(extraction.boundary.num_vertices() == 2);
  CHECK(extraction.boundary.num_cells() == 2);
  CHECK(extraction.boundary.kind() == CellKind::point);
  CHECK(extraction.cell_map.get(0) == 0);
  CHECK(extraction.cell_map.get(1) == 2);
  CHECK(extraction.boundary.point(0)[0] == doctest::Approx(0.0));
  CHECK(extraction.boundary.point(1)[0] == doctest::Approx(1.0));
  check_map_consistency(mesh, extraction);

  CHECK_THROWS_AS(boundary_mesh(extraction.boundary), ArgumentError);
}

TEST_CASE("boundary renumbering is monotone") {
  Mesh mesh = unit_square(3, 3);
  BoundaryExtraction extraction = boundary_mesh(mesh);
  CHECK(std::is_sorted(extraction.vertex_map.values().begin(),
                       extraction.vertex_map.values().end()));
  CHECK(std::is_sorted(extraction.cell_map.values().begin(),
                       extraction.cell_map.values().end()));
  CHECK(extraction.boundary.num_cells() == 12); // 4n boundary edges
  check_map_consistency(mesh, extraction);
  check_closed_manifold(extraction.boundary);
}

TEST_CASE("the boundary mesh is a mesh: it can be refined") {
  Mesh mesh = unit_cube(1);
  BoundaryExtraction extraction = boundary_mesh(mesh);
  Mesh refined = refine_uniform(extraction.boundary);
  CHECK(refined.num_cells() == 4 * 12);
  CHECK(validate(refined).ok);
  check_closed_manifold(refined);
}

TEST_CASE("refinement counting laws") {
  Mesh interval = unit_interval(3);
  Mesh fine_interval = refine_uniform(interval);
  CHECK(fine_interval.num_cells() == 2 * 3);
  CHECK(fine_interval.num_vertices() == 4 + 3);
  CHECK(fine_interval.point(4)[0] == doctest::Approx(1.0 / 6.0));

  Mesh two = fixtures::two_triangles();
  Mesh fine = refine_uniform(two);
  CHECK(fine.num_cells() == 8);      // 2^D * N_D
  CHECK(fine.num_vertices() == 9);   // N_0 + N_1 = 4 + 5
  CHECK(validate(fine).ok);

  Mesh cube = unit_cube(1);
  compute_connectivity(cube, 1, 0);
  const std::uint32_t edges = cube.topology().entity_count(1);
  Mesh fine_cube = refine_uniform(cube);
  CHECK(fine_cube.num_cells() == 8 * 6);
  CHECK(fine_cube.num_vertices() == 8 + edges);
  CHECK(validate(fine_cube).ok);
}

TEST_CASE("refining twice multiplies cells by 4^D") {
  Mesh square = unit_square(2, 2);
  Mesh once = refine_uniform(square);
  Mesh twice = refine_uniform(once);
  CHECK(twice.num_cells() == 16 * square.num_cells());

  Mesh cube = unit_cube(1);
  Mesh cube_once = refine_uniform(cube);
  Mesh cube_twice = refine_uniform(cube_once);
  CHECK(cube_twice.num_cells() == 64 * cube.num_cells());
}

TEST_CASE("refinement preserves signed volume per parent") {
  for (int shape = 0; shape < 3; ++shape) {
    Mesh mesh = shape == 0   ? unit_square(2, 2)
                : shape == 1 ? unit_cube(2)
                             : fixtures::single_tetrahedron();
    CAPTURE(shape);
    const Dim D = mesh.tdim();
    const std::uint32_t children = 1u << D;
    Mesh fine = refine_uniform(mesh);
    for (std::uint32_t parent = 0; parent < mesh.num_cells(); ++parent) {
      const double parent_volume = cell_signed_volume(mesh, parent);
      double child_sum = 0.0;
      for (std::uint32_t k = 0; k < children; ++k)
        child_sum += cell_signed_volume(fine, parent * children + k);
      CHECK(std::abs(child_sum - parent_volume) <=
            1e-12 * std::abs(parent_volume));
    }
    CHECK(total_volume(fine) == doctest::Approx(total_volume(mesh)));
  }
}

TEST_CASE("refinement preserves orientation of inverted parents") {
  // a deliberately negatively-oriented triangle
  MeshEditor editor;
  editor.open(CellKind::triangle, 2, 2);
  editor.init_vertices(3);
  editor.add_vertex(0, 0.0, 0.0);
  editor.add_vertex(1, 1.0, 0.0);
  editor.add_vertex(2, 0.0, 1.0);
  editor.init_cells(1);
  editor.add_cell(0, 0, 2, 1); // negative area
  Mesh mesh = editor.close();
  const double parent_volume = cell_signed_volume(mesh, 0);
  CHECK(parent_volume < 0);

  Mesh fine = refine_uniform(mesh);
  double child_sum = 0.0;
  for (std::uint32_t k = 0; k < 4; ++k)
    child_sum += cell_signed_volume(fine, k);
  CHECK(child_sum == doctest::Approx(parent_volume));
  for (std::uint32_t k = 0; k < 4; ++k)
    CHECK(cell_signed_volume(fine, k) < 0);
}

TEST_CASE("refined unit cube keeps Euler characteristic 1 and a closed boundary") {
  Mesh mesh = unit_cube(1);
  Mesh fine = refine_uniform(mesh);
  for (Dim d = 0; d <= 3; ++d) ensure_entities(fine, d);
  long long euler = 0;
  for (Dim d = 0; d <= 3; ++d) {
    const long long count = fine.topology().entity_count(d);
    euler += (d % 2 == 0) ? count : -count;
  }
  CHECK(euler == 1);
  BoundaryExtraction extraction = boundary_mesh(fine);
  check_closed_manifold(extraction.boundary);
}

TEST_CASE("refinement rejects dimension-0 meshes") {
  Mesh mesh = unit_interval(2);
  BoundaryExtraction extraction = boundary_mesh(mesh);
  CHECK_THROWS_AS(refine_uniform(extraction.boundary), ArgumentError);
}
