// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any fails. Tolerances and thresholds are pinned in the checks below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "meshcore/meshcore.hpp"

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace meshcore;

namespace {

int failures = 0;
std::vector<std::string> failure_notes;

void report(int criterion, const char* name, bool pass,
            const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL",
              criterion, name, detail.c_str());
  if (!pass) {
    ++failures;
    failure_notes.push_back("criterion " + std::to_string(criterion));
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string format_seconds(double s) {
  char buffer[64];
  if (s < 1.0)
    std::snprintf(buffer, sizeof(buffer), "%.3f ms", s * 1e3);
  else
    std::snprintf(buffer, sizeof(buffer), "%.2f s", s);
  return buffer;
}

// --- criterion 1: CRS fidelity -------------------------------------------
void criterion_1() {
  auto run = [] {
    Mesh mesh = fixtures::two_triangles();
    const Connectivity* c = mesh.topology().connectivity(2, 0);
    return c->offsets() == std::vector<std::uint32_t>{0, 3, 6} &&
           c->indices() == std::vector<std::uint32_t>{0, 1, 3, 1, 2, 3};
  };
  bool exact = run(); // warmup
  const auto t0 = std::chrono::steady_clock::now();
  exact = run() && exact;
  const double elapsed = seconds_since(t0);
  report(1, "CRS fidelity", exact && elapsed < 1e-3,
         std::string(exact ? "arrays exact" : "ARRAY MISMATCH") + ", " +
             format_seconds(elapsed));
}

// --- criterion 2: memory accounting --------------------------------------
void criterion_2() {
  Mesh cube = unit_cube(16, 16, 16);
  const std::size_t measured =
      cube.topology().size_bytes() + cube.geometry().size_bytes();
  const bool cube_exact = measured == 609436u;

  // Eq.-style synthetic check: N_3 = 1e6 cells, N_0 = N_3 / 6 exactly
  const std::uint64_t synthetic = synthetic_tet_storage_bytes(1000000u);
  const bool synthetic_exact = synthetic == 24000004u;

  report(2, "memory accounting", cube_exact && synthetic_exact,
         "unit_cube(16): " + std::to_string(measured) +
             " bytes, synthetic 10^6 cells: " + std::to_string(synthetic) +
             " bytes");
}

// --- criterion 3: oracle equivalence --------------------------------------
bool classes_match_oracle(Mesh mesh) {
  const oracle::Entities entities = oracle::enumerate_entities(mesh);
  const Dim D = mesh.tdim();
  for (Dim d = 0; d <= D; ++d)
    for (Dim dp = 0; dp <= D; ++dp) compute_connectivity(mesh, d, dp);
  for (Dim d = 0; d <= D; ++d) {
    if (mesh.topology().entity_count(d) != entities.by_dim[d].size())
      return false;
    for (Dim dp = 0; dp <= D; ++dp)
      if (oracle::sorted_rows(*mesh.topology().connectivity(d, dp)) !=
          oracle::incidence(entities, d, dp))
        return false;
  }
  return true;
}

void criterion_3() {
  const auto t0 = std::chrono::steady_clock::now();
  const bool ok = classes_match_oracle(unit_interval(4)) &&
                  classes_match_oracle(unit_square(3, 3)) &&
                  classes_match_oracle(unit_cube(2, 2, 2));
  const double elapsed = seconds_since(t0);
  report(3, "oracle equivalence", ok && elapsed < 5.0,
         std::string(ok ? "all classes match the definition oracle"
                        : "MISMATCH") +
             ", " + format_seconds(elapsed));
}

// --- criterion 4: Euler characteristic ------------------------------------
long long euler_characteristic(Mesh& mesh) {
  for (Dim d = 0; d <= mesh.tdim(); ++d) ensure_entities(mesh, d);
  long long sum = 0;
  for (Dim d = 0; d <= mesh.tdim(); ++d) {
    const long long count = mesh.topology().entity_count(d);
    sum += (d % 2 == 0) ? count : -count;
  }
  return sum;
}

void criterion_4() {
  bool ok = true;
  std::size_t meshes = 0;
  for (std::uint32_t n : {1u, 2u, 3u, 5u, 8u, 16u}) {
    Mesh mesh = unit_interval(n);
    ok = ok && euler_characteristic(mesh) == 1;
    ++meshes;
  }
  for (std::uint32_t n : {1u, 2u, 3u, 5u, 8u}) {
    Mesh mesh = unit_square(n, n);
    ok = ok && euler_characteristic(mesh) == 1;
    ++meshes;
  }
  for (std::uint32_t n : {1u, 2u, 4u, 8u}) {
    Mesh mesh = unit_cube(n, n, n);
    ok = ok && euler_characteristic(mesh) == 1;
    ++meshes;
  }
  report(4, "Euler characteristic",
         ok, std::to_string(meshes) + " generator meshes, exact sum 1");
}

// --- criterion 5: refinement laws ------------------------------------------
bool refinement_laws(Mesh mesh) {
  const Dim D = mesh.tdim();
  compute_connectivity(mesh, 1, 0);
  const std::uint32_t n0 = mesh.num_vertices();
  const std::uint32_t n1 = mesh.topology().entity_count(1);
  const std::uint32_t nd = mesh.num_cells();
  const std::uint32_t children = 1u << D;

  Mesh fine = refine_uniform(mesh);
  if (fine.num_cells() != children * nd) return false;
  if (fine.num_vertices() != n0 + n1) return false;

  for (std::uint32_t parent = 0; parent < nd; ++parent) {
    const double parent_volume = cell_signed_volume(mesh, parent);
    double child_sum = 0.0;
    for (std::uint32_t k = 0; k < children; ++k)
      child_sum += cell_signed_volume(fine, parent * children + k);
    if (std::abs(child_sum - parent_volume) >
        1e-12 * std::abs(parent_volume))
      return false;
  }
  return true;
}

void criterion_5() {
  const auto t0 = std::chrono::steady_clock::now();
  const bool ok =
      refinement_laws(unit_square(2, 2)) && refinement_laws(unit_cube(2, 2, 2));
  const double elapsed = seconds_since(t0);
  report(5, "refinement laws", ok && elapsed < 2.0,
         std::string(ok ? "counts and volumes within 1e-12 relative"
                        : "LAW VIOLATED") +
             ", " + format_seconds(elapsed));
}

// --- criterion 6: boundary extraction --------------------------------------
bool boundary_checks(std::uint32_t n) {
  Mesh mesh = unit_cube(n, n, n);
  BoundaryExtraction extraction = boundary_mesh(mesh);
  Mesh& boundary = extraction.boundary;
  if (boundary.num_cells() != 12 * n * n) return false;

  // closed 2-manifold: every boundary edge borders exactly 2 cells
  compute_connectivity(boundary, 1, 2);
  const Connectivity* edge_to_cell = boundary.topology().connectivity(1, 2);
  for (std::uint32_t e = 0; e < edge_to_cell->num_rows(); ++e)
    if (edge_to_cell->row_size(e) != 2) return false;

  // map consistency: boundary cell vertices map onto the parent facet
  const Connectivity* boundary_cells = boundary.topology().connectivity(2, 0);
  const Connectivity* facet_to_vertex = mesh.topology().connectivity(2, 0);
  for (std::uint32_t b = 0; b < boundary.num_cells(); ++b) {
    std::set<std::uint32_t> mapped;
    for (std::uint32_t v : boundary_cells->row(b))
      mapped.insert(extraction.vertex_map.get(v));
    std::set<std::uint32_t> facet;
    for (std::uint32_t v : facet_to_vertex->row(extraction.cell_map.get(b)))
      facet.insert(v);
    if (mapped != facet) return false;
  }
  return true;
}

void criterion_6() {
  const bool ok =
      boundary_checks(1) && boundary_checks(2) && boundary_checks(4);
  report(6, "boundary extraction", ok,
         "unit_cube(n) for n in {1,2,4}: 12n^2 cells, closed 2-manifold, "
         "maps consistent");
}

// --- criterion 7: distributed dof numbering --------------------------------
bool dofmap_checks(Mesh mesh, std::uint32_t ranks) {
  DistributedMesh dm = distribute(mesh, partition_cells(mesh, ranks));
  DofMapResult result = compute_mapping(dm);
  if (result.n_global != mesh.num_vertices()) return false;

  const auto to_global = parallel_renumbering(mesh, dm, result);
  std::set<std::uint32_t> image(to_global.begin(), to_global.end());
  if (image.size() != mesh.num_vertices()) return false;
  if (!image.empty() && *image.rbegin() != mesh.num_vertices() - 1)
    return false;

  if (!matched_facet_dofs_agree(dm, result)) return false;
  return sparsity_pattern(dm, result) ==
         relabeled_serial_pattern(mesh, dm, result);
}

void criterion_7() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (std::uint32_t ranks : {2u, 3u, 4u}) {
    ok = ok && dofmap_checks(unit_square(4, 4), ranks);
    ok = ok && dofmap_checks(unit_cube(2, 2, 2), ranks);
  }
  const double elapsed = seconds_since(t0);
  report(7, "distributed dof numbering", ok && elapsed < 5.0,
         std::string(ok ? "bijection, facet agreement, pattern equality"
                        : "NUMBERING WRONG") +
             ", " + format_seconds(elapsed));
}

// --- criterion 8: invalid-partition detection ------------------------------
void criterion_8() {
  Mesh mesh = fixtures::bowtie();
  Partition partition{2, MeshFunction<std::uint32_t>(2, {0, 1})};
  DistributedMesh dm = distribute(mesh, partition);
  bool rejected = false;
  std::string message;
  try {
    (void)compute_mapping(dm);
  } catch (const PartitionError& e) {
    rejected = true;
    message = e.what();
  }
  report(8, "invalid-partition detection", rejected,
         rejected ? "PartitionError raised for vertex-only contact"
                  : "NOT rejected");
}

// --- criterion 9: performance sanity ----------------------------------------
void criterion_9() {
  const auto t0 = std::chrono::steady_clock::now();
  volatile std::uint64_t sink = 0;

  Mesh mesh16 = unit_cube(16, 16, 16);
  Mesh mesh32 = unit_cube(32, 32, 32);

  // median of 5 runs each; the cursor and direct samples are interleaved
  // so ambient load hits both series alike
  auto run_cursor = [&] {
    std::uint64_t sum = 0;
    for (MeshEntityRef cell : cells(mesh32))
      for (MeshEntityRef vertex : vertices(cell)) sum += vertex.index();
    sink = sink + sum;
  };
  auto run_direct = [&] {
    const Connectivity* c = mesh32.topology().connectivity(3, 0);
    std::uint64_t sum = 0;
    const std::uint32_t n_cells = mesh32.num_cells();
    for (std::uint32_t cell = 0; cell < n_cells; ++cell)
      for (std::uint32_t vertex : c->row(cell)) sum += vertex;
    sink = sink + sum;
  };
  auto timed = [](auto&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         t0)
        .count();
  };
  run_cursor();
  run_direct();
  run_cursor();
  run_direct();
  std::vector<double> cursor_samples, direct_samples;
  for (int r = 0; r < 5; ++r) {
    cursor_samples.push_back(timed(run_cursor));
    direct_samples.push_back(timed(run_direct));
  }
  std::sort(cursor_samples.begin(), cursor_samples.end());
  std::sort(direct_samples.begin(), direct_samples.end());
  const double cursor_time = cursor_samples[2];
  const double direct_time = direct_samples[2];
  const double iteration_ratio = cursor_time / direct_time;
  const bool iteration_ok = iteration_ratio <= 5.0;

  // the scaling checks compare medians of 9 runs to damp scheduler noise
  // on the shorter measurements; both sizes share the warmed-up state
  const double create16 = detail::median_seconds(
      [&] {
        Mesh fresh = unit_cube(16, 16, 16);
        sink = sink + fresh.num_cells();
      },
      9);
  const double create32 = detail::median_seconds(
      [&] {
        Mesh fresh = unit_cube(32, 32, 32);
        sink = sink + fresh.num_cells();
      },
      9);
  // 8x the cells, allowed up to 2x of linear scaling
  const bool create_ok = create32 <= 2.0 * 8.0 * create16;

  const double refine16 = detail::median_seconds(
      [&] {
        Mesh fine = refine_uniform(mesh16);
        sink = sink + fine.num_cells();
      },
      7);
  const double refine32 = detail::median_seconds(
      [&] {
        Mesh fine = refine_uniform(mesh32);
        sink = sink + fine.num_cells();
      },
      7);
  const bool refine_ok = refine32 <= 2.0 * 8.0 * refine16;

  const double elapsed = seconds_since(t0);
  const bool ok =
      iteration_ok && create_ok && refine_ok && elapsed < 60.0;
  char detail_text[256];
  std::snprintf(detail_text, sizeof(detail_text),
                "cursor/direct %.2fx (<=5), create 32/16 %.2fx (<=16), "
                "refine 32/16 %.2fx (<=16), total %s",
                iteration_ratio, create32 / create16, refine32 / refine16,
                format_seconds(elapsed).c_str());
  report(9, "performance sanity", ok, detail_text);
  (void)sink;
}

} // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();

  if (failures == 0) {
    std::printf("all 9 acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", failures);
  return 1;
}
