#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "meshcore/generate.hpp"
#include "meshcore/iterate.hpp"
#include "meshcore/mesh.hpp"
#include "meshcore/refine.hpp"

namespace meshcore {

/// One benchmark measurement: CSV row
/// `scenario,size,n_vertices,n_cells,seconds,bytes`.
struct BenchRecord {
  std::string scenario;
  std::uint32_t size = 0;
  std::uint32_t n_vertices = 0;
  std::uint32_t n_cells = 0;
  double seconds = 0.0;
  std::size_t bytes = 0;
};

namespace detail {

/// Median wall time over `reps` runs, after one untimed warmup run.
template <class F>
double median_seconds(F&& f, int reps = 5) {
  using clock = std::chrono::steady_clock;
  f(); // warmup: first-use connectivity computation, allocator state
  std::vector<double> times(reps);
  for (int r = 0; r < reps; ++r) {
    const auto t0 = clock::now();
    f();
    const auto t1 = clock::now();
    times[r] = std::chrono::duration<double>(t1 - t0).count();
  }
  std::sort(times.begin(), times.end());
  return times[reps / 2];
}

} // namespace detail

/// Explicit minimal-storage accounting: payload bytes of a simplicial mesh
/// holding only the class D -> 0 — 4 bytes per index and offset entry plus
/// 8 per coordinate.
inline std::size_t
minimal_storage_bytes(std::uint64_t n_cells, std::uint64_t n_vertices,
                      std::uint32_t vertices_per_cell, std::uint32_t gdim) {
  return 4 * (vertices_per_cell * n_cells + n_cells + 1) +
         8 * gdim * n_vertices;
}

/// Minimal storage of a uniform tetrahedral box mesh with the asymptotic
/// vertex-to-cell ratio N_0 = N_3 / 6 folded in exactly:
/// 20 N_3 + 24 N_3 / 6 + 4 = 24 N_3 + 4 bytes.
inline std::uint64_t synthetic_tet_storage_bytes(std::uint64_t n_cells) {
  return 20 * n_cells + 24 * n_cells / 6 + 4;
}

/// The measurement scenarios, per unit-cube subdivision size: mesh
/// creation, iteration over all vertices of all cells through cursors and
/// through the raw arrays, coordinate access, and one uniform refinement.
/// The byte column reports the mesh payload at measurement time (the
/// freshly created mesh carries only D -> 0).
inline std::vector<BenchRecord> bench_suite(std::span<const std::uint32_t> sizes) {
  std::vector<BenchRecord> records;
  volatile std::uint64_t sink = 0; // defeat dead-code elimination

  for (std::uint32_t n : sizes) {
    Mesh mesh = unit_cube(n);
    const std::uint32_t n_vertices = mesh.num_vertices();
    const std::uint32_t n_cells = mesh.num_cells();
    auto record = [&](const std::string& scenario, double seconds,
                      std::size_t bytes) {
      records.push_back({scenario, n, n_vertices, n_cells, seconds, bytes});
    };

    // the fresh mesh stores only D -> 0, so this is the minimal footprint
    double seconds = detail::median_seconds([&] {
      Mesh fresh = unit_cube(n);
      sink = sink + fresh.num_cells();
    });
    record("create", seconds, mesh.size_bytes());

    seconds = detail::median_seconds([&] {
      std::uint64_t sum = 0;
      for (MeshEntityRef cell : cells(mesh))
        for (MeshEntityRef vertex : vertices(cell)) sum += vertex.index();
      sink = sink + sum;
    });
    record("iterate_cursor", seconds, mesh.size_bytes());

    seconds = detail::median_seconds([&] {
      // the direct-access counterpart of the nested cursor loop
      const Connectivity* c = mesh.topology().connectivity(mesh.tdim(), 0);
      std::uint64_t sum = 0;
      for (std::uint32_t cell = 0; cell < n_cells; ++cell) {
        const auto row = c->row(cell);
        for (std::uint32_t vertex : row) sum += vertex;
      }
      sink = sink + sum;
    });
    record("iterate_direct", seconds, mesh.size_bytes());

    seconds = detail::median_seconds([&] {
      double sum = 0.0;
      for (MeshEntityRef vertex : vertices(mesh)) {
        const auto p = vertex.point();
        for (double x : p) sum += x;
      }
      sink = sink + static_cast<std::uint64_t>(sum);
    });
    record("coordinates", seconds, mesh.size_bytes());

    seconds = detail::median_seconds([&] {
      Mesh refined = refine_uniform(mesh);
      sink = sink + refined.num_cells();
    });
    record("refine", seconds, mesh.size_bytes());
  }
  (void)sink;
  return records;
}

inline std::string bench_csv(std::span<const BenchRecord> records) {
  std::ostringstream out;
  out << "scenario,size,n_vertices,n_cells,seconds,bytes\n";
  for (const BenchRecord& r : records)
    out << r.scenario << ',' << r.size << ',' << r.n_vertices << ','
        << r.n_cells << ',' << r.seconds << ',' << r.bytes << '\n';
  return out.str();
}

} // namespace meshcore
