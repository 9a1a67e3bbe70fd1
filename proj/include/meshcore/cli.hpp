#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "meshcore/bench.hpp"
#include "meshcore/boundary.hpp"
#include "meshcore/compute.hpp"
#include "meshcore/dofmap.hpp"
#include "meshcore/distribute.hpp"
#include "meshcore/generate.hpp"
#include "meshcore/io.hpp"
#include "meshcore/mesh.hpp"
#include "meshcore/partition.hpp"
#include "meshcore/refine.hpp"
#include "meshcore/sparsity.hpp"

namespace meshcore {

namespace cli_detail {

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError(path + ": cannot open for writing");
  out << text;
  if (!out) throw ParseError(path + ": write failed");
}

inline std::string rank_prefix(const std::string& prefix, std::uint32_t r) {
  return prefix + ".rank" + std::to_string(r);
}

inline int run_gen(const std::vector<std::uint32_t>& interval,
                   const std::vector<std::uint32_t>& square,
                   const std::vector<std::uint32_t>& cube,
                   const std::string& out, std::ostream& os) {
  const int chosen =
      (!interval.empty()) + (!square.empty()) + (!cube.empty());
  if (chosen != 1)
    throw ArgumentError("gen needs exactly one of --interval, --square, "
                        "--cube");
  Mesh mesh = [&] {
    if (!interval.empty()) return unit_interval(interval[0]);
    if (!square.empty())
      return unit_square(square[0], square.size() > 1 ? square[1] : square[0]);
    const std::uint32_t ny = cube.size() > 1 ? cube[1] : cube[0];
    const std::uint32_t nz = cube.size() > 2 ? cube[2] : cube[0];
    return unit_cube(cube[0], ny, nz);
  }();
  write_mesh(mesh, out);
  os << "wrote " << out << " (" << mesh.num_vertices() << " vertices, "
     << mesh.num_cells() << " cells)\n";
  return 0;
}

inline int run_info(const std::string& path, bool all, std::ostream& os) {
  Mesh mesh = read_mesh(path);
  if (all)
    for (Dim d = 0; d <= mesh.tdim(); ++d)
      for (Dim dp = 0; dp <= mesh.tdim(); ++dp)
        compute_connectivity(mesh, d, dp);
  os << "mesh " << to_string(mesh.kind()) << " tdim " << mesh.tdim()
     << " gdim " << mesh.gdim() << '\n';
  long long euler = 0;
  for (Dim d = 0; d <= mesh.tdim(); ++d) {
    const std::uint32_t count = mesh.topology().entity_count(d);
    if (count == 0) continue; // not computed
    os << "N_" << d << ' ' << count << '\n';
    euler += (d % 2 == 0) ? static_cast<long long>(count)
                          : -static_cast<long long>(count);
  }
  if (all) os << "euler " << euler << '\n';
  os << "bytes " << mesh.size_bytes() << '\n';
  return 0;
}

inline int run_refine(const std::string& path, std::uint32_t times,
                      const std::string& out, std::ostream& os) {
  Mesh mesh = read_mesh(path);
  for (std::uint32_t i = 0; i < times; ++i) {
    Mesh refined = refine_uniform(mesh);
    mesh = std::move(refined);
  }
  write_mesh(mesh, out);
  os << "wrote " << out << " (" << mesh.num_vertices() << " vertices, "
     << mesh.num_cells() << " cells)\n";
  return 0;
}

inline int run_boundary(const std::string& path, const std::string& prefix,
                        std::ostream& os) {
  Mesh mesh = read_mesh(path);
  BoundaryExtraction extraction = boundary_mesh(mesh);
  write_mesh(extraction.boundary, prefix + ".mesh");
  write_mesh_function(extraction.vertex_map, prefix + ".vertex_map");
  write_mesh_function(extraction.cell_map, prefix + ".cell_map");
  os << "wrote " << prefix << ".mesh (" << extraction.boundary.num_vertices()
     << " vertices, " << extraction.boundary.num_cells() << " cells)\n";
  return 0;
}

inline int run_partition(const std::string& path, std::uint32_t ranks,
                         const std::string& prefix, std::ostream& os) {
  Mesh mesh = read_mesh(path);
  Partition partition = partition_cells(mesh, ranks);
  DistributedMesh dm = distribute(mesh, partition);
  for (std::uint32_t r = 0; r < dm.n_ranks(); ++r) {
    const std::string base = rank_prefix(prefix, r);
    write_mesh(dm.ranks[r].mesh, base + ".mesh");
    write_mesh_function(dm.ranks[r].facet_rank, base + ".facet_rank");
    write_mesh_function(dm.ranks[r].facet_remote, base + ".facet_remote");
    write_mesh_function(dm.ranks[r].global_vertex, base + ".global_vertex");
  }
  os << "wrote " << ranks << " rank meshes under " << prefix << ".rank*\n";
  return 0;
}

inline int run_dofmap(const std::string& path, std::uint32_t ranks,
                      const std::string& prefix, std::ostream& os) {
  Mesh mesh = read_mesh(path);
  Partition partition = partition_cells(mesh, ranks);
  DistributedMesh dm = distribute(mesh, partition);
  DofMapResult result = compute_mapping(dm);

  for (std::uint32_t r = 0; r < dm.n_ranks(); ++r) {
    std::ostringstream table;
    table << "# dofmap rank " << r << " cells "
          << dm.ranks[r].mesh.num_cells() << " dofs_per_cell "
          << result.dofs_per_cell << '\n';
    for (std::uint32_t c = 0; c < dm.ranks[r].mesh.num_cells(); ++c) {
      for (std::uint32_t l = 0; l < result.dofs_per_cell; ++l) {
        if (l) table << ' ';
        table << result.dof(r, c, l);
      }
      table << '\n';
    }
    write_text(rank_prefix(prefix, r) + ".dofmap", table.str());
  }

  // compute_mapping already validated the bijection; add the cross checks
  // a reader would want to see
  const bool facet_agreement = matched_facet_dofs_agree(dm, result);
  const bool pattern_match =
      sparsity_pattern(dm, result) == relabeled_serial_pattern(mesh, dm, result);

  std::ostringstream report;
  report << "ranks " << ranks << '\n';
  report << "n_global " << result.n_global << '\n';
  report << "bijection ok\n";
  report << "facet_agreement " << (facet_agreement ? "ok" : "FAIL") << '\n';
  report << "pattern_match " << (pattern_match ? "ok" : "FAIL") << '\n';
  write_text(prefix + ".report", report.str());
  os << report.str();
  return pattern_match && facet_agreement ? 0 : 1;
}

inline int run_bench(const std::string& sizes_arg, const std::string& out,
                     std::ostream& os) {
  std::vector<std::uint32_t> sizes;
  std::istringstream fields(sizes_arg);
  std::string field;
  while (std::getline(fields, field, ',')) {
    if (field.empty()) continue;
    if (field.find_first_not_of("0123456789") != std::string::npos)
      throw ArgumentError("--sizes expects comma-separated integers, got '" +
                          field + "'");
    sizes.push_back(static_cast<std::uint32_t>(std::stoul(field)));
  }
  if (sizes.empty()) throw ArgumentError("--sizes needs at least one size");
  const std::string csv = bench_csv(bench_suite(sizes));
  if (out.empty())
    os << csv;
  else {
    write_text(out, csv);
    os << "wrote " << out << '\n';
  }
  return 0;
}

} // namespace cli_detail

/// The `meshcore` command line: gen, info, refine, boundary, partition,
/// dofmap and bench subcommands. Returns the process exit code.
inline int run_cli(const std::vector<std::string>& args,
                   std::ostream& os = std::cout,
                   std::ostream& err = std::cerr) {
  CLI::App app{"computational mesh kernel"};
  app.require_subcommand(1);

  std::vector<std::uint32_t> interval, square, cube;
  std::string out, path, prefix, sizes;
  std::uint32_t times = 1, ranks = 1;
  bool all = false;

  auto* gen = app.add_subcommand("gen", "generate a built-in mesh");
  gen->add_option("--interval", interval, "unit interval subdivisions")
      ->expected(1);
  gen->add_option("--square", square, "unit square subdivisions")
      ->expected(1, 2);
  gen->add_option("--cube", cube, "unit cube subdivisions")->expected(1, 3);
  gen->add_option("--out", out, "output mesh file")->required();

  auto* info = app.add_subcommand("info", "print entity counts");
  info->add_option("path", path, "mesh file")->required();
  info->add_flag("--all", all, "compute all incidence classes first");

  auto* refine = app.add_subcommand("refine", "uniform refinement");
  refine->add_option("path", path, "mesh file")->required();
  refine->add_option("--times", times, "refinement rounds")->required();
  refine->add_option("--out", out, "output mesh file")->required();

  auto* boundary = app.add_subcommand("boundary", "extract the boundary mesh");
  boundary->add_option("path", path, "mesh file")->required();
  boundary->add_option("--out", prefix, "output file prefix")->required();

  auto* partition =
      app.add_subcommand("partition", "partition into rank meshes");
  partition->add_option("path", path, "mesh file")->required();
  partition->add_option("--ranks", ranks, "rank count")->required();
  partition->add_option("--out", prefix, "output file prefix")->required();

  auto* dofmap =
      app.add_subcommand("dofmap", "distributed P1 dof numbering");
  dofmap->add_option("path", path, "mesh file")->required();
  dofmap->add_option("--ranks", ranks, "rank count")->required();
  dofmap->add_option("--out", prefix, "output file prefix")->required();

  auto* bench = app.add_subcommand("bench", "benchmark suite (CSV)");
  bench->add_option("--sizes", sizes, "comma-separated cube sizes")
      ->required();
  bench->add_option("--out", out, "output CSV file");

  std::vector<const char*> argv;
  argv.push_back("meshcore");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) { // --help
      os << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (gen->parsed())
      return cli_detail::run_gen(interval, square, cube, out, os);
    if (info->parsed()) return cli_detail::run_info(path, all, os);
    if (refine->parsed())
      return cli_detail::run_refine(path, times, out, os);
    if (boundary->parsed()) return cli_detail::run_boundary(path, prefix, os);
    if (partition->parsed())
      return cli_detail::run_partition(path, ranks, prefix, os);
    if (dofmap->parsed()) return cli_detail::run_dofmap(path, ranks, prefix, os);
    if (bench->parsed()) return cli_detail::run_bench(sizes, out, os);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

} // namespace meshcore
