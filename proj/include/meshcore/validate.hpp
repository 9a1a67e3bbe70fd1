#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "meshcore/measure.hpp"
#include "meshcore/mesh.hpp"

namespace meshcore {

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> errors;
  /// Cells with negative signed volume (diagnostic only, does not affect
  /// `ok`; orientation is not normalized). Counted when tdim == gdim.
  std::uint32_t inverted_cells = 0;
};

/// Scan every stored class and the geometry for structural problems: CRS
/// well-formedness, index bounds, duplicate entries within rows, count
/// consistency, simplex arities and finite coordinates.
inline ValidationReport validate(const Mesh& mesh) {
  ValidationReport report;
  auto fail = [&](std::string msg) {
    report.ok = false;
    report.errors.push_back(std::move(msg));
  };

  const MeshTopology& topology = mesh.topology();
  const Dim D = topology.dim();

  if (topology.entity_count(D) == 0) fail("no cells");
  if (topology.entity_count(0) < D + 1) fail("fewer vertices than one cell");

  for (Dim d = 0; d <= D; ++d) {
    for (Dim dp = 0; dp <= D; ++dp) {
      const Connectivity* c = topology.connectivity(d, dp);
      if (!c) continue;
      const std::string name =
          std::to_string(d) + "->" + std::to_string(dp);
      if (c->offsets().front() != 0)
        fail(name + ": offsets do not start at 0");
      if (c->offsets().back() != c->indices().size())
        fail(name + ": offsets terminator mismatch");
      if (c->num_rows() != topology.entity_count(d))
        fail(name + ": row count does not match N_" + std::to_string(d));
      const std::uint32_t bound = topology.entity_count(dp);
      for (std::uint32_t i = 0; i < c->num_rows(); ++i) {
        const auto row = c->row(i);
        for (std::size_t a = 0; a < row.size(); ++a) {
          if (row[a] >= bound) {
            fail(name + ": row " + std::to_string(i) + " references " +
                 std::to_string(row[a]) + " >= N_" + std::to_string(dp));
            break;
          }
          for (std::size_t b = a + 1; b < row.size(); ++b)
            if (row[a] == row[b]) {
              fail(name + ": row " + std::to_string(i) +
                   " has duplicate entry " + std::to_string(row[a]));
              a = row.size();
              break;
            }
        }
      }
    }
  }

  const Connectivity* cells = topology.connectivity(D, 0);
  if (!cells) {
    fail("the minimal class D->0 is missing");
  } else {
    for (std::uint32_t c = 0; c < cells->num_rows(); ++c)
      if (cells->row_size(c) != D + 1) {
        fail("cell " + std::to_string(c) + " is not a " + std::to_string(D) +
             "-simplex");
        break;
      }
  }

  if (mesh.geometry().num_points() != topology.entity_count(0))
    fail("geometry point count does not match N_0");
  for (double x : mesh.geometry().coordinates())
    if (!std::isfinite(x)) {
      fail("non-finite coordinate");
      break;
    }

  if (report.ok && mesh.tdim() == mesh.gdim() && D >= 1)
    for (std::uint32_t c = 0; c < mesh.num_cells(); ++c)
      if (cell_signed_volume(mesh, c) < 0) ++report.inverted_cells;

  return report;
}

} // namespace meshcore
