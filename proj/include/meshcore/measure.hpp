#pragma once

#include <span>

#include "meshcore/error.hpp"
#include "meshcore/mesh.hpp"

namespace meshcore {

/// Signed measure (length / area / volume) of one cell, defined when the
/// topological and geometric dimensions agree. The sign reflects the
/// orientation of the stored vertex tuple.
inline double cell_signed_volume(const Mesh& mesh, EntityIndex c) {
  const Dim D = mesh.tdim();
  if (D != mesh.gdim())
    throw ArgumentError("signed volume requires tdim == gdim");
  const Connectivity* cells = mesh.topology().connectivity(D, 0);
  const auto row = cells->row(c);
  switch (D) {
  case 1: {
    return mesh.point(row[1])[0] - mesh.point(row[0])[0];
  }
  case 2: {
    const auto a = mesh.point(row[0]);
    const auto b = mesh.point(row[1]);
    const auto p = mesh.point(row[2]);
    return 0.5 * ((b[0] - a[0]) * (p[1] - a[1]) -
                  (b[1] - a[1]) * (p[0] - a[0]));
  }
  case 3: {
    const auto a = mesh.point(row[0]);
    const auto b = mesh.point(row[1]);
    const auto p = mesh.point(row[2]);
    const auto q = mesh.point(row[3]);
    const double u[3] = {b[0] - a[0], b[1] - a[1], b[2] - a[2]};
    const double v[3] = {p[0] - a[0], p[1] - a[1], p[2] - a[2]};
    const double w[3] = {q[0] - a[0], q[1] - a[1], q[2] - a[2]};
    const double det = u[0] * (v[1] * w[2] - v[2] * w[1]) -
                       u[1] * (v[0] * w[2] - v[2] * w[0]) +
                       u[2] * (v[0] * w[1] - v[1] * w[0]);
    return det / 6.0;
  }
  default:
    throw ArgumentError("signed volume undefined for dimension-0 cells");
  }
}

} // namespace meshcore
