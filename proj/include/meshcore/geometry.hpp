#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "meshcore/error.hpp"
#include "meshcore/types.hpp"

namespace meshcore {

/// Vertex coordinates of a mesh: a flat array of n * N_0 doubles, where n
/// is the geometric dimension.
class MeshGeometry {
public:
  MeshGeometry(std::uint32_t gdim, std::vector<double> coordinates)
      : gdim_(gdim), coordinates_(std::move(coordinates)) {
    if (gdim_ < 1 || gdim_ > 3)
      throw ArgumentError("geometric dimension must be 1, 2 or 3, got " +
                          std::to_string(gdim_));
    if (coordinates_.size() % gdim_ != 0)
      throw ArgumentError("coordinate array length is not a multiple of the "
                          "geometric dimension");
    for (double x : coordinates_)
      if (!std::isfinite(x))
        throw ArgumentError("coordinates must be finite");
  }

  std::uint32_t gdim() const { return gdim_; }

  std::uint32_t num_points() const {
    return static_cast<std::uint32_t>(coordinates_.size() / gdim_);
  }

  std::span<const double> point(EntityIndex v) const {
    check_vertex(v);
    return {coordinates_.data() + static_cast<std::size_t>(v) * gdim_, gdim_};
  }

  /// Replace the coordinates of one vertex. Topology is untouched;
  /// different geometries may be imposed on the same topology.
  void set_point(EntityIndex v, std::span<const double> x) {
    check_vertex(v);
    if (x.size() != gdim_)
      throw ArgumentError("coordinate arity mismatch: got " +
                          std::to_string(x.size()) + ", expected " +
                          std::to_string(gdim_));
    for (double c : x)
      if (!std::isfinite(c)) throw ArgumentError("coordinates must be finite");
    std::copy(x.begin(), x.end(),
              coordinates_.begin() + static_cast<std::size_t>(v) * gdim_);
  }

  const std::vector<double>& coordinates() const { return coordinates_; }

  std::size_t size_bytes() const {
    return sizeof(double) * coordinates_.size();
  }

private:
  void check_vertex(EntityIndex v) const {
    if (v >= num_points())
      throw RangeError("vertex " + std::to_string(v) +
                       " out of range (vertices: " +
                       std::to_string(num_points()) + ")");
  }

  std::uint32_t gdim_;
  std::vector<double> coordinates_;
};

} // namespace meshcore
