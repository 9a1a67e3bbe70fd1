#pragma once

#include <cstdint>
#include <type_traits>
#include <utility>
#include <vector>

#include "meshcore/error.hpp"
#include "meshcore/mesh.hpp"
#include "meshcore/types.hpp"

namespace meshcore {

/// A discrete function taking one value per entity of a fixed dimension:
/// boolean markers, integer maps between meshes, or real-valued data.
template <class T>
class MeshFunction {
  static_assert(std::is_same_v<T, bool> || std::is_same_v<T, std::uint32_t> ||
                    std::is_same_v<T, double>,
                "MeshFunction supports bool, uint32 and double values");

public:
  /// One value per entity of dimension d, all initialized to `fill`.
  /// The entities of dimension d must have been computed.
  MeshFunction(const Mesh& mesh, Dim dim, T fill = T{})
      : dim_(dim) {
    const std::uint32_t n = mesh.topology().entity_count(dim);
    if (dim != 0 && dim != mesh.tdim() && n == 0)
      throw StateError("entity count for dimension " + std::to_string(dim) +
                       " not computed; compute connectivity first");
    values_.assign(n, fill);
  }

  /// Adopt an existing value array (used by file readers and the
  /// distribution code).
  MeshFunction(Dim dim, std::vector<T> values)
      : dim_(dim), values_(std::move(values)) {}

  Dim dim() const { return dim_; }

  std::uint32_t size() const {
    return static_cast<std::uint32_t>(values_.size());
  }

  T get(EntityIndex i) const {
    check(i);
    return values_[i];
  }

  void set(EntityIndex i, T value) {
    check(i);
    values_[i] = value;
  }

  const std::vector<T>& values() const { return values_; }

private:
  void check(EntityIndex i) const {
    if (i >= values_.size())
      throw RangeError("mesh function index " + std::to_string(i) +
                       " out of range (size: " +
                       std::to_string(values_.size()) + ")");
  }

  Dim dim_;
  std::vector<T> values_;
};

} // namespace meshcore
