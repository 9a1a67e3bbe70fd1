#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "meshcore/error.hpp"
#include "meshcore/types.hpp"

namespace meshcore {

/// One incidence class d -> d' stored as two contiguous arrays, compressed
/// row storage style: `offsets` (length N_d + 1) and `indices` (length
/// offsets[N_d]). Row i lists the dimension-d' entities incident to the
/// dimension-d entity i.
class Connectivity {
public:
  Connectivity() : offsets_{0} {}

  Connectivity(std::vector<std::uint32_t> offsets,
               std::vector<std::uint32_t> indices)
      : offsets_(std::move(offsets)), indices_(std::move(indices)) {
    if (offsets_.empty() || offsets_.front() != 0)
      throw ArgumentError("connectivity offsets must start with 0");
    for (std::size_t i = 1; i < offsets_.size(); ++i)
      if (offsets_[i] < offsets_[i - 1])
        throw ArgumentError("connectivity offsets must be non-decreasing");
    if (offsets_.back() != indices_.size())
      throw ArgumentError(
          "connectivity offsets terminator does not match index count");
  }

  /// Preallocated storage for `rows` rows of identical `width`.
  static Connectivity with_uniform_rows(std::uint32_t rows,
                                        std::uint32_t width) {
    Connectivity c;
    c.offsets_.resize(static_cast<std::size_t>(rows) + 1);
    for (std::uint32_t i = 0; i <= rows; ++i)
      c.offsets_[i] = i * width;
    c.indices_.assign(static_cast<std::size_t>(rows) * width, 0);
    return c;
  }

  /// Preallocated storage from per-row sizes (the counting pass result).
  static Connectivity with_row_sizes(std::span<const std::uint32_t> sizes) {
    Connectivity c;
    c.offsets_.resize(sizes.size() + 1);
    c.offsets_[0] = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i)
      c.offsets_[i + 1] = c.offsets_[i] + sizes[i];
    c.indices_.assign(c.offsets_.back(), 0);
    return c;
  }

  std::uint32_t num_rows() const {
    return static_cast<std::uint32_t>(offsets_.size() - 1);
  }

  std::uint32_t num_indices() const {
    return static_cast<std::uint32_t>(indices_.size());
  }

  std::uint32_t row_size(std::uint32_t i) const {
    check_row(i);
    return offsets_[i + 1] - offsets_[i];
  }

  std::span<const std::uint32_t> row(std::uint32_t i) const {
    check_row(i);
    return {indices_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }

  std::span<std::uint32_t> mutable_row(std::uint32_t i) {
    check_row(i);
    return {indices_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }

  const std::vector<std::uint32_t>& offsets() const { return offsets_; }
  const std::vector<std::uint32_t>& indices() const { return indices_; }

  /// Bytes of payload storage (both arrays, 4 bytes per entry).
  std::size_t payload_bytes() const {
    return sizeof(std::uint32_t) * (offsets_.size() + indices_.size());
  }

  bool operator==(const Connectivity&) const = default;

private:
  void check_row(std::uint32_t i) const {
    if (static_cast<std::size_t>(i) + 1 >= offsets_.size())
      throw RangeError("connectivity row " + std::to_string(i) +
                       " out of range (rows: " + std::to_string(num_rows()) +
                       ")");
  }

  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> indices_;
};

} // namespace meshcore
