#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "meshcore/connectivity.hpp"
#include "meshcore/error.hpp"
#include "meshcore/types.hpp"

namespace meshcore {

/// Mesh topology: per-dimension entity counts N_d plus a (D+1) x (D+1)
/// table of optional Connectivity instances. Entities themselves are
/// implicit; only counts and incidence classes are stored.
///
/// An entity count of 0 means "not yet computed" (meshes are never empty).
/// The minimal class D -> 0 is set at mesh construction and cannot be
/// cleared; every other class is optional and clearable.
class MeshTopology {
public:
  explicit MeshTopology(Dim dim) : dim_(dim) {
    if (dim_ > 3)
      throw RangeError("topological dimension must be at most 3, got " +
                       std::to_string(dim_));
    counts_.assign(dim_ + 1, 0);
    table_.resize(static_cast<std::size_t>(dim_ + 1) * (dim_ + 1));
  }

  Dim dim() const { return dim_; }

  /// Number of entities of dimension d; 0 if not yet computed.
  std::uint32_t entity_count(Dim d) const {
    check_dim(d);
    return counts_[d];
  }

  void set_entity_count(Dim d, std::uint32_t n) {
    check_dim(d);
    counts_[d] = n;
  }

  bool has(Dim d, Dim dp) const {
    check_dim(d);
    check_dim(dp);
    return table_[slot(d, dp)].has_value();
  }

  /// Stored class d -> d' if present, nullptr otherwise. Never computes.
  const Connectivity* connectivity(Dim d, Dim dp) const {
    check_dim(d);
    check_dim(dp);
    const auto& entry = table_[slot(d, dp)];
    return entry ? &*entry : nullptr;
  }

  /// Store (or overwrite) the class d -> d'. Overwriting an existing class
  /// invalidates outstanding cursors and bumps the revision counter.
  void set_connectivity(Dim d, Dim dp, Connectivity c) {
    check_dim(d);
    check_dim(dp);
    if (counts_[d] == 0 || c.num_rows() != counts_[d])
      throw ArgumentError("connectivity " + std::to_string(d) + "->" +
                          std::to_string(dp) + " has " +
                          std::to_string(c.num_rows()) + " rows, expected " +
                          std::to_string(counts_[d]));
    auto& entry = table_[slot(d, dp)];
    if (entry) ++revision_;
    entry = std::move(c);
  }

  /// Remove a stored class. The minimal class D -> 0 is protected. Clearing
  /// an absent class is a no-op.
  void clear(Dim d, Dim dp) {
    check_dim(d);
    check_dim(dp);
    if (d == dim_ && dp == 0)
      throw ArgumentError("the minimal class D->0 cannot be cleared");
    auto& entry = table_[slot(d, dp)];
    if (entry) {
      entry.reset();
      ++revision_;
    }
  }

  /// Payload bytes of all stored classes (indices + offsets, 4 bytes each).
  std::size_t size_bytes() const {
    std::size_t total = 0;
    for (const auto& entry : table_)
      if (entry) total += entry->payload_bytes();
    return total;
  }

  /// Incremented whenever stored rows may have changed (class overwritten,
  /// class cleared, entity renumbering). Cursors snapshot it to detect
  /// staleness. Adding a new class does not bump it.
  std::uint64_t revision() const { return revision_; }

  void bump_revision() { ++revision_; }

private:
  std::size_t slot(Dim d, Dim dp) const {
    return static_cast<std::size_t>(d) * (dim_ + 1) + dp;
  }

  void check_dim(Dim d) const {
    if (d > dim_)
      throw RangeError("dimension " + std::to_string(d) +
                       " out of range (mesh dimension: " +
                       std::to_string(dim_) + ")");
  }

  Dim dim_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::optional<Connectivity>> table_;
  std::uint64_t revision_ = 0;
};

} // namespace meshcore
