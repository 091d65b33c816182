#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_set>
#include <vector>

namespace kcore {

/// Capacity-t container with insert/delete/recover semantics. Backed by an
/// exact set; recovery reports overflow whenever more than t elements
/// survive, mirroring what a linear-sketch implementation could return.
class SparseRecovery {
 public:
  explicit SparseRecovery(std::size_t capacity = 0) : capacity_(capacity) {}

  struct Recovered {
    bool overflow = false;
    /// Surviving elements in ascending order; empty on overflow.
    std::vector<std::uint64_t> elements;
  };

  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::uint64_t operations() const noexcept { return operations_; }
  bool contains(std::uint64_t e) const { return elements_.count(e) != 0; }

  /// Throws std::invalid_argument if e is already present.
  void insert(std::uint64_t e);
  /// Throws std::invalid_argument if e is absent.
  void erase(std::uint64_t e);
  Recovered recover() const;
  /// Exact contents regardless of capacity. Only meaningful for this
  /// set-backed implementation; used to keep going after a counted overflow.
  std::vector<std::uint64_t> elements() const;

 private:
  std::size_t capacity_;
  std::unordered_set<std::uint64_t> elements_;
  std::uint64_t operations_ = 0;
};

}  // namespace kcore
