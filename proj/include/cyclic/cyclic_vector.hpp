#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cyclic {

/// Nonnegative sequence x_1..x_n read with cyclic indexing (x_{n+i} = x_i).
///
/// Zero entries are allowed. Whether a vector is admissible for a given
/// window length k (every length-k cyclic window has positive sum) is a
/// property of the pair (x, k) and is checked by the operations that need
/// it, not at construction.
///
/// All index arguments of the public API are 1-based and may be any integer;
/// they are reduced modulo n.
class CyclicVector {
 public:
  /// Throws DomainError on a negative or non-finite entry, ShapeError when
  /// `entries` is empty.
  explicit CyclicVector(std::vector<double> entries);

  std::size_t size() const noexcept { return entries_.size(); }

  /// x_i for any integer i, 1-based and cyclic.
  double at(std::int64_t i) const noexcept { return entries_[slot(i)]; }

  std::span<const double> entries() const noexcept { return entries_; }

  /// 0-based storage slot of the 1-based cyclic index i.
  std::size_t slot(std::int64_t i) const noexcept {
    const auto n = static_cast<std::int64_t>(entries_.size());
    auto r = (i - 1) % n;
    if (r < 0) r += n;
    return static_cast<std::size_t>(r);
  }

  bool strictly_positive() const noexcept;

  /// First 1-based window start i with t_{i,k} == 0, if any.
  std::optional<std::int64_t> first_empty_window(std::size_t k) const;

  /// Throws InvalidWindowError unless 1 <= k <= n.
  void check_window(std::size_t k) const;

  /// Entry i of the result is x_{i+shift}.
  CyclicVector rotated(std::int64_t shift) const;
  CyclicVector scaled(double factor) const;

  friend bool operator==(const CyclicVector&, const CyclicVector&) = default;

 private:
  std::vector<double> entries_;
};

}  // namespace cyclic
