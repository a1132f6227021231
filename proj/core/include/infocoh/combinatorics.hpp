#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace infocoh {

/// Dense ranking of nonnegative integer vectors with a fixed number of parts
/// and total magnitude in [1, bound].  Rank order sorts by total first, then
/// lexicographically by the parts; used to back flat per-variable value
/// tables during cochain scans.
class CompositionIndex {
 public:
  CompositionIndex(int parts, long long bound);

  int parts() const { return parts_; }
  long long bound() const { return bound_; }

  /// Number of indexed vectors (= C(bound+parts, parts) - 1).
  std::size_t size() const { return size_; }

  std::size_t rank(std::span<const long long> counts) const;
  void unrank(std::size_t r, std::span<long long> out) const;

  /// Calls f(rank, counts) for every vector in rank order; counts is a
  /// scratch buffer reused between calls.
  template <typename F>
  void for_each(F&& f) const {
    std::vector<long long> counts(static_cast<std::size_t>(parts_), 0);
    for (std::size_t r = 0; r < size_; ++r) {
      unrank(r, counts);
      f(r, std::span<const long long>(counts));
    }
  }

 private:
  // choose_[t][m] = number of ways to write total t with m parts.
  std::uint64_t compositions(long long total, int m) const;

  int parts_;
  long long bound_;
  std::size_t size_;
  std::vector<std::uint64_t> offsets_;  // offsets_[t] = rank of first vector of total t
};

}  // namespace infocoh
