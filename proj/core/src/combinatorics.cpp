#include "infocoh/combinatorics.hpp"

#include "infocoh/errors.hpp"

namespace infocoh {

namespace {

// C(n, k) in 64 bits; totals and part counts stay small enough here.
std::uint64_t binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

}  // namespace

CompositionIndex::CompositionIndex(int parts, long long bound)
    : parts_(parts), bound_(bound) {
  if (parts <= 0 || bound <= 0)
    fail(Errc::BadArgument, "composition index needs positive parts and bound");
  offsets_.resize(static_cast<std::size_t>(bound_) + 2, 0);
  std::uint64_t acc = 0;
  for (long long t = 1; t <= bound_; ++t) {
    offsets_[static_cast<std::size_t>(t)] = acc;
    acc += compositions(t, parts_);
  }
  offsets_[static_cast<std::size_t>(bound_) + 1] = acc;
  size_ = static_cast<std::size_t>(acc);
}

std::uint64_t CompositionIndex::compositions(long long total, int m) const {
  return binom(total + m - 1, m - 1);
}

std::size_t CompositionIndex::rank(std::span<const long long> counts) const {
  if (static_cast<int>(counts.size()) != parts_)
    fail(Errc::BadArgument, "composition has wrong number of parts");
  long long total = 0;
  for (long long c : counts) total += c;
  if (total < 1 || total > bound_)
    fail(Errc::TableBoundExceeded, "composition total outside [1, bound]");
  std::uint64_t r = offsets_[static_cast<std::size_t>(total)];
  long long remaining = total;
  for (int i = 0; i + 1 < parts_; ++i) {
    for (long long v = 0; v < counts[static_cast<std::size_t>(i)]; ++v) {
      r += compositions(remaining - v, parts_ - i - 1);
    }
    remaining -= counts[static_cast<std::size_t>(i)];
  }
  return static_cast<std::size_t>(r);
}

void CompositionIndex::unrank(std::size_t r, std::span<long long> out) const {
  if (static_cast<int>(out.size()) != parts_)
    fail(Errc::BadArgument, "output buffer has wrong number of parts");
  if (r >= size_) fail(Errc::OutOfRange, "composition rank out of range");
  long long total = 1;
  while (offsets_[static_cast<std::size_t>(total) + 1] <= r) ++total;
  std::uint64_t rem = r - offsets_[static_cast<std::size_t>(total)];
  long long remaining = total;
  for (int i = 0; i + 1 < parts_; ++i) {
    long long v = 0;
    while (true) {
      std::uint64_t block = compositions(remaining - v, parts_ - i - 1);
      if (rem < block) break;
      rem -= block;
      ++v;
    }
    out[static_cast<std::size_t>(i)] = v;
    remaining -= v;
  }
  out[static_cast<std::size_t>(parts_) - 1] = remaining;
}

}  // namespace infocoh
