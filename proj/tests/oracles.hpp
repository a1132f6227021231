#pragma once

// Ground-truth counters the coefficient tests compare against. Everything
// here is deliberately brute force and shares no code with the library.

#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "infocoh/rational.hpp"

namespace oracles {

// Encodes a vector over F_q as base-q digits.
inline int encode(const std::vector<int>& v, int q) {
  int code = 0;
  for (int digit : v) code = code * q + digit;
  return code;
}

// Counts k-dimensional subspaces of (F_q)^n by enumerating reduced
// row-echelon matrices over every pivot-column choice and collecting the
// row spans. Distinct RREF matrices must give distinct spans; the set
// insert doubles as that check.
inline long long count_subspaces(int q, int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k == 0) return 1;

  std::set<std::vector<int>> spans;

  std::vector<int> pivots(k);
  for (int i = 0; i < k; ++i) pivots[i] = i;
  while (true) {
    // free slots: row i, columns past pivots[i] that are not pivots
    std::vector<std::pair<int, int>> free_slots;
    for (int i = 0; i < k; ++i)
      for (int c = pivots[i] + 1; c < n; ++c) {
        bool is_pivot = false;
        for (int p : pivots) is_pivot = is_pivot || (p == c);
        if (!is_pivot) free_slots.push_back({i, c});
      }

    std::vector<int> assign(free_slots.size(), 0);
    while (true) {
      std::vector<std::vector<int>> m(k, std::vector<int>(n, 0));
      for (int i = 0; i < k; ++i) m[i][pivots[i]] = 1;
      for (std::size_t s = 0; s < free_slots.size(); ++s)
        m[free_slots[s].first][free_slots[s].second] = assign[s];

      // span = all q^k row combinations
      std::set<int> span;
      std::vector<int> coef(k, 0);
      while (true) {
        std::vector<int> v(n, 0);
        for (int i = 0; i < k; ++i)
          for (int c = 0; c < n; ++c) v[c] = (v[c] + coef[i] * m[i][c]) % q;
        span.insert(encode(v, q));
        int d = k - 1;
        while (d >= 0 && coef[d] == q - 1) coef[d--] = 0;
        if (d < 0) break;
        ++coef[d];
      }
      if (!spans.insert(std::vector<int>(span.begin(), span.end())).second)
        throw std::logic_error("distinct echelon forms produced one span");

      int d = static_cast<int>(assign.size()) - 1;
      while (d >= 0 && assign[d] == q - 1) assign[d--] = 0;
      if (d < 0) break;
      ++assign[d];
    }

    // next pivot combination
    int i = k - 1;
    while (i >= 0 && pivots[i] == n - (k - i)) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  return static_cast<long long>(spans.size());
}

// Fully independent check over F_2: walks every subset of {0,1}^n and keeps
// the addition-closed ones of size 2^k. Only feasible for n <= 4.
inline long long count_subspaces_closure_f2(int n, int k) {
  if (n > 4) throw std::logic_error("closure enumeration only sized for n <= 4");
  int vectors = 1 << n;
  long long target = 1LL << k;
  long long found = 0;
  for (std::uint32_t mask = 1; mask < (1u << vectors); ++mask) {
    if (!(mask & 1u)) continue;  // must contain 0
    if (__builtin_popcount(mask) != target) continue;
    bool closed = true;
    for (int a = 0; a < vectors && closed; ++a) {
      if (!(mask >> a & 1u)) continue;
      for (int b = a; b < vectors && closed; ++b) {
        if (!(mask >> b & 1u)) continue;
        closed = (mask >> (a ^ b)) & 1u;
      }
    }
    if (closed) ++found;
  }
  return found;
}

// Deterministic positive rationals with small numerators/denominators;
// first entry pinned to 1 so the list is an admissible prefix.
inline std::vector<infocoh::Rational> random_admissible_prefix(std::mt19937& rng,
                                                               int length) {
  std::uniform_int_distribution<int> digit(1, 9);
  std::vector<infocoh::Rational> values{infocoh::Rational(1)};
  for (int i = 1; i < length; ++i)
    values.push_back(infocoh::Rational(digit(rng)) / digit(rng));
  return values;
}

}  // namespace oracles
