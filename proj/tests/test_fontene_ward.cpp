#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "infocoh/admissible.hpp"
#include "infocoh/errors.hpp"
#include "oracles.hpp"

using namespace infocoh;

namespace {

std::vector<AdmissibleSequence> rational_families() {
  std::mt19937 rng(2024);
  return {
      AdmissibleSequence::natural(),
      AdmissibleSequence::gaussian(Rational(2)),
      AdmissibleSequence::gaussian(Rational(3)),
      AdmissibleSequence::fibonacci(),
      AdmissibleSequence::explicit_values(oracles::random_admissible_prefix(rng, 16)),
  };
}

// The definition, written out the slow way: [sum]! / prod [part]! with the
// factorial accumulated by an explicit product loop.
Rational definition_multinomial(const AdmissibleSequence& d,
                                const std::vector<long long>& parts) {
  auto fact = [&](long long n) {
    Rational f = 1;
    for (long long j = 1; j <= n; ++j) f *= d.d_exact(j);
    return f;
  };
  long long total = 0;
  for (long long p : parts) total += p;
  Rational w = fact(total);
  for (long long p : parts) w /= fact(p);
  return w;
}

}  // namespace

TEST_SUITE("fontene_ward") {

TEST_CASE("pinned small values") {
  AdmissibleSequence nat = AdmissibleSequence::natural();
  AdmissibleSequence g2 = AdmissibleSequence::gaussian(Rational(2));
  AdmissibleSequence g3 = AdmissibleSequence::gaussian(Rational(3));
  AdmissibleSequence fib = AdmissibleSequence::fibonacci();

  CHECK(nat.factorial_exact(5) == 120);
  CHECK(g2.d_exact(4) == 15);
  CHECK(g2.factorial_exact(4) == 315);
  CHECK(g3.d_exact(4) == 40);
  CHECK(fib.d_exact(6) == 8);
  CHECK(fib.factorial_exact(5) == 30);

  std::vector<long long> p23{2, 3};
  CHECK(fw_multinomial(nat, p23).rational() == 10);
  CHECK(fw_binomial(g2, 2, 1).rational() == 3);
  CHECK(fw_binomial(g2, 4, 2).rational() == 35);
  CHECK(fw_binomial(g3, 4, 2).rational() == 130);
  std::vector<long long> p33{3, 3};
  CHECK(fw_multinomial(fib, p33).rational() == 60);

  std::vector<long long> p111{1, 1, 1};
  CHECK(fw_multinomial(nat, p111).rational() == 6);
}

TEST_CASE("coefficients match the factorial-ratio definition") {
  for (const auto& d : rational_families()) {
    CAPTURE(d.tag());
    std::mt19937 rng(99);
    std::uniform_int_distribution<long long> part(0, 5);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<long long> parts{part(rng), part(rng), part(rng)};
      if (parts[0] + parts[1] + parts[2] == 0) continue;
      CHECK(fw_multinomial(d, parts).rational() == definition_multinomial(d, parts));
    }
  }
}

TEST_CASE("zero parts and permutations do not change the value") {
  for (const auto& d : rational_families()) {
    std::vector<long long> a{2, 3}, b{3, 2}, c{2, 0, 3, 0};
    CHECK(fw_multinomial(d, a).same_value(fw_multinomial(d, b)));
    CHECK(fw_multinomial(d, a).same_value(fw_multinomial(d, c)));
  }
  std::vector<long long> zeros{0, 0};
  CHECK_THROWS_AS(fw_multinomial(AdmissibleSequence::natural(), zeros), Error);
}

TEST_CASE("gaussian coefficients count subspaces") {
  for (int q : {2, 3}) {
    AdmissibleSequence d = AdmissibleSequence::gaussian(Rational(q));
    for (int n = 0; n <= 4; ++n)
      for (int k = 0; k <= n; ++k) {
        CAPTURE(q);
        CAPTURE(n);
        CAPTURE(k);
        long long expected = oracles::count_subspaces(q, n, k);
        if (n == 0 && k == 0) continue;  // coefficient needs positive magnitude
        CHECK(fw_binomial(d, n, k).rational() == expected);
        if (q == 2) CHECK(oracles::count_subspaces_closure_f2(n, k) == expected);
      }
  }
}

TEST_CASE("two-term recurrence residual vanishes exactly") {
  for (const auto& d : rational_families()) {
    CAPTURE(d.tag());
    for (long long n = 2; n <= 8; ++n)
      for (long long k = 1; k < n; ++k) {
        PascalResidual r = pascal_residual(d, n, k);
        REQUIRE(r.exact.has_value());
        CHECK(*r.exact == 0);
        CHECK(r.relative == 0.0);
      }
  }
  // log-domain family: only a relative deviation, and a tiny one
  AdmissibleSequence a = AdmissibleSequence::alpha_family(1.0, 0.5);
  PascalResidual r = pascal_residual(a, 6, 2);
  CHECK_FALSE(r.exact.has_value());
  CHECK(r.relative < 1e-12);
}

TEST_CASE("grouping identity holds on random instances") {
  std::mt19937 rng(4711);
  std::uniform_int_distribution<int> nparts(1, 5);
  std::uniform_int_distribution<long long> part(0, 4);
  auto families = rational_families();
  for (int trial = 0; trial < 60; ++trial) {
    const auto& d = families[static_cast<std::size_t>(trial) % families.size()];
    int m = nparts(rng);
    std::vector<long long> parts;
    std::vector<int> grouping;
    long long total = 0;
    for (int i = 0; i < m; ++i) {
      parts.push_back(part(rng));
      total += parts.back();
    }
    if (total == 0) parts[0] = 1;
    int groups = 1 + static_cast<int>(rng() % static_cast<unsigned>(m));
    for (int i = 0; i < m; ++i) grouping.push_back(i % groups);
    CAPTURE(d.tag());
    FwValue ratio = grouping_identity_ratio(d, parts, grouping);
    CHECK(ratio.is_one());
  }

  std::vector<long long> parts{1, 2};
  std::vector<int> bad{0, 2};  // group 1 missing
  CHECK_THROWS_AS(grouping_identity_ratio(AdmissibleSequence::natural(), parts, bad), Error);
}

TEST_CASE("binomial tables round-trip through the recovery routine") {
  for (const auto& d : rational_families()) {
    CAPTURE(d.tag());
    BinomialTable t = fw_binomial_table(d, 12);
    CHECK(t.limit == 12);
    CHECK(t.has(5, 7));
    CHECK_FALSE(t.has(6, 7));
    AdmissibleSequence back = sequence_from_binomials(t);
    for (long long n = 1; n <= 12; ++n) CHECK(back.d_exact(n) == d.d_exact(n));
  }

  // log-domain family recovers within tolerance
  AdmissibleSequence a = AdmissibleSequence::alpha_family(1.0, 0.5);
  AdmissibleSequence back = sequence_from_binomials(fw_binomial_table(a, 10));
  for (long long n = 1; n <= 10; ++n)
    CHECK(back.d_log(n) == doctest::Approx(a.d_log(n)).epsilon(1e-9));

  // corrupting one interior entry is detected
  BinomialTable t = fw_binomial_table(AdmissibleSequence::natural(), 6);
  t.entries[{2, 2}] = FwValue::exact(Rational(7));
  CHECK_THROWS_AS(sequence_from_binomials(t), Error);
  try {
    sequence_from_binomials(t);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InconsistentTable);
  }
}

TEST_CASE("family tags round-trip") {
  std::mt19937 rng(5);
  std::vector<AdmissibleSequence> all = rational_families();
  all.push_back(AdmissibleSequence::alpha_family(1.0, 0.5));
  all.push_back(AdmissibleSequence::alpha_family(-2.0, 2.0));
  all.push_back(AdmissibleSequence::ones());
  all.push_back(AdmissibleSequence::explicit_logs({0.0, 0.25, -0.5}));
  for (const auto& d : all) {
    CAPTURE(d.tag());
    AdmissibleSequence back = parse_family(d.tag());
    CHECK(back.kind() == d.kind());
    for (long long n = 1; n <= 5; ++n) {
      if (auto len = d.length(); len && n > *len) break;
      if (d.is_exact())
        CHECK(back.d_exact(n) == d.d_exact(n));
      else
        CHECK(back.d_log(n) == doctest::Approx(d.d_log(n)).epsilon(1e-12));
    }
  }

  CHECK_THROWS_AS(parse_family("bogus"), Error);
  CHECK_THROWS_AS(parse_family("gaussian:q=0"), Error);
  CHECK_THROWS_AS(parse_family("gaussian:q=1"), Error);
  CHECK_THROWS_AS(parse_family("alpha:K=1,alpha=1"), Error);
  CHECK_THROWS_AS(parse_family("explicit:2,3"), Error);  // D_1 must be 1
}

TEST_CASE("domain rules per family kind") {
  AdmissibleSequence a = AdmissibleSequence::alpha_family(1.0, 0.5);
  CHECK(a.d_log(4) == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(a.d_log(1) == 0.0);
  CHECK_FALSE(a.is_exact());
  CHECK_THROWS_AS(a.d_exact(3), Error);

  AdmissibleSequence e = AdmissibleSequence::explicit_values({Rational(1), Rational(3)});
  CHECK(e.length() == 2);
  CHECK_THROWS_AS(e.d_exact(3), Error);

  AdmissibleSequence ones = AdmissibleSequence::ones();
  CHECK(ones.factorial_exact(9) == 1);
  std::vector<long long> parts{4, 5};
  CHECK(fw_multinomial(ones, parts).rational() == 1);

  // log evaluation agrees with the exact one where both exist
  AdmissibleSequence g2 = AdmissibleSequence::gaussian(Rational(2));
  std::vector<long long> p{3, 4};
  CHECK(fw_multinomial_log(g2, p) ==
        doctest::Approx(std::log(to_double(fw_multinomial(g2, p).rational()))).epsilon(1e-12));
}

}  // TEST_SUITE
