#include <cmath>
#include <vector>

#include "doctest.h"
#include "infocoh/counting.hpp"
#include "infocoh/errors.hpp"
#include "infocoh/functionals.hpp"
#include "test_util.hpp"

using namespace infocoh;
using testutil::load_fixture;

namespace {

Rational q(long long n, long long d) { return Rational(n) / d; }

}  // namespace

TEST_SUITE("functionals") {

TEST_CASE("counting constructors demand nonnegative mass") {
  Structure s = load_fixture("twofactor.json");
  int j = s.index_of("X1X2");
  CHECK(make_counts(s, j, {1, 2, 3}).magnitude() == 6);
  CHECK_THROWS_AS(make_counts(s, j, {0, 0, 0}), Error);
  CHECK_THROWS_AS(make_counts(s, j, {-1, 2, 3}), Error);
  CHECK_THROWS_AS(make_counts(s, j, {1, 2}), Error);  // arity mismatch

  CHECK_THROWS_AS(make_law(s, j, {q(1, 2), q(1, 2), q(1, 2)}), Error);  // sum != 1
  CHECK_THROWS_AS(make_law(s, j, {q(3, 2), q(-1, 4), q(-1, 4)}), Error);
  CHECK_THROWS_AS(make_order(0.0), Error);
  CHECK_THROWS_AS(make_order(-2.0), Error);
}

TEST_CASE("pushforward sums counts over fibers") {
  Structure s = load_fixture("twofactor.json");
  int x1 = s.index_of("X1");
  int x2 = s.index_of("X2");
  int j = s.index_of("X1X2");
  CountingFunction nu = make_counts(s, j, {1, 2, 3});

  // X1 outcomes (x1, x02): x1 <- {x1}, x02 <- {x0, x2}
  CountingFunction at_x1 = push_counts(s, nu, x1);
  CHECK(at_x1.counts == std::vector<long long>{2, 4});
  // X2 outcomes (x2, x01)
  CountingFunction at_x2 = push_counts(s, nu, x2);
  CHECK(at_x2.counts == std::vector<long long>{3, 3});
  CHECK(push_counts(s, nu, s.terminal()).counts == std::vector<long long>{6});
  CHECK(at_x1.magnitude() == nu.magnitude());

  CHECK(nu.support() == std::vector<int>{0, 1, 2});
  CHECK(at_x1.support() == std::vector<int>{0, 1});
}

TEST_CASE("restriction zeroes everything outside one fiber") {
  Structure s = load_fixture("twofactor.json");
  int x1 = s.index_of("X1");
  int j = s.index_of("X1X2");
  CountingFunction nu = make_counts(s, j, {1, 2, 3});

  auto r1 = restrict_counts(s, nu, x1, 1);  // fiber of x02 = {x0, x2}
  REQUIRE(r1.has_value());
  CHECK(r1->counts == std::vector<long long>{1, 0, 3});
  auto r0 = restrict_counts(s, nu, x1, 0);
  REQUIRE(r0.has_value());
  CHECK(r0->counts == std::vector<long long>{0, 2, 0});

  CountingFunction thin = make_counts(s, j, {0, 2, 0});
  CHECK_FALSE(restrict_counts(s, thin, x1, 1).has_value());
}

TEST_CASE("laws push and condition with exact arithmetic") {
  Structure s = load_fixture("twofactor.json");
  int x1 = s.index_of("X1");
  int j = s.index_of("X1X2");
  ProbabilityLaw p = make_law(s, j, {q(1, 2), q(1, 3), q(1, 6)});

  ProbabilityLaw m = push_prob(s, p, x1);
  CHECK(m.weights == std::vector<Rational>{q(1, 3), q(2, 3)});

  ProbabilityLaw c = condition_prob(s, p, x1, 1);
  CHECK(c.weights == std::vector<Rational>{q(3, 4), Rational(0), q(1, 4)});

  ProbabilityLaw pt = make_law(s, j, {Rational(0), Rational(1), Rational(0)});
  CHECK_THROWS_AS(condition_prob(s, pt, x1, 1), Error);

  ProbabilityLaw fromc = law_from_counts(s, make_counts(s, j, {1, 2, 3}));
  CHECK(fromc.weights == std::vector<Rational>{q(1, 6), q(1, 3), q(1, 2)});
}

TEST_CASE("entropy values match hand computation") {
  CHECK(entropy_of_weights(1.0, {q(1, 2), q(1, 2)}) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(entropy_of_weights(2.0, {q(1, 2), q(1, 4), q(1, 4)}) == doctest::Approx(0.625).epsilon(1e-14));
  CHECK(entropy_of_weights(0.5, {q(1, 2), q(1, 2)}) ==
        doctest::Approx(2.0 * (std::sqrt(2.0) - 1.0)).epsilon(1e-14));
  // 0 ln 0 = 0
  CHECK(entropy_of_weights(1.0, {Rational(1), Rational(0)}) == 0.0);
  // point mass has no uncertainty at any order
  CHECK(entropy_of_weights(3.0, {Rational(1), Rational(0)}) == doctest::Approx(0.0));

  Structure s = load_fixture("twofactor.json");
  int j = s.index_of("X1X2");
  ProbabilityLaw p = make_law(s, j, {q(1, 2), q(1, 4), q(1, 4)});
  CHECK(entropy(make_order(1.0), p) == doctest::Approx(1.5 * std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("magnitude functionals") {
  CHECK(MagnitudeFunctional::one()(7).rational() == 1);
  MagnitudeFunctional e = MagnitudeFunctional::exp_k(0.5);
  CHECK(e(4).log() == doctest::Approx(2.0));
  CHECK_FALSE(e(4).is_exact());

  MagnitudeFunctional t =
      MagnitudeFunctional::table({FwValue::exact(1), FwValue::exact(q(1, 2)), FwValue::exact(5)});
  CHECK(t(2).rational() == 5);
  CHECK_THROWS_AS(t(3), Error);  // past the table
  CHECK_THROWS_AS(MagnitudeFunctional::table({FwValue::exact(2)}), Error);  // value at 0 not 1
}

TEST_CASE("combinatorial functionals evaluate coefficients") {
  AdmissibleSequence nat = AdmissibleSequence::natural();
  CombFunctional w = CombFunctional::fw(nat);
  std::vector<long long> parts{2, 3};
  CHECK(w.eval(parts).rational() == 10);

  CombFunctional w2 = CombFunctional::fw_pow(nat, 2.0);
  CHECK(w2.eval(parts).rational() == 100);  // integral power stays exact

  auto idx = std::make_shared<CompositionIndex>(2, 5);
  CombFunctional tab = tabulate(w, idx);
  idx->for_each([&](std::size_t, std::span<const long long> c) {
    CHECK(tab.eval(c).same_value(w.eval(c)));
  });
  std::vector<long long> outside{6, 0};
  CHECK_THROWS_AS(tab.eval(outside), Error);

  CHECK(CombFunctional::one().eval(parts).rational() == 1);
  CHECK(CombFunctional::exp_k(1.0).eval(parts).log() == doctest::Approx(5.0));
}

TEST_CASE("composition index ranks by total then lexicographically") {
  CompositionIndex idx(2, 3);
  CHECK(idx.size() == 9);
  std::vector<std::vector<long long>> seen;
  idx.for_each([&](std::size_t r, std::span<const long long> c) {
    CHECK(r == seen.size());
    seen.emplace_back(c.begin(), c.end());
    CHECK(idx.rank(c) == r);
  });
  CHECK(seen.front() == std::vector<long long>{0, 1});
  CHECK(seen[1] == std::vector<long long>{1, 0});
  CHECK(seen.back() == std::vector<long long>{3, 0});
}

TEST_CASE("multiplicative action splits along fibers with mass") {
  Structure s = load_fixture("twofactor.json");
  int x1 = s.index_of("X1");
  int j = s.index_of("X1X2");
  CountingFunction nu = make_counts(s, j, {1, 2, 3});
  CombFunctional w = CombFunctional::fw(AdmissibleSequence::natural());

  // fibers of X1: (0,2,0) with W = 1 and (1,0,3) with W = C(4,1) = 4
  FwValue acted = act_mult(s, x1, w, nu);
  CHECK(acted.rational() == 4);

  // empty fibers contribute nothing
  CountingFunction thin = make_counts(s, j, {0, 2, 0});
  CHECK(act_mult(s, x1, w, thin).rational() == 1);

  CountingFunction on_x1 = make_counts(s, x1, {1, 1});
  CHECK_THROWS_AS(act_mult(s, j, w, on_x1), Error);  // j is not coarser than X1
}

TEST_CASE("alpha-twisted action weights conditionals by pushed mass") {
  Structure s = load_fixture("twofactor.json");
  int x1 = s.index_of("X1");
  int j = s.index_of("X1X2");
  ProbabilityLaw p = make_law(s, j, {q(1, 2), q(1, 4), q(1, 4)});

  auto one = [](const ProbabilityLaw&) { return 1.0; };
  // masses through X1 are 1/4 and 3/4
  CHECK(act_alpha(s, x1, 1.0, one, p) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(act_alpha(s, x1, 2.0, one, p) == doctest::Approx(10.0 / 16.0).epsilon(1e-14));
}

TEST_CASE("probabilistic functionals") {
  CHECK(ProbFunctional::constant(0.25).eval({q(1, 2), q(1, 2)}) == 0.25);
  CHECK(ProbFunctional::shannon_like(1.0).eval({q(1, 2), q(1, 2)}) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(ProbFunctional::shannon_like(2.0).eval({q(1, 2), q(1, 4), q(1, 4)}) ==
        doctest::Approx(0.625).epsilon(1e-14));

  ProbFunctional h = ProbFunctional::hash_random(42);
  double v1 = h.eval({q(1, 3), q(2, 3)});
  double v2 = h.eval({q(1, 3), q(2, 3)});
  CHECK(v1 == v2);  // deterministic in the law
  CHECK(v1 >= 0.0);
  CHECK(v1 < 1.0);
  CHECK(h.eval({q(2, 3), q(1, 3)}) != v1);  // order-sensitive
  CHECK(ProbFunctional::hash_random(43).eval({q(1, 3), q(2, 3)}) != v1);
}

}  // TEST_SUITE
