#include "infocoh/classify.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "infocoh/combinatorics.hpp"
#include "infocoh/errors.hpp"
#include "infocoh/feith.hpp"

namespace infocoh {
namespace {

// psi[X] restricted to counts on the first two enumerated outcomes.
BinomialTable two_point_table(const Structure& s, const CombCochain& psi,
                              int var, int o1, int o2, long long bound) {
  BinomialTable t;
  t.limit = bound;
  std::vector<long long> counts(size_t(s.outcome_count(var)), 0);
  for (long long total = 1; total <= bound; ++total) {
    for (long long n1 = 0; n1 <= total; ++n1) {
      counts.assign(counts.size(), 0);
      counts[size_t(o1)] = n1;
      counts[size_t(o2)] = total - n1;
      int gens[1] = {var};
      t.entries[{n1, total - n1}] =
          psi.evaluate(s, gens, make_counts(s, var, counts));
    }
  }
  return t;
}

void verify_matches(const Structure& s, const CombCochain& psi, int var,
                    const AdmissibleSequence& d, long long bound,
                    double log_tol) {
  CompositionIndex idx(s.outcome_count(var), bound);
  std::vector<long long> parts(size_t(s.outcome_count(var)), 0);
  idx.for_each([&](long long, std::span<const long long> p) {
    FwValue want = fw_multinomial(d, p);
    int gens[1] = {var};
    std::vector<long long> counts(p.begin(), p.end());
    FwValue got = psi.evaluate(s, gens, make_counts(s, var, counts));
    if (!got.same_value(want, log_tol)) {
      std::string msg = "psi[" + s.variable(var).id +
                        "] differs from the recovered coefficients at (";
      for (size_t i = 0; i < counts.size(); ++i)
        msg += (i ? "," : "") + std::to_string(counts[i]);
      msg += "): " + got.str() + " vs " + want.str();
      fail(Errc::NotACocycle, msg);
    }
  });
  (void)parts;
}

}  // namespace

AdmissibleSequence extract_sequence(const Structure& s, const CombCochain& psi,
                                    int x, int y, const NondegWitness& w,
                                    long long bound, double log_tol) {
  if (s.outcome_count(x) < 2 || s.outcome_count(y) < 2)
    fail(Errc::DegenerateProduct, "factor with fewer than two outcomes");
  if (psi.degree() != 1)
    fail(Errc::BadArgument, "sequence extraction needs a degree-1 cochain");
  int xy = s.meet_or_fail(x, y);

  BinomialTable f =
      two_point_table(s, psi, x, w.order_x.at(0), w.order_x.at(1), bound);
  BinomialTable g =
      two_point_table(s, psi, y, w.order_y.at(0), w.order_y.at(1), bound);
  FeithResult r = comb_feith_solve(f, g, log_tol);
  if (!r.solved())
    fail(Errc::NotACocycle,
         std::string("local tables fail the functional equation: ") +
             feith_status_name(r.status) +
             (r.message.empty() ? "" : " (" + r.message + ")"));

  verify_matches(s, psi, x, *r.d, bound, log_tol);
  verify_matches(s, psi, y, *r.d, bound, log_tol);
  verify_matches(s, psi, xy, *r.d, bound, log_tol);
  return *r.d;
}

AdmissibleSequence extract_sequence(const Structure& s, const CombCochain& psi,
                                    int x, int y, long long bound,
                                    double log_tol) {
  auto w = nondegenerate_witness(s, x, y);
  if (!w)
    fail(Errc::DegenerateProduct,
         "no nondegeneracy certificate for the product of '" +
             s.variable(x).id + "' and '" + s.variable(y).id + "'");
  return extract_sequence(s, psi, x, y, *w, bound, log_tol);
}

bool same_sequence_prefix(const AdmissibleSequence& a,
                          const AdmissibleSequence& b, long long upto,
                          double log_tol) {
  bool exact = a.is_exact() && b.is_exact();
  for (long long n = 1; n <= upto; ++n) {
    if (exact) {
      if (a.d_exact(n) != b.d_exact(n)) return false;
    } else if (std::abs(a.d_log(n) - b.d_log(n)) > log_tol) {
      return false;
    }
  }
  return true;
}

ClassifyResult classify_cocycle(const Structure& s, const CombCochain& psi,
                                long long bound, double log_tol) {
  ClassifyResult out;
  auto products = s.products();
  for (const auto& comp : s.components()) {
    auto in_comp = [&](int v) {
      return std::find(comp.begin(), comp.end(), v) != comp.end();
    };
    bool done = false;
    for (const auto& pr : products) {
      if (!in_comp(pr[0]) || !in_comp(pr[1])) continue;
      auto w = nondegenerate_witness(s, pr[0], pr[1]);
      if (!w) continue;
      ComponentClass cc;
      cc.members = comp;
      cc.x = pr[0];
      cc.y = pr[1];
      cc.witness = *w;
      cc.d = extract_sequence(s, psi, pr[0], pr[1], *w, bound, log_tol);
      out.components.push_back(std::move(cc));
      done = true;
      break;
    }
    if (!done)
      fail(Errc::NoNondegenerateProduct,
           "component containing '" + s.variable(comp.front()).id +
               "' has no certified product");
  }
  out.coboundary = true;
  for (size_t i = 1; i < out.components.size(); ++i)
    if (!same_sequence_prefix(out.components[0].d, out.components[i].d, bound,
                              log_tol))
      out.coboundary = false;
  return out;
}

}  // namespace infocoh
