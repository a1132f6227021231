#include "infocoh/cochain.hpp"

#include <algorithm>
#include <cmath>

#include "infocoh/errors.hpp"
#include "infocoh/parallel.hpp"

namespace infocoh {

int tuple_locality(const Structure& s, std::span<const int> gens) {
  if (gens.empty()) fail(Errc::BadArgument, "empty generator tuple has no meet");
  int loc = gens[0];
  for (std::size_t i = 1; i < gens.size(); ++i)
    loc = s.meet_or_fail(loc, gens[i]);
  return loc;
}

namespace {

void push_span(const Structure& s, std::span<const long long> src, int from,
               int to, std::vector<long long>& dst) {
  const auto& map = s.fiber_map(from, to);
  dst.assign(static_cast<std::size_t>(s.outcome_count(to)), 0);
  for (std::size_t i = 0; i < src.size(); ++i)
    dst[static_cast<std::size_t>(map[i])] += src[i];
}

void push_weights(const Structure& s, const std::vector<Rational>& src,
                  int from, int to, std::vector<Rational>& dst) {
  const auto& map = s.fiber_map(from, to);
  dst.assign(static_cast<std::size_t>(s.outcome_count(to)), Rational(0));
  for (std::size_t i = 0; i < src.size(); ++i)
    dst[static_cast<std::size_t>(map[i])] += src[i];
}

// The tuple with positions k-1 and k (0-based) merged into their meet.
std::vector<int> merged_tuple(const Structure& s, std::span<const int> gens,
                              int k) {
  std::vector<int> t;
  t.reserve(gens.size() - 1);
  for (int j = 0; j < static_cast<int>(gens.size()); ++j) {
    if (j == k) continue;
    if (j == k - 1)
      t.push_back(s.meet_or_fail(gens[static_cast<std::size_t>(j)],
                                 gens[static_cast<std::size_t>(j + 1)]));
    else
      t.push_back(gens[static_cast<std::size_t>(j)]);
  }
  return t;
}

}  // namespace

struct CombCochain::Node {
  int degree = 0;
  virtual ~Node() = default;
  // counts lives on `locality` (the tuple's meet; any variable for degree 0).
  virtual FwValue eval(const Structure& s, std::span<const int> gens,
                       std::span<const long long> counts, int locality) const = 0;
};

namespace {

struct D0Node final : CombCochain::Node {
  MagnitudeFunctional psi;
  explicit D0Node(MagnitudeFunctional p) : psi(std::move(p)) { degree = 0; }
  FwValue eval(const Structure&, std::span<const int>,
               std::span<const long long> counts, int) const override {
    long long total = 0;
    for (long long c : counts) total += c;
    return psi(total);
  }
};

struct D1Node final : CombCochain::Node {
  std::optional<CombFunctional> shared;
  std::map<int, CombFunctional> by_var;
  explicit D1Node(CombFunctional g) : shared(std::move(g)) { degree = 1; }
  explicit D1Node(std::map<int, CombFunctional> m) : by_var(std::move(m)) {
    degree = 1;
  }
  FwValue eval(const Structure&, std::span<const int> gens,
               std::span<const long long> counts, int) const override {
    if (shared) return shared->eval(counts);
    auto it = by_var.find(gens[0]);
    // Unlisted variables evaluate to 1 (the table format documents this).
    if (it == by_var.end()) return FwValue::exact(Rational(1));
    return it->second.eval(counts);
  }
};

struct DeltaNode final : CombCochain::Node {
  std::shared_ptr<const CombCochain::Node> in;
  explicit DeltaNode(std::shared_ptr<const CombCochain::Node> inner)
      : in(std::move(inner)) {
    degree = in->degree + 1;
  }

  FwValue eval(const Structure& s, std::span<const int> gens,
               std::span<const long long> counts, int loc) const override {
    int n = in->degree;
    int x1 = gens[0];
    FwValue out = FwValue::exact(Rational(1));

    // (X1 . psi[X2|...]): product over supported X1-outcomes of the inner
    // value on the restricted argument, pushed to the suffix tuple's meet.
    std::span<const int> suffix = gens.subspan(1);
    int suffix_loc = n >= 1 ? tuple_locality(s, suffix) : loc;
    const auto& to_x1 = s.fiber_map(loc, x1);
    std::vector<long long> restricted(counts.size(), 0);
    std::vector<long long> pushed;
    for (int x = 0; x < s.outcome_count(x1); ++x) {
      long long mass = 0;
      for (std::size_t i = 0; i < counts.size(); ++i) {
        bool inside = to_x1[i] == x;
        restricted[i] = inside ? counts[i] : 0;
        if (inside) mass += counts[i];
      }
      if (mass == 0) continue;
      if (n >= 1) {
        push_span(s, restricted, loc, suffix_loc, pushed);
        out = out * in->eval(s, suffix, pushed, suffix_loc);
      } else {
        out = out * in->eval(s, suffix, restricted, loc);
      }
    }

    // Middle terms psi[...|Xk Xk+1|...]^{(-1)^k}.
    for (int k = 1; k <= n; ++k) {
      std::vector<int> t = merged_tuple(s, gens, k);
      int t_loc = tuple_locality(s, t);
      push_span(s, counts, loc, t_loc, pushed);
      FwValue v = in->eval(s, t, pushed, t_loc);
      out = out * (k % 2 ? v.inverse() : v);
    }

    // Final term psi[X1|...|Xn]^{(-1)^{n+1}}.
    std::span<const int> prefix = gens.first(static_cast<std::size_t>(n));
    FwValue v = FwValue::exact(Rational(1));
    if (n >= 1) {
      int prefix_loc = tuple_locality(s, prefix);
      push_span(s, counts, loc, prefix_loc, pushed);
      v = in->eval(s, prefix, pushed, prefix_loc);
    } else {
      v = in->eval(s, prefix, counts, loc);
    }
    return out * ((n + 1) % 2 ? v.inverse() : v);
  }
};

}  // namespace

CombCochain::CombCochain(std::shared_ptr<const Node> node)
    : node_(std::move(node)) {}

CombCochain CombCochain::degree0(MagnitudeFunctional psi) {
  return CombCochain(std::make_shared<D0Node>(std::move(psi)));
}

CombCochain CombCochain::uniform1(CombFunctional g) {
  return CombCochain(std::make_shared<D1Node>(std::move(g)));
}

CombCochain CombCochain::per_variable1(std::map<int, CombFunctional> by_variable) {
  return CombCochain(std::make_shared<D1Node>(std::move(by_variable)));
}

CombCochain CombCochain::coboundary(CombCochain inner) {
  return CombCochain(std::make_shared<DeltaNode>(std::move(inner.node_)));
}

int CombCochain::degree() const { return node_->degree; }

FwValue CombCochain::evaluate_local(const Structure& s,
                                    std::span<const int> gens,
                                    std::span<const long long> counts,
                                    int locality) const {
  if (static_cast<int>(gens.size()) != node_->degree)
    fail(Errc::BadArgument, "generator tuple size does not match degree");
  return node_->eval(s, gens, counts, locality);
}

FwValue CombCochain::evaluate(const Structure& s, std::span<const int> gens,
                              const CountingFunction& nu) const {
  if (static_cast<int>(gens.size()) != node_->degree)
    fail(Errc::BadArgument, "generator tuple size does not match degree");
  if (nu.counts.size() != static_cast<std::size_t>(s.outcome_count(nu.variable)))
    fail(Errc::VariableMismatch, "counting function shape mismatch");
  if (node_->degree == 0)
    return node_->eval(s, gens, nu.counts, nu.variable);
  int loc = tuple_locality(s, gens);
  if (nu.variable == loc) return node_->eval(s, gens, nu.counts, loc);
  if (!s.refines(nu.variable, loc))
    fail(Errc::VariableMismatch,
         "argument on '" + s.variable(nu.variable).id +
             "' cannot be pushed to the tuple's meet '" + s.variable(loc).id +
             "'");
  std::vector<long long> pushed;
  push_span(s, nu.counts, nu.variable, loc, pushed);
  return node_->eval(s, gens, pushed, loc);
}

struct ProbCochain::Node {
  int degree = 0;
  virtual ~Node() = default;
  virtual double eval(const Structure& s, std::span<const int> gens,
                      const std::vector<Rational>& weights, int locality,
                      double alpha) const = 0;
};

namespace {

struct PD0Node final : ProbCochain::Node {
  double value;
  explicit PD0Node(double v) : value(v) { degree = 0; }
  double eval(const Structure&, std::span<const int>,
              const std::vector<Rational>&, int, double) const override {
    return value;
  }
};

struct PD1Node final : ProbCochain::Node {
  std::optional<ProbFunctional> shared;
  std::map<int, ProbFunctional> by_var;
  explicit PD1Node(ProbFunctional fn) : shared(std::move(fn)) { degree = 1; }
  explicit PD1Node(std::map<int, ProbFunctional> m) : by_var(std::move(m)) {
    degree = 1;
  }
  double eval(const Structure&, std::span<const int> gens,
              const std::vector<Rational>& weights, int, double) const override {
    if (shared) return shared->eval(weights);
    auto it = by_var.find(gens[0]);
    if (it == by_var.end()) return 0.0;  // additive neutral
    return it->second.eval(weights);
  }
};

struct PDeltaNode final : ProbCochain::Node {
  std::shared_ptr<const ProbCochain::Node> in;
  explicit PDeltaNode(std::shared_ptr<const ProbCochain::Node> inner)
      : in(std::move(inner)) {
    degree = in->degree + 1;
  }

  double eval(const Structure& s, std::span<const int> gens,
              const std::vector<Rational>& weights, int loc,
              double alpha) const override {
    int n = in->degree;
    int x1 = gens[0];
    double out = 0.0;

    std::span<const int> suffix = gens.subspan(1);
    int suffix_loc = n >= 1 ? tuple_locality(s, suffix) : loc;
    const auto& to_x1 = s.fiber_map(loc, x1);
    std::vector<Rational> conditional(weights.size(), Rational(0));
    std::vector<Rational> pushed;
    for (int x = 0; x < s.outcome_count(x1); ++x) {
      Rational mass = 0;
      for (std::size_t i = 0; i < weights.size(); ++i)
        if (to_x1[i] == x) mass += weights[i];
      if (mass == 0) continue;
      for (std::size_t i = 0; i < weights.size(); ++i)
        conditional[i] = to_x1[i] == x ? weights[i] / mass : Rational(0);
      double inner_value;
      if (n >= 1) {
        push_weights(s, conditional, loc, suffix_loc, pushed);
        inner_value = in->eval(s, suffix, pushed, suffix_loc, alpha);
      } else {
        inner_value = in->eval(s, suffix, conditional, loc, alpha);
      }
      out += std::pow(to_double(mass), alpha) * inner_value;
    }

    for (int k = 1; k <= n; ++k) {
      std::vector<int> t = merged_tuple(s, gens, k);
      int t_loc = tuple_locality(s, t);
      push_weights(s, weights, loc, t_loc, pushed);
      double v = in->eval(s, t, pushed, t_loc, alpha);
      out += (k % 2 ? -v : v);
    }

    std::span<const int> prefix = gens.first(static_cast<std::size_t>(n));
    double v;
    if (n >= 1) {
      int prefix_loc = tuple_locality(s, prefix);
      push_weights(s, weights, loc, prefix_loc, pushed);
      v = in->eval(s, prefix, pushed, prefix_loc, alpha);
    } else {
      v = in->eval(s, prefix, weights, loc, alpha);
    }
    return out + ((n + 1) % 2 ? -v : v);
  }
};

}  // namespace

ProbCochain::ProbCochain(std::shared_ptr<const Node> node, double alpha)
    : node_(std::move(node)), alpha_(alpha) {}

ProbCochain ProbCochain::degree0(double module_alpha, double value) {
  return ProbCochain(std::make_shared<PD0Node>(value), module_alpha);
}

ProbCochain ProbCochain::uniform1(double module_alpha, ProbFunctional f) {
  return ProbCochain(std::make_shared<PD1Node>(std::move(f)), module_alpha);
}

ProbCochain ProbCochain::per_variable1(double module_alpha,
                                       std::map<int, ProbFunctional> by_variable) {
  return ProbCochain(std::make_shared<PD1Node>(std::move(by_variable)),
                     module_alpha);
}

ProbCochain ProbCochain::coboundary(ProbCochain inner) {
  return ProbCochain(std::make_shared<PDeltaNode>(std::move(inner.node_)),
                     inner.alpha_);
}

int ProbCochain::degree() const { return node_->degree; }

double ProbCochain::module_order() const { return alpha_; }

double ProbCochain::evaluate_local(const Structure& s,
                                   std::span<const int> gens,
                                   const std::vector<Rational>& weights,
                                   int locality) const {
  if (static_cast<int>(gens.size()) != node_->degree)
    fail(Errc::BadArgument, "generator tuple size does not match degree");
  return node_->eval(s, gens, weights, locality, alpha_);
}

double ProbCochain::evaluate(const Structure& s, std::span<const int> gens,
                             const ProbabilityLaw& p) const {
  if (static_cast<int>(gens.size()) != node_->degree)
    fail(Errc::BadArgument, "generator tuple size does not match degree");
  if (p.weights.size() != static_cast<std::size_t>(s.outcome_count(p.variable)))
    fail(Errc::VariableMismatch, "law shape mismatch");
  if (node_->degree == 0)
    return node_->eval(s, gens, p.weights, p.variable, alpha_);
  int loc = tuple_locality(s, gens);
  if (p.variable == loc) return node_->eval(s, gens, p.weights, loc, alpha_);
  if (!s.refines(p.variable, loc))
    fail(Errc::VariableMismatch,
         "law on '" + s.variable(p.variable).id +
             "' cannot be pushed to the tuple's meet '" + s.variable(loc).id +
             "'");
  std::vector<Rational> pushed;
  push_weights(s, p.weights, p.variable, loc, pushed);
  return node_->eval(s, gens, pushed, loc, alpha_);
}

namespace {

// Tuple enumeration: every gens in {0..V-1}^m in lexicographic order; the
// scan index doubles as the deterministic tie-break for witnesses.
void decode_tuple(long long index, int var_count, std::vector<int>& gens) {
  for (int i = static_cast<int>(gens.size()) - 1; i >= 0; --i) {
    gens[static_cast<std::size_t>(i)] = static_cast<int>(index % var_count);
    index /= var_count;
  }
}

struct JobResult {
  long long cases = 0;
  std::optional<std::size_t> fail_rank;
  CheckWitness witness;
};

CheckVerdict merge_results(std::vector<JobResult>& results) {
  CheckVerdict verdict;
  for (auto& r : results) {
    verdict.cases += r.cases;
    if (r.fail_rank && verdict.pass) {
      verdict.pass = false;
      verdict.witness = std::move(r.witness);
    }
  }
  return verdict;
}

long long power(long long base, int exp) {
  long long out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

CheckVerdict identically_one(const Structure& s, const CombCochain& c,
                             long long bound, double log_tol) {
  int m = c.degree();
  if (m < 1) fail(Errc::BadArgument, "scan needs degree >= 1");
  long long tuples = power(s.var_count(), m);
  std::vector<JobResult> results(static_cast<std::size_t>(tuples));

  parallel_for(static_cast<std::size_t>(tuples), [&](std::size_t job) {
    std::vector<int> gens(static_cast<std::size_t>(m));
    decode_tuple(static_cast<long long>(job), s.var_count(), gens);
    JobResult& r = results[job];
    try {
      int loc = tuple_locality(s, gens);
      CompositionIndex idx(s.outcome_count(loc), bound);
      idx.for_each([&](std::size_t rank, std::span<const long long> counts) {
        ++r.cases;
        FwValue v = c.evaluate_local(s, gens, counts, loc);
        if (!v.is_one(log_tol) && !r.fail_rank) {
          r.fail_rank = rank;
          r.witness.gens = gens;
          r.witness.counts.assign(counts.begin(), counts.end());
          r.witness.deviation = std::abs(v.log());
        }
      });
    } catch (const Error& e) {
      // A tuple whose meets are undeclared generates nothing to check.
      if (e.code() != Errc::MissingProduct) throw;
      r = JobResult{};
    }
  });
  return merge_results(results);
}

namespace {

// Dense degree-1 path: tabulate psi per variable once, then walk every
// (X, Y, nu) by table lookups. Verdicts and witness order are identical to
// identically_one(coboundary(psi)) restricted to pairs with a meet.
CheckVerdict cocycle_check_dense(const Structure& s, const CombCochain& psi,
                                 long long bound, double log_tol) {
  int vars = s.var_count();
  std::vector<CompositionIndex> idx;
  idx.reserve(static_cast<std::size_t>(vars));
  for (int v = 0; v < vars; ++v) idx.emplace_back(s.outcome_count(v), bound);

  std::vector<std::vector<FwValue>> table(static_cast<std::size_t>(vars));
  parallel_for(static_cast<std::size_t>(vars), [&](std::size_t v) {
    std::vector<FwValue> values(idx[v].size());
    const int gens[1] = {static_cast<int>(v)};
    idx[v].for_each([&](std::size_t r, std::span<const long long> counts) {
      values[r] = psi.evaluate_local(s, gens, counts, static_cast<int>(v));
    });
    table[v] = std::move(values);
  });

  long long pairs = static_cast<long long>(vars) * vars;
  std::vector<JobResult> results(static_cast<std::size_t>(pairs));
  parallel_for(static_cast<std::size_t>(pairs), [&](std::size_t job) {
    int a = static_cast<int>(job) / vars;
    int b = static_cast<int>(job) % vars;
    auto loc_opt = s.meet(a, b);
    if (!loc_opt) return;
    int loc = *loc_opt;
    JobResult& r = results[job];
    const auto& to_a = s.fiber_map(loc, a);
    const auto& to_b = s.fiber_map(loc, b);
    std::vector<long long> push_a(static_cast<std::size_t>(s.outcome_count(a)));
    std::vector<long long> push_b(static_cast<std::size_t>(s.outcome_count(b)));
    idx[static_cast<std::size_t>(loc)].for_each([&](std::size_t rank,
                                                    std::span<const long long>
                                                        counts) {
      ++r.cases;
      // (X.psi[Y]) over supported X-outcomes.
      FwValue action = FwValue::exact(Rational(1));
      for (int x = 0; x < s.outcome_count(a); ++x) {
        std::fill(push_b.begin(), push_b.end(), 0);
        long long mass = 0;
        for (std::size_t i = 0; i < counts.size(); ++i)
          if (to_a[i] == x) {
            push_b[static_cast<std::size_t>(to_b[i])] += counts[i];
            mass += counts[i];
          }
        if (mass == 0) continue;
        action =
            action *
            table[static_cast<std::size_t>(b)]
                 [idx[static_cast<std::size_t>(b)].rank(push_b)];
      }
      std::fill(push_a.begin(), push_a.end(), 0);
      for (std::size_t i = 0; i < counts.size(); ++i)
        push_a[static_cast<std::size_t>(to_a[i])] += counts[i];
      FwValue v = action *
                  table[static_cast<std::size_t>(loc)][rank].inverse() *
                  table[static_cast<std::size_t>(a)]
                       [idx[static_cast<std::size_t>(a)].rank(push_a)];
      if (!v.is_one(log_tol) && !r.fail_rank) {
        r.fail_rank = rank;
        r.witness.gens = {a, b};
        r.witness.counts.assign(counts.begin(), counts.end());
        r.witness.deviation = std::abs(v.log());
      }
    });
  });
  return merge_results(results);
}

}  // namespace

CheckVerdict cocycle_check(const Structure& s, const CombCochain& psi,
                           long long bound, double log_tol) {
  if (psi.degree() == 1) return cocycle_check_dense(s, psi, bound, log_tol);
  return identically_one(s, CombCochain::coboundary(psi), bound, log_tol);
}

CheckVerdict single_support_check(const Structure& s, const CombCochain& psi,
                                  long long bound, double log_tol) {
  if (psi.degree() != 1)
    fail(Errc::BadArgument, "single-support check applies to degree 1");
  CheckVerdict verdict;
  for (int v = 0; v < s.var_count() && verdict.pass; ++v) {
    const int gens[1] = {v};
    std::vector<long long> counts(static_cast<std::size_t>(s.outcome_count(v)));
    for (int o = 0; o < s.outcome_count(v) && verdict.pass; ++o) {
      for (long long m = 1; m <= bound; ++m) {
        std::fill(counts.begin(), counts.end(), 0);
        counts[static_cast<std::size_t>(o)] = m;
        ++verdict.cases;
        FwValue val = psi.evaluate_local(s, gens, counts, v);
        if (!val.is_one(log_tol)) {
          verdict.pass = false;
          verdict.witness = CheckWitness{{v}, counts, {}, std::abs(val.log())};
          break;
        }
      }
    }
  }
  return verdict;
}

void for_each_law(int parts, int denom_bound,
                  const std::function<void(const std::vector<Rational>&)>& fn) {
  if (parts < 1) fail(Errc::BadArgument, "laws need at least one outcome");
  if (denom_bound < 1) fail(Errc::BadArgument, "denominator bound must be >= 1");
  std::vector<long long> counts(static_cast<std::size_t>(parts), 0);
  std::vector<Rational> weights(static_cast<std::size_t>(parts), Rational(0));
  for (int d = 1; d <= denom_bound; ++d) {
    // All count vectors with total exactly d, lexicographic.
    auto rec = [&](auto&& self, int position, long long remaining) -> void {
      if (position == parts - 1) {
        counts[static_cast<std::size_t>(position)] = remaining;
        for (int i = 0; i < parts; ++i)
          weights[static_cast<std::size_t>(i)] =
              Rational(counts[static_cast<std::size_t>(i)]) / d;
        fn(weights);
        return;
      }
      for (long long c = 0; c <= remaining; ++c) {
        counts[static_cast<std::size_t>(position)] = c;
        self(self, position + 1, remaining - c);
      }
    };
    rec(rec, 0, d);
  }
}

CheckVerdict identically_zero(const Structure& s, const ProbCochain& c,
                              int denom_bound, double tol) {
  int m = c.degree();
  if (m < 1) fail(Errc::BadArgument, "scan needs degree >= 1");
  long long tuples = power(s.var_count(), m);
  std::vector<JobResult> results(static_cast<std::size_t>(tuples));

  parallel_for(static_cast<std::size_t>(tuples), [&](std::size_t job) {
    std::vector<int> gens(static_cast<std::size_t>(m));
    decode_tuple(static_cast<long long>(job), s.var_count(), gens);
    JobResult& r = results[job];
    try {
      int loc = tuple_locality(s, gens);
      std::size_t law_rank = 0;
      for_each_law(s.outcome_count(loc), denom_bound,
                   [&](const std::vector<Rational>& weights) {
                     ++r.cases;
                     double v = c.evaluate_local(s, gens, weights, loc);
                     if (std::abs(v) > tol && !r.fail_rank) {
                       r.fail_rank = law_rank;
                       r.witness.gens = gens;
                       r.witness.weights = weights;
                       r.witness.deviation = std::abs(v);
                     }
                     ++law_rank;
                   });
    } catch (const Error& e) {
      if (e.code() != Errc::MissingProduct) throw;
      r = JobResult{};
    }
  });
  return merge_results(results);
}

CheckVerdict cocycle_check_additive(const Structure& s, const ProbCochain& phi,
                                    int denom_bound, double tol) {
  return identically_zero(s, ProbCochain::coboundary(phi), denom_bound, tol);
}

double chain_rule_residual(const Structure& s, const ProbCochain& phi, int y,
                           int z, const ProbabilityLaw& p) {
  if (phi.degree() != 1)
    fail(Errc::BadArgument, "chain rule residual applies to degree 1");
  const int gens[2] = {y, z};
  return ProbCochain::coboundary(phi).evaluate(s, gens, p);
}

}  // namespace infocoh
