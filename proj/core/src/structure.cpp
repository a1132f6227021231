#include "infocoh/structure.hpp"

#include "infocoh/errors.hpp"

#include <algorithm>
#include <set>

namespace infocoh {

const char* diagnostic_name(DiagnosticKind k) {
  switch (k) {
    case DiagnosticKind::MissingTerminal: return "MissingTerminal";
    case DiagnosticKind::NonSurjectiveFiberMap: return "NonSurjectiveFiberMap";
    case DiagnosticKind::ProductNotInjective: return "ProductNotInjective";
    case DiagnosticKind::PosetViolation: return "PosetViolation";
    case DiagnosticKind::MissingProduct: return "MissingProduct";
    case DiagnosticKind::ConservativityViolation: return "ConservativityViolation";
  }
  return "?";
}

std::optional<int> Structure::find(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Structure::index_of(std::string_view id) const {
  auto v = find(id);
  if (!v) fail(Errc::UnknownVariable, "unknown variable '" + std::string(id) + "'");
  return *v;
}

bool Structure::refines(int x, int y) const {
  if (x == y) return true;
  const auto& row = arrows_[static_cast<std::size_t>(x)];
  return row.find(y) != row.end();
}

const std::vector<int>& Structure::fiber_map(int x, int y) const {
  if (x == y) {
    auto it = identity_cache_.find(x);
    if (it == identity_cache_.end()) {
      std::vector<int> id(static_cast<std::size_t>(outcome_count(x)));
      for (int i = 0; i < outcome_count(x); ++i) id[static_cast<std::size_t>(i)] = i;
      it = identity_cache_.emplace(x, std::move(id)).first;
    }
    return it->second;
  }
  const auto& row = arrows_[static_cast<std::size_t>(x)];
  auto it = row.find(y);
  if (it == row.end())
    fail(Errc::UnknownArrow,
         "no arrow " + variable(x).id + " -> " + variable(y).id);
  return it->second;
}

std::vector<int> Structure::fiber(int x, int y, int target_outcome) const {
  if (target_outcome < 0 || target_outcome >= outcome_count(y))
    fail(Errc::UnknownOutcome, "outcome index out of range for " + variable(y).id);
  const auto& map = fiber_map(x, y);
  std::vector<int> pre;
  for (int i = 0; i < outcome_count(x); ++i)
    if (map[static_cast<std::size_t>(i)] == target_outcome) pre.push_back(i);
  return pre;
}

std::optional<int> Structure::meet(int x, int y) const {
  if (x == y) return x;
  if (refines(x, y)) return x;
  if (refines(y, x)) return y;
  auto key = std::minmax(x, y);
  auto it = meets_.find({key.first, key.second});
  if (it == meets_.end()) return std::nullopt;
  return it->second;
}

int Structure::meet_or_fail(int x, int y) const {
  auto m = meet(x, y);
  if (!m)
    fail(Errc::MissingProduct,
         "no meet of " + variable(x).id + " and " + variable(y).id);
  return *m;
}

std::vector<int> Structure::coarsenings(int x) const {
  std::vector<int> out;
  for (int v = 0; v < var_count(); ++v)
    if (refines(x, v)) out.push_back(v);
  return out;
}

std::vector<std::vector<int>> Structure::components() const {
  int n = var_count();
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  auto root = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (int x = 0; x < n; ++x) {
    if (x == terminal_) continue;
    for (const auto& [y, _] : arrows_[static_cast<std::size_t>(x)]) {
      if (y == terminal_) continue;
      parent[static_cast<std::size_t>(root(x))] = root(y);
    }
  }
  std::map<int, std::vector<int>> buckets;
  for (int v = 0; v < n; ++v) {
    if (v == terminal_) continue;
    buckets[root(v)].push_back(v);
  }
  std::vector<std::vector<int>> out;
  std::vector<std::pair<int, std::vector<int>>> tmp;
  for (auto& [_, members] : buckets) {
    std::sort(members.begin(), members.end());
    tmp.emplace_back(members.front(), std::move(members));
  }
  std::sort(tmp.begin(), tmp.end());
  for (auto& [_, members] : tmp) out.push_back(std::move(members));
  return out;
}

RawStructure Structure::to_raw() const {
  RawStructure raw;
  std::vector<int> order(static_cast<std::size_t>(var_count()));
  for (int i = 0; i < var_count(); ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return variable(a).id < variable(b).id; });
  for (int v : order) raw.variables.push_back(variable(v));
  for (int x : order) {
    std::vector<int> targets;
    for (const auto& [y, _] : arrows_[static_cast<std::size_t>(x)]) targets.push_back(y);
    std::sort(targets.begin(), targets.end(),
              [&](int a, int b) { return variable(a).id < variable(b).id; });
    for (int y : targets) {
      ArrowDecl decl;
      decl.source = variable(x).id;
      decl.target = variable(y).id;
      const auto& m = fiber_map(x, y);
      for (int i = 0; i < outcome_count(x); ++i)
        decl.map[variable(x).outcomes[static_cast<std::size_t>(i)]] =
            variable(y).outcomes[static_cast<std::size_t>(m[static_cast<std::size_t>(i)])];
      raw.arrows.push_back(std::move(decl));
    }
  }
  std::vector<std::array<int, 3>> prods = products_;
  // Normalize each pair to left < right by id before sorting, so the
  // emitted order cannot depend on the declaration order of the input.
  auto id_pair = [&](const std::array<int, 3>& p) {
    std::pair<std::string, std::string> key{variable(p[0]).id, variable(p[1]).id};
    if (key.second < key.first) std::swap(key.first, key.second);
    return key;
  };
  std::sort(prods.begin(), prods.end(),
            [&](const auto& a, const auto& b) { return id_pair(a) < id_pair(b); });
  for (const auto& p : prods) {
    ProductDecl decl;
    auto key = id_pair(p);
    decl.left = std::move(key.first);
    decl.right = std::move(key.second);
    decl.result = variable(p[2]).id;
    raw.products.push_back(std::move(decl));
  }
  raw.terminal = variable(terminal_).id;
  raw.comment = comment_;
  return raw;
}

struct ValidationBuilder {
  const RawStructure& raw;
  Structure s;
  std::vector<Diagnostic> issues;

  explicit ValidationBuilder(const RawStructure& r) : raw(r) {}

  void diag(DiagnosticKind kind, std::string msg) {
    issues.push_back({kind, std::move(msg)});
  }

  // Referential well-formedness is a precondition of the axioms, so breaches
  // throw rather than accumulate.
  void check_referential() {
    std::set<std::string> ids;
    for (const auto& v : raw.variables) {
      if (!ids.insert(v.id).second)
        fail(Errc::ParseError, "duplicate variable id '" + v.id + "'");
      if (v.outcomes.empty())
        fail(Errc::ParseError, "variable '" + v.id + "' has no outcomes");
      std::set<std::string> seen(v.outcomes.begin(), v.outcomes.end());
      if (seen.size() != v.outcomes.size())
        fail(Errc::ParseError, "variable '" + v.id + "' repeats an outcome label");
    }
    auto known = [&](const std::string& id) { return ids.count(id) != 0; };
    if (!known(raw.terminal))
      fail(Errc::ParseError, "terminal '" + raw.terminal + "' is not a declared variable");
    std::map<std::string, const VariableDecl*> by_id;
    for (const auto& v : raw.variables) by_id[v.id] = &v;
    for (const auto& a : raw.arrows) {
      if (!known(a.source) || !known(a.target))
        fail(Errc::ParseError,
             "arrow " + a.source + " -> " + a.target + " references an unknown variable");
      const auto& src = *by_id.at(a.source);
      const auto& tgt = *by_id.at(a.target);
      for (const auto& o : src.outcomes)
        if (!a.map.count(o))
          fail(Errc::ParseError, "arrow " + a.source + " -> " + a.target +
                                     " does not map outcome '" + o + "'");
      for (const auto& [from, to] : a.map) {
        if (std::find(src.outcomes.begin(), src.outcomes.end(), from) ==
            src.outcomes.end())
          fail(Errc::ParseError, "arrow " + a.source + " -> " + a.target +
                                     " maps foreign outcome '" + from + "'");
        if (std::find(tgt.outcomes.begin(), tgt.outcomes.end(), to) ==
            tgt.outcomes.end())
          fail(Errc::ParseError, "arrow " + a.source + " -> " + a.target +
                                     " targets unknown outcome '" + to + "'");
      }
    }
    for (const auto& p : raw.products)
      if (!known(p.left) || !known(p.right) || !known(p.result))
        fail(Errc::ParseError, "product (" + p.left + ", " + p.right + ") -> " +
                                   p.result + " references an unknown variable");
  }

  bool surjective(int x, int y, const std::vector<int>& map) {
    std::vector<char> hit(static_cast<std::size_t>(s.outcome_count(y)), 0);
    for (int t : map) hit[static_cast<std::size_t>(t)] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  }

  void load_variables() {
    for (const auto& v : raw.variables) {
      s.index_.emplace(v.id, static_cast<int>(s.vars_.size()));
      s.vars_.push_back(v);
    }
    s.arrows_.resize(s.vars_.size());
    s.comment_ = raw.comment;
    s.terminal_ = s.index_.at(raw.terminal);
    if (s.outcome_count(s.terminal_) != 1)
      diag(DiagnosticKind::MissingTerminal,
           "terminal '" + raw.terminal + "' must have exactly one outcome");
  }

  void load_arrows() {
    for (const auto& a : raw.arrows) {
      int x = s.index_.at(a.source);
      int y = s.index_.at(a.target);
      if (x == y) {
        diag(DiagnosticKind::PosetViolation,
             "explicit self arrow on '" + a.source + "'");
        continue;
      }
      std::vector<int> map(static_cast<std::size_t>(s.outcome_count(x)));
      for (int i = 0; i < s.outcome_count(x); ++i) {
        const std::string& from = s.variable(x).outcomes[static_cast<std::size_t>(i)];
        const std::string& to = a.map.at(from);
        const auto& outs = s.variable(y).outcomes;
        map[static_cast<std::size_t>(i)] = static_cast<int>(
            std::find(outs.begin(), outs.end(), to) - outs.begin());
      }
      auto& row = s.arrows_[static_cast<std::size_t>(x)];
      if (row.count(y)) {
        diag(DiagnosticKind::PosetViolation,
             "duplicate arrow " + a.source + " -> " + a.target);
        continue;
      }
      if (!surjective(x, y, map))
        diag(DiagnosticKind::NonSurjectiveFiberMap,
             "fiber map of " + a.source + " -> " + a.target +
                 " misses a target outcome");
      row.emplace(y, std::move(map));
    }
    for (int x = 0; x < s.var_count(); ++x)
      for (const auto& [y, _] : s.arrows_[static_cast<std::size_t>(x)])
        if (s.arrows_[static_cast<std::size_t>(y)].count(x))
          diag(DiagnosticKind::PosetViolation,
               "antisymmetry broken between '" + s.variable(x).id + "' and '" +
                   s.variable(y).id + "'");
  }

  // Adds composite arrows until fixpoint; checks every composite against any
  // explicitly declared arrow along the same pair.
  void close_poset() {
    bool grew = true;
    std::set<std::pair<int, int>> reported;
    while (grew) {
      grew = false;
      for (int x = 0; x < s.var_count(); ++x) {
        auto targets = s.arrows_[static_cast<std::size_t>(x)];  // copy: row mutates
        for (const auto& [z, xz] : targets) {
          for (const auto& [y, zy] : s.arrows_[static_cast<std::size_t>(z)]) {
            if (y == x) continue;  // antisymmetry breach already diagnosed
            std::vector<int> comp(xz.size());
            for (std::size_t i = 0; i < xz.size(); ++i)
              comp[i] = zy[static_cast<std::size_t>(xz[i])];
            auto& row = s.arrows_[static_cast<std::size_t>(x)];
            auto it = row.find(y);
            if (it == row.end()) {
              row.emplace(y, std::move(comp));
              grew = true;
            } else if (it->second != comp &&
                       reported.insert({x, y}).second) {
              diag(DiagnosticKind::PosetViolation,
                   "fiber maps along " + s.variable(x).id + " -> " +
                       s.variable(z).id + " -> " + s.variable(y).id +
                       " disagree with the declared arrow " + s.variable(x).id +
                       " -> " + s.variable(y).id);
            }
          }
        }
      }
    }
  }

  void check_terminal_reachability() {
    for (int x = 0; x < s.var_count(); ++x) {
      if (x == s.terminal_) continue;
      if (!s.refines(x, s.terminal_))
        diag(DiagnosticKind::MissingTerminal,
             "variable '" + s.variable(x).id + "' has no arrow to the terminal");
    }
  }

  // Surjective maps between equal-size outcome sets are bijections, which a
  // conservative structure cannot have on non-identity arrows.
  void check_conservativity() {
    for (int x = 0; x < s.var_count(); ++x)
      for (const auto& [y, map] : s.arrows_[static_cast<std::size_t>(x)]) {
        if (!surjective(x, y, map)) continue;  // already diagnosed
        if (s.outcome_count(x) == s.outcome_count(y))
          diag(DiagnosticKind::ConservativityViolation,
               "arrow " + s.variable(x).id + " -> " + s.variable(y).id +
                   " has a bijective fiber map");
      }
  }

  void load_products() {
    for (const auto& p : raw.products) {
      int l = s.index_.at(p.left);
      int r = s.index_.at(p.right);
      int z = s.index_.at(p.result);
      if (l == r) {
        if (z != l)
          diag(DiagnosticKind::PosetViolation,
               "product of '" + p.left + "' with itself must be itself");
        continue;
      }
      auto key = std::minmax(l, r);
      auto [it, inserted] = s.meets_.emplace(std::make_pair(key.first, key.second), z);
      if (!inserted) {
        if (it->second != z)
          diag(DiagnosticKind::PosetViolation,
               "conflicting products declared for (" + p.left + ", " + p.right + ")");
        continue;
      }
      s.products_.push_back({key.first, key.second, z});
      if (!s.refines(z, l) || !s.refines(z, r)) {
        diag(DiagnosticKind::MissingProduct,
             "product '" + p.result + "' lacks a projection arrow to '" +
                 (s.refines(z, l) ? p.right : p.left) + "'");
        continue;
      }
      // Injectivity of the joint outcome map.
      const auto& ml = s.fiber_map(z, l);
      const auto& mr = s.fiber_map(z, r);
      std::set<std::pair<int, int>> seen;
      for (int i = 0; i < s.outcome_count(z); ++i) {
        if (!seen.insert({ml[static_cast<std::size_t>(i)], mr[static_cast<std::size_t>(i)]}).second) {
          diag(DiagnosticKind::ProductNotInjective,
               "joint outcome map of '" + p.result + "' collides on pair (" +
                   s.variable(l).outcomes[static_cast<std::size_t>(ml[static_cast<std::size_t>(i)])] +
                   ", " +
                   s.variable(r).outcomes[static_cast<std::size_t>(mr[static_cast<std::size_t>(i)])] +
                   ")");
          break;
        }
      }
      // Universal property: anything refining both factors refines the product.
      for (int w = 0; w < s.var_count(); ++w) {
        if (w == z) continue;
        if (s.refines(w, l) && s.refines(w, r) && !s.refines(w, z))
          diag(DiagnosticKind::MissingProduct,
               "'" + s.variable(w).id + "' refines both '" + p.left + "' and '" +
                   p.right + "' but not their product '" + p.result + "'");
      }
    }
  }

  // Conditional cartesianness: every cospan needs a meet, declared or derived.
  void check_cospans() {
    for (int x = 0; x < s.var_count(); ++x)
      for (int y = x + 1; y < s.var_count(); ++y) {
        if (s.meet(x, y)) continue;
        for (int w = 0; w < s.var_count(); ++w) {
          if (s.refines(w, x) && s.refines(w, y)) {
            diag(DiagnosticKind::MissingProduct,
                 "cospan through '" + s.variable(w).id + "' but no product of '" +
                     s.variable(x).id + "' and '" + s.variable(y).id + "'");
            break;
          }
        }
      }
  }
};

ValidationOutcome Structure::validate(const RawStructure& raw) {
  ValidationBuilder b(raw);
  b.check_referential();
  b.load_variables();
  b.load_arrows();
  b.close_poset();
  b.check_terminal_reachability();
  b.check_conservativity();
  b.load_products();
  b.check_cospans();
  ValidationOutcome out;
  out.issues = std::move(b.issues);
  if (out.issues.empty()) out.structure = std::move(b.s);
  return out;
}

ValidationOutcome validate(const RawStructure& raw) {
  return Structure::validate(raw);
}

}  // namespace infocoh
