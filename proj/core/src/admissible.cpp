#include "infocoh/admissible.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "infocoh/errors.hpp"

namespace infocoh {

namespace {

// Shortest decimal form that parses back to exactly the same double.
std::string format_double_shortest(double x) {
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

}  // namespace

AdmissibleSequence AdmissibleSequence::natural() {
  AdmissibleSequence s;
  s.kind_ = Kind::Natural;
  return s;
}

AdmissibleSequence AdmissibleSequence::gaussian(Rational q) {
  if (!(q > 0) || q == 1)
    fail(Errc::DomainViolation, "gaussian parameter q must be positive and not 1");
  AdmissibleSequence s;
  s.kind_ = Kind::Gaussian;
  s.q_ = std::move(q);
  return s;
}

AdmissibleSequence AdmissibleSequence::fibonacci() {
  AdmissibleSequence s;
  s.kind_ = Kind::Fibonacci;
  return s;
}

AdmissibleSequence AdmissibleSequence::alpha_family(double k, double alpha) {
  if (!(alpha > 0.0) || alpha == 1.0)
    fail(Errc::DomainViolation, "alpha-family order must be positive and not 1");
  if (!std::isfinite(k)) fail(Errc::DomainViolation, "alpha-family scale must be finite");
  AdmissibleSequence s;
  s.kind_ = Kind::AlphaFamily;
  s.k_ = k;
  s.alpha_ = alpha;
  return s;
}

AdmissibleSequence AdmissibleSequence::explicit_values(std::vector<Rational> values) {
  if (values.empty()) fail(Errc::DomainViolation, "explicit sequence is empty");
  if (values.front() != 1)
    fail(Errc::DomainViolation, "explicit sequence must start with D_1 = 1");
  for (const Rational& v : values)
    if (!(v > 0)) fail(Errc::DomainViolation, "explicit sequence entries must be positive");
  AdmissibleSequence s;
  s.kind_ = Kind::Explicit;
  s.values_ = std::move(values);
  return s;
}

AdmissibleSequence AdmissibleSequence::explicit_logs(std::vector<double> logs) {
  if (logs.empty()) fail(Errc::DomainViolation, "explicit log sequence is empty");
  if (logs.front() != 0.0)
    fail(Errc::DomainViolation, "explicit log sequence must start with ln D_1 = 0");
  for (double v : logs)
    if (!std::isfinite(v))
      fail(Errc::DomainViolation, "explicit log sequence entries must be finite");
  AdmissibleSequence s;
  s.kind_ = Kind::ExplicitLog;
  s.logs_ = std::move(logs);
  return s;
}

AdmissibleSequence AdmissibleSequence::ones() {
  AdmissibleSequence s;
  s.kind_ = Kind::Ones;
  return s;
}

bool AdmissibleSequence::is_exact() const {
  return kind_ != Kind::AlphaFamily && kind_ != Kind::ExplicitLog;
}

std::optional<long long> AdmissibleSequence::length() const {
  if (kind_ == Kind::Explicit) return static_cast<long long>(values_.size());
  if (kind_ == Kind::ExplicitLog) return static_cast<long long>(logs_.size());
  return std::nullopt;
}

Rational AdmissibleSequence::d_exact_raw(long long n) const {
  switch (kind_) {
    case Kind::Natural:
      return Rational(n);
    case Kind::Gaussian:
      return (rational_pow(q_, n) - 1) / (q_ - 1);
    case Kind::Fibonacci: {
      Integer a = 1, b = 1;  // F_1, F_2
      for (long long i = 2; i < n; ++i) {
        Integer c = a + b;
        a = b;
        b = c;
      }
      return Rational(n == 1 ? a : b);
    }
    case Kind::Explicit:
      if (n > static_cast<long long>(values_.size()))
        fail(Errc::OutOfRange, "explicit sequence has no D_" + std::to_string(n));
      return values_[static_cast<std::size_t>(n - 1)];
    case Kind::Ones:
      return Rational(1);
    case Kind::AlphaFamily:
    case Kind::ExplicitLog:
      break;
  }
  fail(Errc::DomainViolation, "sequence is not rational-valued");
}

double AdmissibleSequence::d_log_raw(long long n) const {
  switch (kind_) {
    case Kind::AlphaFamily:
      return k_ * (std::pow(static_cast<double>(n), alpha_ - 1.0) - 1.0);
    case Kind::ExplicitLog:
      if (n > static_cast<long long>(logs_.size()))
        fail(Errc::OutOfRange, "explicit log sequence has no D_" + std::to_string(n));
      return logs_[static_cast<std::size_t>(n - 1)];
    default:
      return log_rational(d_exact_raw(n));
  }
}

Rational AdmissibleSequence::d_exact(long long n) const {
  if (n < 1) fail(Errc::OutOfRange, "D_n needs n >= 1");
  return d_exact_raw(n);
}

double AdmissibleSequence::d_log(long long n) const {
  if (n < 1) fail(Errc::OutOfRange, "D_n needs n >= 1");
  return d_log_raw(n);
}

FwValue AdmissibleSequence::d(long long n) const {
  if (is_exact()) return FwValue::exact(d_exact(n));
  return FwValue::from_log(d_log(n));
}

Rational AdmissibleSequence::factorial_exact(long long n) const {
  if (n < 0) fail(Errc::OutOfRange, "factorial needs n >= 0");
  if (!is_exact()) fail(Errc::DomainViolation, "sequence is not rational-valued");
  std::lock_guard<std::mutex> lock(memo_->m);
  auto& fact = memo_->fact;
  while (static_cast<long long>(fact.size()) <= n)
    fact.push_back(fact.back() * d_exact_raw(static_cast<long long>(fact.size())));
  return fact[static_cast<std::size_t>(n)];
}

double AdmissibleSequence::factorial_log(long long n) const {
  if (n < 0) fail(Errc::OutOfRange, "factorial needs n >= 0");
  std::lock_guard<std::mutex> lock(memo_->m);
  auto& lf = memo_->logfact;
  while (static_cast<long long>(lf.size()) <= n)
    lf.push_back(lf.back() + d_log_raw(static_cast<long long>(lf.size())));
  return lf[static_cast<std::size_t>(n)];
}

FwValue AdmissibleSequence::factorial(long long n) const {
  if (is_exact()) return FwValue::exact(factorial_exact(n));
  return FwValue::from_log(factorial_log(n));
}

std::string AdmissibleSequence::tag() const {
  switch (kind_) {
    case Kind::Natural: return "natural";
    case Kind::Fibonacci: return "fibonacci";
    case Kind::Ones: return "ones";
    case Kind::Gaussian: return "gaussian:q=" + format_rational(q_);
    case Kind::AlphaFamily:
      return "alpha:K=" + format_double_shortest(k_) +
             ",alpha=" + format_double_shortest(alpha_);
    case Kind::Explicit: {
      std::string out = "explicit:";
      for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ',';
        out += format_rational(values_[i]);
      }
      return out;
    }
    case Kind::ExplicitLog: {
      std::string out = "explicitlog:";
      for (std::size_t i = 0; i < logs_.size(); ++i) {
        if (i) out += ',';
        out += format_double_shortest(logs_[i]);
      }
      return out;
    }
  }
  return "?";
}

AdmissibleSequence parse_family(const std::string& tag) {
  auto colon = tag.find(':');
  std::string head = tag.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : tag.substr(colon + 1);
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
  };
  auto parse_double = [&](const std::string& s) {
    try {
      std::size_t pos = 0;
      double v = std::stod(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      fail(Errc::UnsupportedFamily, "bad number '" + s + "' in family tag '" + tag + "'");
    }
  };

  if (head == "natural" && rest.empty()) return AdmissibleSequence::natural();
  if (head == "fibonacci" && rest.empty()) return AdmissibleSequence::fibonacci();
  if (head == "ones" && rest.empty()) return AdmissibleSequence::ones();
  try {
    if (head == "gaussian") {
      auto kv = split(rest, '=');
      if (kv.size() == 2 && kv[0] == "q")
        return AdmissibleSequence::gaussian(parse_rational(kv[1]));
    } else if (head == "alpha") {
      std::optional<double> k, a;
      for (const auto& item : split(rest, ',')) {
        auto kv = split(item, '=');
        if (kv.size() != 2) break;
        if (kv[0] == "K") k = parse_double(kv[1]);
        else if (kv[0] == "alpha") a = parse_double(kv[1]);
      }
      if (k && a) return AdmissibleSequence::alpha_family(*k, *a);
    } else if (head == "explicit" && !rest.empty()) {
      std::vector<Rational> values;
      for (const auto& item : split(rest, ',')) values.push_back(parse_rational(item));
      return AdmissibleSequence::explicit_values(std::move(values));
    } else if (head == "explicitlog" && !rest.empty()) {
      std::vector<double> logs;
      for (const auto& item : split(rest, ',')) logs.push_back(parse_double(item));
      return AdmissibleSequence::explicit_logs(std::move(logs));
    }
  } catch (const Error& e) {
    if (e.code() == Errc::DomainViolation || e.code() == Errc::ParseError)
      fail(Errc::UnsupportedFamily,
           "family tag '" + tag + "' rejected: " + std::string(e.what()));
    throw;
  }
  fail(Errc::UnsupportedFamily, "unrecognized family tag '" + tag + "'");
}

namespace {

long long checked_total(std::span<const long long> parts) {
  if (parts.empty()) fail(Errc::AllZeroParts, "no parts given");
  long long total = 0;
  for (long long p : parts) {
    if (p < 0) fail(Errc::DomainViolation, "parts must be nonnegative");
    total += p;
  }
  if (total == 0) fail(Errc::AllZeroParts, "parts sum to zero");
  return total;
}

}  // namespace

FwValue fw_multinomial(const AdmissibleSequence& d,
                       std::span<const long long> parts) {
  long long total = checked_total(parts);
  if (d.is_exact()) {
    Rational r = d.factorial_exact(total);
    for (long long p : parts)
      if (p > 0) r /= d.factorial_exact(p);
    return FwValue::exact(std::move(r));
  }
  double lg = d.factorial_log(total);
  for (long long p : parts)
    if (p > 0) lg -= d.factorial_log(p);
  return FwValue::from_log(lg);
}

double fw_multinomial_log(const AdmissibleSequence& d,
                          std::span<const long long> parts) {
  long long total = checked_total(parts);
  double lg = d.factorial_log(total);
  for (long long p : parts)
    if (p > 0) lg -= d.factorial_log(p);
  return lg;
}

FwValue fw_binomial(const AdmissibleSequence& d, long long n, long long k) {
  if (k < 0 || k > n) fail(Errc::OutOfRange, "binomial needs 0 <= k <= n");
  const long long parts[2] = {k, n - k};
  return fw_multinomial(d, parts);
}

PascalResidual pascal_residual(const AdmissibleSequence& d, long long n,
                               long long k) {
  if (k < 1 || k > n - 1)
    fail(Errc::OutOfRange, "recurrence needs 1 <= k <= n-1");
  PascalResidual out;
  if (d.is_exact()) {
    Rational lhs = fw_binomial(d, n, k).rational() - fw_binomial(d, n - 1, k).rational();
    Rational rhs = fw_binomial(d, n - 1, k - 1).rational() *
                   (d.d_exact(n) - d.d_exact(n - k)) / d.d_exact(k);
    Rational diff = lhs - rhs;
    double scale = std::max({std::abs(to_double(lhs)), std::abs(to_double(rhs)), 1.0});
    out.relative = std::abs(to_double(diff)) / scale;
    out.exact = std::move(diff);
    return out;
  }
  double lhs = std::exp(fw_binomial(d, n, k).log()) -
               std::exp(fw_binomial(d, n - 1, k).log());
  double rhs = std::exp(fw_binomial(d, n - 1, k - 1).log()) *
               (std::exp(d.d_log(n)) - std::exp(d.d_log(n - k))) /
               std::exp(d.d_log(k));
  out.relative = std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1.0});
  return out;
}

FwValue grouping_identity_ratio(const AdmissibleSequence& d,
                                std::span<const long long> parts,
                                std::span<const int> grouping) {
  if (grouping.size() != parts.size())
    fail(Errc::InvalidGrouping, "grouping must assign every part");
  int groups = 0;
  for (int g : grouping) {
    if (g < 0) fail(Errc::InvalidGrouping, "negative group index");
    groups = std::max(groups, g + 1);
  }
  std::vector<char> hit(static_cast<std::size_t>(groups), 0);
  for (int g : grouping) hit[static_cast<std::size_t>(g)] = 1;
  if (std::find(hit.begin(), hit.end(), 0) != hit.end())
    fail(Errc::InvalidGrouping, "group indices must cover 0..G-1");

  std::vector<long long> sums(static_cast<std::size_t>(groups), 0);
  std::vector<std::vector<long long>> members(static_cast<std::size_t>(groups));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    sums[static_cast<std::size_t>(grouping[i])] += parts[i];
    members[static_cast<std::size_t>(grouping[i])].push_back(parts[i]);
  }

  FwValue ratio = fw_multinomial(d, parts);
  ratio = ratio / fw_multinomial(d, sums);
  for (const auto& group : members) {
    long long s = 0;
    for (long long p : group) s += p;
    if (s == 0) continue;  // empty-mass group contributes an empty product
    ratio = ratio / fw_multinomial(d, group);
  }
  return ratio;
}

const FwValue& BinomialTable::at(long long n1, long long n2) const {
  auto it = entries.find({n1, n2});
  if (it == entries.end())
    fail(Errc::OutOfRange, "table has no entry (" + std::to_string(n1) + ", " +
                               std::to_string(n2) + ")");
  return it->second;
}

bool BinomialTable::has(long long n1, long long n2) const {
  return entries.count({n1, n2}) != 0;
}

BinomialTable fw_binomial_table(const AdmissibleSequence& d, long long limit) {
  if (limit < 1) fail(Errc::OutOfRange, "table limit must be >= 1");
  BinomialTable t;
  t.limit = limit;
  for (long long n1 = 0; n1 <= limit; ++n1)
    for (long long n2 = 0; n1 + n2 <= limit; ++n2) {
      if (n1 + n2 == 0) continue;
      const long long parts[2] = {n1, n2};
      t.entries.emplace(std::make_pair(n1, n2), fw_multinomial(d, parts));
    }
  return t;
}

AdmissibleSequence sequence_from_binomials(const BinomialTable& table,
                                           double log_tol) {
  long long limit = table.limit;
  if (limit < 1) fail(Errc::OutOfRange, "table limit must be >= 1");
  bool exact = true;
  for (const auto& [_, v] : table.entries) exact = exact && v.is_exact();

  AdmissibleSequence d = AdmissibleSequence::ones();
  if (exact) {
    // [n]!/[n-1]! recovered from the n1 = 1 column: f(1, n-1) = D_n.
    std::vector<Rational> values{Rational(1)};
    for (long long n = 2; n <= limit; ++n) {
      Rational v = table.at(1, n - 1).rational();
      if (!(v > 0))
        fail(Errc::InconsistentTable,
             "entry (1, " + std::to_string(n - 1) + ") is not positive");
      values.push_back(std::move(v));
    }
    d = AdmissibleSequence::explicit_values(std::move(values));
  } else {
    std::vector<double> logs{0.0};
    for (long long n = 2; n <= limit; ++n)
      logs.push_back(table.at(1, n - 1).log());
    d = AdmissibleSequence::explicit_logs(std::move(logs));
  }

  for (const auto& [key, v] : table.entries) {
    const long long parts[2] = {key.first, key.second};
    FwValue expect = fw_multinomial(d, parts);
    bool match = exact ? expect.rational() == v.rational()
                       : expect.same_value(v, log_tol);
    if (!match)
      fail(Errc::InconsistentTable,
           "entry (" + std::to_string(key.first) + ", " +
               std::to_string(key.second) + ") = " + v.str() +
               " disagrees with recovered sequence value " + expect.str());
  }
  return d;
}

}  // namespace infocoh
