#include "infocoh/json_io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "infocoh/errors.hpp"

namespace infocoh {

using nlohmann::json;

namespace {

void require_keys(const json& obj, std::initializer_list<const char*> allowed,
                  const char* where) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) ok = true;
    if (!ok)
      fail(Errc::ParseError,
           std::string("unknown key '") + key + "' in " + where);
  }
}

const json& field(const json& obj, const char* key, const char* where) {
  auto it = obj.find(key);
  if (it == obj.end())
    fail(Errc::ParseError, std::string("missing key '") + key + "' in " + where);
  return *it;
}

std::string as_string(const json& v, const char* what) {
  if (!v.is_string())
    fail(Errc::ParseError, std::string(what) + " must be a string");
  return v.get<std::string>();
}

double as_number(const json& v, const char* what) {
  if (!v.is_number())
    fail(Errc::ParseError, std::string(what) + " must be a number");
  return v.get<double>();
}

long long as_integer(const json& v, const char* what) {
  if (!v.is_number_integer())
    fail(Errc::ParseError, std::string(what) + " must be an integer");
  return v.get<long long>();
}

json parse_doc(const std::string& text, const char* what) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object())
    fail(Errc::ParseError, std::string(what) + " must be a JSON object");
  return doc;
}

FwValue value_from(const json& v, const char* what) {
  if (v.is_number_integer())
    return FwValue::exact(Rational(v.get<long long>()));
  if (v.is_string()) return FwValue::exact(parse_rational(v.get<std::string>()));
  if (v.is_object()) {
    require_keys(v, {"log"}, what);
    return FwValue::from_log(as_number(field(v, "log", what), "'log'"));
  }
  fail(Errc::ParseError, std::string(what) +
                             " must be an integer, a 'p/q' string, or "
                             "{\"log\": x}");
}

json value_to(const FwValue& v) {
  if (v.is_exact()) return json(format_rational(v.rational()));
  return json{{"log", v.log()}};
}

Rational rational_from(const json& v, const char* what) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  fail(Errc::ParseError,
       std::string(what) + " must be an integer or a 'p/q' string");
}

}  // namespace

RawStructure parse_structure_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(Errc::ParseError, "structure file must be a JSON object");
  require_keys(doc, {"variables", "arrows", "terminal", "products", "comment"},
               "structure file");

  RawStructure raw;
  const json& vars = field(doc, "variables", "structure file");
  if (!vars.is_array()) fail(Errc::ParseError, "'variables' must be an array");
  for (const json& v : vars) {
    if (!v.is_object()) fail(Errc::ParseError, "variable entries must be objects");
    require_keys(v, {"id", "outcomes"}, "variable entry");
    VariableDecl decl;
    decl.id = as_string(field(v, "id", "variable entry"), "variable id");
    const json& outs = field(v, "outcomes", "variable entry");
    if (!outs.is_array()) fail(Errc::ParseError, "'outcomes' must be an array");
    for (const json& o : outs)
      decl.outcomes.push_back(as_string(o, "outcome label"));
    raw.variables.push_back(std::move(decl));
  }

  raw.terminal = as_string(field(doc, "terminal", "structure file"), "'terminal'");

  if (auto it = doc.find("arrows"); it != doc.end()) {
    if (!it->is_array()) fail(Errc::ParseError, "'arrows' must be an array");
    for (const json& a : *it) {
      if (!a.is_object()) fail(Errc::ParseError, "arrow entries must be objects");
      require_keys(a, {"source", "target", "map"}, "arrow entry");
      ArrowDecl decl;
      decl.source = as_string(field(a, "source", "arrow entry"), "arrow source");
      decl.target = as_string(field(a, "target", "arrow entry"), "arrow target");
      const json& m = field(a, "map", "arrow entry");
      if (!m.is_object()) fail(Errc::ParseError, "arrow 'map' must be an object");
      for (const auto& [from, to] : m.items())
        decl.map[from] = as_string(to, "arrow map value");
      raw.arrows.push_back(std::move(decl));
    }
  }

  if (auto it = doc.find("products"); it != doc.end()) {
    if (!it->is_array()) fail(Errc::ParseError, "'products' must be an array");
    for (const json& p : *it) {
      if (!p.is_object()) fail(Errc::ParseError, "product entries must be objects");
      require_keys(p, {"left", "right", "result"}, "product entry");
      ProductDecl decl;
      decl.left = as_string(field(p, "left", "product entry"), "product left");
      decl.right = as_string(field(p, "right", "product entry"), "product right");
      decl.result = as_string(field(p, "result", "product entry"), "product result");
      raw.products.push_back(std::move(decl));
    }
  }

  if (auto it = doc.find("comment"); it != doc.end())
    raw.comment = as_string(*it, "'comment'");

  return raw;
}

std::string structure_to_json(const RawStructure& raw) {
  json doc = json::object();
  json vars = json::array();
  for (const auto& v : raw.variables)
    vars.push_back({{"id", v.id}, {"outcomes", v.outcomes}});
  doc["variables"] = std::move(vars);
  json arrows = json::array();
  for (const auto& a : raw.arrows) {
    json m = json::object();
    for (const auto& [from, to] : a.map) m[from] = to;
    arrows.push_back({{"source", a.source}, {"target", a.target}, {"map", std::move(m)}});
  }
  doc["arrows"] = std::move(arrows);
  doc["terminal"] = raw.terminal;
  json prods = json::array();
  for (const auto& p : raw.products)
    prods.push_back({{"left", p.left}, {"right", p.right}, {"result", p.result}});
  doc["products"] = std::move(prods);
  if (!raw.comment.empty()) doc["comment"] = raw.comment;
  return doc.dump(2) + "\n";
}

RawStructure load_structure_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_structure_json(buf.str());
}

FwValue parse_value_json(const std::string& text) {
  json v;
  try {
    v = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return value_from(v, "value");
}

std::string value_to_json(const FwValue& v) { return value_to(v).dump(); }

CountingFunction parse_counts_json(const Structure& s,
                                   const std::string& text) {
  json doc = parse_doc(text, "counting function file");
  require_keys(doc, {"variable", "values"}, "counting function file");
  int var = s.index_of(
      as_string(field(doc, "variable", "counting function"), "'variable'"));
  const json& vals = field(doc, "values", "counting function");
  if (!vals.is_array()) fail(Errc::ParseError, "'values' must be an array");
  std::vector<long long> counts;
  for (const json& v : vals) counts.push_back(as_integer(v, "count entry"));
  return make_counts(s, var, counts);
}

std::string counts_to_json(const Structure& s, const CountingFunction& nu) {
  json doc;
  doc["variable"] = s.variable(nu.variable).id;
  doc["values"] = nu.counts;
  return doc.dump(2) + "\n";
}

ProbabilityLaw parse_law_json(const Structure& s, const std::string& text) {
  json doc = parse_doc(text, "law file");
  require_keys(doc, {"variable", "values"}, "law file");
  int var = s.index_of(as_string(field(doc, "variable", "law"), "'variable'"));
  const json& vals = field(doc, "values", "law");
  if (!vals.is_array()) fail(Errc::ParseError, "'values' must be an array");
  std::vector<Rational> weights;
  for (const json& v : vals) weights.push_back(rational_from(v, "weight"));
  return make_law(s, var, weights);
}

std::string law_to_json(const Structure& s, const ProbabilityLaw& p) {
  json doc;
  doc["variable"] = s.variable(p.variable).id;
  json vals = json::array();
  for (const auto& w : p.weights) vals.push_back(format_rational(w));
  doc["values"] = std::move(vals);
  return doc.dump(2) + "\n";
}

namespace {

BinomialTable table_from(const json& arr, long long limit, const char* what) {
  if (!arr.is_array())
    fail(Errc::ParseError, std::string(what) + " must be an array");
  BinomialTable t;
  t.limit = limit;
  for (const json& e : arr) {
    if (!e.is_object())
      fail(Errc::ParseError, std::string(what) + " entries must be objects");
    require_keys(e, {"parts", "value"}, "table entry");
    const json& parts = field(e, "parts", "table entry");
    if (!parts.is_array() || parts.size() != 2)
      fail(Errc::ParseError, "'parts' must be a two-element array");
    long long n1 = as_integer(parts[0], "part");
    long long n2 = as_integer(parts[1], "part");
    if (n1 < 0 || n2 < 0 || n1 + n2 < 1 || n1 + n2 > limit)
      fail(Errc::ParseError, "table entry outside 1 <= n1+n2 <= limit");
    auto [it, fresh] =
        t.entries.emplace(std::make_pair(n1, n2), value_from(field(e, "value", "table entry"), "table value"));
    if (!fresh) fail(Errc::ParseError, "duplicate table entry");
  }
  for (long long total = 1; total <= limit; ++total)
    for (long long n1 = 0; n1 <= total; ++n1)
      if (!t.has(n1, total - n1))
        fail(Errc::ParseError, "table is missing the entry (" +
                                   std::to_string(n1) + ", " +
                                   std::to_string(total - n1) + ")");
  return t;
}

json table_entries(const BinomialTable& t) {
  json arr = json::array();
  for (const auto& [key, v] : t.entries)
    arr.push_back({{"parts", {key.first, key.second}}, {"value", value_to(v)}});
  return arr;
}

}  // namespace

TablePair parse_table_file(const std::string& text) {
  json doc = parse_doc(text, "table file");
  require_keys(doc, {"limit", "f1", "f2"}, "table file");
  long long limit = as_integer(field(doc, "limit", "table file"), "'limit'");
  if (limit < 1) fail(Errc::ParseError, "'limit' must be positive");
  TablePair tp;
  tp.f1 = table_from(field(doc, "f1", "table file"), limit, "'f1'");
  if (auto it = doc.find("f2"); it != doc.end())
    tp.f2 = table_from(*it, limit, "'f2'");
  else
    tp.f2 = tp.f1;
  return tp;
}

std::string table_to_json(const BinomialTable& f1, const BinomialTable& f2) {
  json doc;
  doc["limit"] = f1.limit;
  doc["f1"] = table_entries(f1);
  doc["f2"] = table_entries(f2);
  return doc.dump(2) + "\n";
}

namespace {

MagnitudeFunctional mag_from(const json& f) {
  if (!f.is_object())
    fail(Errc::ParseError, "degree-0 functional must be an object");
  require_keys(f, {"form", "k", "values"}, "degree-0 functional");
  std::string form = as_string(field(f, "form", "functional"), "'form'");
  if (form == "one") return MagnitudeFunctional::one();
  if (form == "exp")
    return MagnitudeFunctional::exp_k(
        as_number(field(f, "k", "functional"), "'k'"));
  if (form == "table") {
    const json& vals = field(f, "values", "functional");
    if (!vals.is_array()) fail(Errc::ParseError, "'values' must be an array");
    std::vector<FwValue> values;
    for (const json& v : vals) values.push_back(value_from(v, "table value"));
    return MagnitudeFunctional::table(std::move(values));
  }
  fail(Errc::ParseError, "unknown degree-0 form '" + form + "'");
}

CombFunctional comb_from(const Structure& s, int var, const json& f) {
  if (!f.is_object())
    fail(Errc::ParseError, "degree-1 functional must be an object");
  require_keys(f, {"form", "k", "seq", "r", "bound", "entries"},
               "degree-1 functional");
  std::string form = as_string(field(f, "form", "functional"), "'form'");
  if (form == "one") return CombFunctional::one();
  if (form == "exp")
    return CombFunctional::exp_k(as_number(field(f, "k", "functional"), "'k'"));
  if (form == "fw")
    return CombFunctional::fw(
        parse_family(as_string(field(f, "seq", "functional"), "'seq'")));
  if (form == "fwpow")
    return CombFunctional::fw_pow(
        parse_family(as_string(field(f, "seq", "functional"), "'seq'")),
        as_number(field(f, "r", "functional"), "'r'"));
  if (form == "table") {
    long long bound = as_integer(field(f, "bound", "functional"), "'bound'");
    if (bound < 1) fail(Errc::ParseError, "'bound' must be positive");
    auto index =
        std::make_shared<CompositionIndex>(s.outcome_count(var), bound);
    std::vector<FwValue> values(static_cast<std::size_t>(index->size()),
                                FwValue::exact(Rational(1)));
    const json& entries = field(f, "entries", "functional");
    if (!entries.is_array())
      fail(Errc::ParseError, "'entries' must be an array");
    for (const json& e : entries) {
      if (!e.is_object())
        fail(Errc::ParseError, "table entries must be objects");
      require_keys(e, {"parts", "value"}, "table entry");
      const json& parts = field(e, "parts", "table entry");
      if (!parts.is_array())
        fail(Errc::ParseError, "'parts' must be an array");
      std::vector<long long> nu;
      for (const json& c : parts) nu.push_back(as_integer(c, "part"));
      long long rank = index->rank(nu);
      values[static_cast<std::size_t>(rank)] =
          value_from(field(e, "value", "table entry"), "table value");
    }
    return CombFunctional::table(std::move(index), std::move(values));
  }
  fail(Errc::ParseError, "unknown degree-1 form '" + form + "'");
}

ProbFunctional prob_from(const json& f) {
  if (!f.is_object())
    fail(Errc::ParseError, "law functional must be an object");
  require_keys(f, {"form", "value", "alpha", "seed"}, "law functional");
  std::string form = as_string(field(f, "form", "functional"), "'form'");
  if (form == "constant")
    return ProbFunctional::constant(
        as_number(field(f, "value", "functional"), "'value'"));
  if (form == "entropy")
    return ProbFunctional::shannon_like(
        as_number(field(f, "alpha", "functional"), "'alpha'"));
  if (form == "random") {
    long long seed = as_integer(field(f, "seed", "functional"), "'seed'");
    if (seed < 0) fail(Errc::ParseError, "'seed' must be nonnegative");
    return ProbFunctional::hash_random(static_cast<std::uint64_t>(seed));
  }
  fail(Errc::ParseError, "unknown law-functional form '" + form + "'");
}

}  // namespace

CochainType cochain_file_type(const std::string& text) {
  json doc = parse_doc(text, "cochain file");
  std::string type =
      as_string(field(doc, "type", "cochain file"), "'type'");
  if (type == "combinatorial") return CochainType::Combinatorial;
  if (type == "probabilistic") return CochainType::Probabilistic;
  fail(Errc::ParseError, "unknown cochain type '" + type + "'");
}

CombCochain parse_comb_cochain(const Structure& s, const std::string& text) {
  json doc = parse_doc(text, "cochain file");
  require_keys(doc, {"type", "degree", "psi", "variables"}, "cochain file");
  if (as_string(field(doc, "type", "cochain file"), "'type'") !=
      "combinatorial")
    fail(Errc::ParseError, "not a combinatorial cochain file");
  long long degree = as_integer(field(doc, "degree", "cochain file"),
                                "'degree'");
  if (degree == 0) {
    if (doc.contains("variables"))
      fail(Errc::ParseError, "degree-0 files carry 'psi', not 'variables'");
    return CombCochain::degree0(mag_from(field(doc, "psi", "cochain file")));
  }
  if (degree == 1) {
    if (doc.contains("psi"))
      fail(Errc::ParseError, "degree-1 files carry 'variables', not 'psi'");
    const json& vars = field(doc, "variables", "cochain file");
    if (!vars.is_object())
      fail(Errc::ParseError, "'variables' must be an object");
    std::map<int, CombFunctional> by_var;
    for (const auto& [id, f] : vars.items()) {
      int var = s.index_of(id);
      by_var.emplace(var, comb_from(s, var, f));
    }
    return CombCochain::per_variable1(std::move(by_var));
  }
  fail(Errc::ParseError,
       "cochain files carry degree 0 or 1 (higher degrees arise as "
       "coboundaries)");
}

ProbCochain parse_prob_cochain(const Structure& s, const std::string& text) {
  json doc = parse_doc(text, "cochain file");
  require_keys(doc, {"type", "degree", "alpha", "value", "variables"},
               "cochain file");
  if (as_string(field(doc, "type", "cochain file"), "'type'") !=
      "probabilistic")
    fail(Errc::ParseError, "not a probabilistic cochain file");
  double alpha = as_number(field(doc, "alpha", "cochain file"), "'alpha'");
  long long degree = as_integer(field(doc, "degree", "cochain file"),
                                "'degree'");
  if (degree == 0) {
    if (doc.contains("variables"))
      fail(Errc::ParseError, "degree-0 files carry 'value', not 'variables'");
    return ProbCochain::degree0(
        alpha, as_number(field(doc, "value", "cochain file"), "'value'"));
  }
  if (degree == 1) {
    if (doc.contains("value"))
      fail(Errc::ParseError, "degree-1 files carry 'variables', not 'value'");
    const json& vars = field(doc, "variables", "cochain file");
    if (!vars.is_object())
      fail(Errc::ParseError, "'variables' must be an object");
    std::map<int, ProbFunctional> by_var;
    for (const auto& [id, f] : vars.items())
      by_var.emplace(s.index_of(id), prob_from(f));
    return ProbCochain::per_variable1(alpha, std::move(by_var));
  }
  fail(Errc::ParseError,
       "cochain files carry degree 0 or 1 (higher degrees arise as "
       "coboundaries)");
}

namespace {

json witness_to(const Structure& s, const CheckWitness& w) {
  json out;
  json gens = json::array();
  for (int g : w.gens) gens.push_back(s.variable(g).id);
  out["generators"] = std::move(gens);
  if (!w.counts.empty()) out["counts"] = w.counts;
  if (!w.weights.empty()) {
    json ws = json::array();
    for (const auto& q : w.weights) ws.push_back(format_rational(q));
    out["weights"] = std::move(ws);
  }
  out["deviation"] = w.deviation;
  return out;
}

json sequence_to(const AdmissibleSequence& d, long long upto) {
  json out;
  out["family"] = d.tag();
  if (auto len = d.length()) upto = std::min(upto, *len);
  json vals = json::array();
  for (long long n = 1; n <= upto; ++n) vals.push_back(value_to(d.d(n)));
  out["d"] = std::move(vals);
  return out;
}

json nondeg_witness_to(const Structure& s, int x, int y,
                       const NondegWitness& w) {
  json out;
  json ox = json::array();
  for (int i : w.order_x) ox.push_back(s.variable(x).outcomes[size_t(i)]);
  json oy = json::array();
  for (int j : w.order_y) oy.push_back(s.variable(y).outcomes[size_t(j)]);
  out["order_x"] = std::move(ox);
  out["order_y"] = std::move(oy);
  json path = json::array();
  for (auto [a, b] : w.path) path.push_back({a, b});
  out["path"] = std::move(path);
  return out;
}

}  // namespace

std::string verdict_to_json(const Structure& s, const CheckVerdict& v) {
  json doc;
  doc["status"] = v.pass ? "PASS" : "FAIL";
  doc["cases"] = v.cases;
  if (v.witness) doc["witness"] = witness_to(s, *v.witness);
  return doc.dump(2) + "\n";
}

std::string feith_result_to_json(const FeithResult& r) {
  json doc;
  doc["status"] = feith_status_name(r.status);
  if (r.d) {
    long long upto = r.d->length().value_or(0);
    doc["sequence"] = sequence_to(*r.d, upto);
  }
  if (r.witness) doc["witness"] = {(*r.witness)[0], (*r.witness)[1], (*r.witness)[2]};
  if (!r.message.empty()) doc["message"] = r.message;
  return doc.dump(2) + "\n";
}

std::string nondeg_to_json(const Structure& s, int x, int y,
                           const std::optional<NondegWitness>& w) {
  json doc;
  doc["x"] = s.variable(x).id;
  doc["y"] = s.variable(y).id;
  doc["status"] = w ? "FOUND" : "NOT_FOUND";
  if (w) doc["witness"] = nondeg_witness_to(s, x, y, *w);
  return doc.dump(2) + "\n";
}

std::string sequence_to_json(const AdmissibleSequence& d, long long upto) {
  return sequence_to(d, upto).dump(2) + "\n";
}

std::string classify_to_json(const Structure& s, const ClassifyResult& r,
                             long long upto) {
  json doc;
  doc["coboundary"] = r.coboundary;
  json comps = json::array();
  for (const auto& c : r.components) {
    json cj;
    json members = json::array();
    for (int v : c.members) members.push_back(s.variable(v).id);
    cj["members"] = std::move(members);
    cj["x"] = s.variable(c.x).id;
    cj["y"] = s.variable(c.y).id;
    cj["witness"] = nondeg_witness_to(s, c.x, c.y, c.witness);
    cj["sequence"] = sequence_to(c.d, upto);
    comps.push_back(std::move(cj));
  }
  doc["components"] = std::move(comps);
  return doc.dump(2) + "\n";
}

std::string limit_verdict_to_json(const std::string& family,
                                  const std::vector<Rational>& p,
                                  const LimitVerdict& v) {
  json doc;
  doc["family"] = family;
  doc["alpha"] = v.alpha;
  json pw = json::array();
  for (const auto& q : p) pw.push_back(format_rational(q));
  doc["p"] = std::move(pw);
  json samples = json::array();
  for (const auto& smp : v.estimate.samples)
    samples.push_back({smp.n, smp.value});
  doc["samples"] = std::move(samples);
  doc["limit"] = v.estimate.limit;
  doc["target"] = v.target;
  doc["certificate"] = v.estimate.certificate;
  doc["deviation"] = v.deviation;
  if (v.sandwich) doc["sandwich"] = *v.sandwich;
  doc["verdict"] = v.pass ? "PASS" : "FAIL";
  if (!v.message.empty()) doc["message"] = v.message;
  return doc.dump(2) + "\n";
}

}  // namespace infocoh
