// Command-line front end: every capability as a batch subcommand with
// exit codes 0 = pass, 1 = verdict failure, 2 = input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "infocoh/asymptotics.hpp"
#include "infocoh/classify.hpp"
#include "infocoh/cochain.hpp"
#include "infocoh/errors.hpp"
#include "infocoh/feith.hpp"
#include "infocoh/json_io.hpp"
#include "infocoh/nondegenerate.hpp"

namespace {

using namespace infocoh;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<long long> parse_int_list(const std::string& csv) {
  std::vector<long long> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      fail(Errc::BadArgument, "not an integer: '" + item + "'");
    }
    if (used != item.size())
      fail(Errc::BadArgument, "not an integer: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) fail(Errc::BadArgument, "empty list");
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) fail(Errc::BadArgument, "empty list");
  return out;
}

Structure load_valid_structure(const std::string& path) {
  ValidationOutcome out = validate(load_structure_file(path));
  if (!out.ok()) {
    std::string msg = "structure '" + path + "' is invalid:";
    for (const auto& d : out.issues)
      msg += std::string("\n  ") + diagnostic_name(d.kind) + ": " + d.message;
    fail(Errc::ParseError, msg);
  }
  return *out.structure;
}

void describe_witness(const Structure& s, const CheckWitness& w) {
  std::string gens;
  for (int g : w.gens) gens += (gens.empty() ? "" : "|") + s.variable(g).id;
  std::printf("  at [%s]", gens.c_str());
  if (!w.counts.empty()) {
    std::printf(" counts=(");
    for (size_t i = 0; i < w.counts.size(); ++i)
      std::printf("%s%lld", i ? "," : "", w.counts[i]);
    std::printf(")");
  }
  if (!w.weights.empty()) {
    std::printf(" weights=(");
    for (size_t i = 0; i < w.weights.size(); ++i)
      std::printf("%s%s", i ? "," : "", format_rational(w.weights[i]).c_str());
    std::printf(")");
  }
  std::printf(" deviation=%.6g\n", w.deviation);
}

int emit_verdict(const Structure& s, const CheckVerdict& v, bool json) {
  if (json) {
    std::fputs(verdict_to_json(s, v).c_str(), stdout);
  } else if (v.pass) {
    std::printf("PASS (%lld cases)\n", v.cases);
  } else {
    std::printf("FAIL (%lld cases)\n", v.cases);
    if (v.witness) describe_witness(s, *v.witness);
  }
  return v.pass ? 0 : 1;
}

double family_order(const AdmissibleSequence& d) {
  switch (d.kind()) {
    case AdmissibleSequence::Kind::Natural:
      return 1.0;
    case AdmissibleSequence::Kind::Gaussian:
      return 2.0;
    case AdmissibleSequence::Kind::AlphaFamily:
      return d.alpha_order();
    default:
      fail(Errc::UnsupportedFamily,
           "no growth order for family '" + d.tag() + "'");
  }
}

void print_sequence_line(const AdmissibleSequence& d, long long upto) {
  if (auto len = d.length()) upto = std::min(upto, *len);
  std::printf("D =");
  for (long long n = 1; n <= upto; ++n)
    std::printf(" %s", d.d(n).str().c_str());
  std::printf("\n");
}

struct Args {
  bool json = false;

  std::string structure_path;
  std::string cochain_path;
  std::string table_path;
  std::string seq;
  std::string parts;
  std::string weights;
  std::string var_x, var_y, var_z;
  long long bound = 0;
  double tol = 1e-9;
  double asym_tol = 0.02;
  std::optional<double> alpha;
};

int cmd_validate(const Args& a) {
  RawStructure raw = load_structure_file(a.structure_path);
  ValidationOutcome out = validate(raw);
  if (a.json) {
    std::string diags = "[";
    // assembled by hand to reuse the canonical serializer for the body
    bool first = true;
    for (const auto& d : out.issues) {
      diags += std::string(first ? "" : ", ") + "{\"kind\": \"" +
               diagnostic_name(d.kind) + "\"}";
      first = false;
    }
    diags += "]";
    std::printf("{\"status\": \"%s\", \"diagnostics\": %s}\n",
                out.ok() ? "PASS" : "FAIL", diags.c_str());
  } else if (out.ok()) {
    std::fputs(structure_to_json(out.structure->to_raw()).c_str(), stdout);
  } else {
    for (const auto& d : out.issues)
      std::printf("%s: %s\n", diagnostic_name(d.kind), d.message.c_str());
  }
  return out.ok() ? 0 : 1;
}

int cmd_coeff(const Args& a) {
  AdmissibleSequence d = parse_family(a.seq);
  std::vector<long long> parts = parse_int_list(a.parts);
  FwValue v = fw_multinomial(d, parts);
  if (a.json)
    std::printf("{\"value\": %s}\n", value_to_json(v).c_str());
  else
    std::printf("%s\n", v.str().c_str());
  return 0;
}

int cmd_cocycle_check(const Args& a) {
  Structure s = load_valid_structure(a.structure_path);
  std::string text = slurp(a.cochain_path);
  if (a.bound < 1) fail(Errc::BadArgument, "--bound must be positive");
  if (cochain_file_type(text) == CochainType::Combinatorial) {
    if (a.alpha)
      fail(Errc::BadArgument,
           "--alpha applies to probabilistic cochains only");
    CombCochain c = parse_comb_cochain(s, text);
    return emit_verdict(s, cocycle_check(s, c, a.bound, a.tol), a.json);
  }
  ProbCochain c = parse_prob_cochain(s, text);
  if (a.alpha && *a.alpha != c.module_order())
    fail(Errc::BadArgument, "--alpha contradicts the cochain file's order");
  double tol = a.tol > 0 ? a.tol : 1e-9;
  return emit_verdict(
      s, cocycle_check_additive(s, c, static_cast<int>(a.bound), tol), a.json);
}

int cmd_feith_solve(const Args& a) {
  TablePair tp = parse_table_file(slurp(a.table_path));
  FeithResult r = comb_feith_solve(tp.f1, tp.f2, a.tol);
  if (a.json) {
    std::fputs(feith_result_to_json(r).c_str(), stdout);
  } else if (r.solved()) {
    print_sequence_line(*r.d, r.d->length().value_or(0));
  } else {
    std::printf("%s", feith_status_name(r.status));
    if (r.witness)
      std::printf(" at (%lld, %lld, %lld)", (*r.witness)[0], (*r.witness)[1],
                  (*r.witness)[2]);
    if (!r.message.empty()) std::printf(": %s", r.message.c_str());
    std::printf("\n");
  }
  return r.solved() ? 0 : 1;
}

int cmd_nondeg(const Args& a) {
  Structure s = load_valid_structure(a.structure_path);
  int x = s.index_of(a.var_x);
  int y = s.index_of(a.var_y);
  auto w = nondegenerate_witness(s, x, y);
  if (a.json) {
    std::fputs(nondeg_to_json(s, x, y, w).c_str(), stdout);
  } else if (w) {
    std::printf("FOUND\n  order_x:");
    for (int i : w->order_x)
      std::printf(" %s", s.variable(x).outcomes[size_t(i)].c_str());
    std::printf("\n  order_y:");
    for (int j : w->order_y)
      std::printf(" %s", s.variable(y).outcomes[size_t(j)].c_str());
    std::printf("\n  path:");
    for (auto [pa, pb] : w->path) std::printf(" (%d,%d)", pa, pb);
    std::printf("\n");
  } else {
    std::printf("NOT_FOUND\n");
  }
  return w ? 0 : 1;
}

int cmd_extract(const Args& a) {
  Structure s = load_valid_structure(a.structure_path);
  CombCochain psi = parse_comb_cochain(s, slurp(a.cochain_path));
  if (a.bound < 1) fail(Errc::BadArgument, "--bound must be positive");
  int x = -1, y = -1;
  if (!a.var_x.empty() || !a.var_y.empty()) {
    if (a.var_x.empty() || a.var_y.empty())
      fail(Errc::BadArgument, "--x and --y go together");
    x = s.index_of(a.var_x);
    y = s.index_of(a.var_y);
  } else {
    for (const auto& pr : s.products()) {
      if (nondegenerate_witness(s, pr[0], pr[1])) {
        x = pr[0];
        y = pr[1];
        break;
      }
    }
    if (x < 0)
      fail(Errc::NoNondegenerateProduct,
           "no declared product admits a witness");
  }
  AdmissibleSequence d = extract_sequence(s, psi, x, y, a.bound, a.tol);
  if (a.json)
    std::fputs(sequence_to_json(d, a.bound).c_str(), stdout);
  else
    print_sequence_line(d, a.bound);
  return 0;
}

int cmd_classify(const Args& a) {
  Structure s = load_valid_structure(a.structure_path);
  CombCochain psi = parse_comb_cochain(s, slurp(a.cochain_path));
  if (a.bound < 1) fail(Errc::BadArgument, "--bound must be positive");
  ClassifyResult r = classify_cocycle(s, psi, a.bound, a.tol);
  if (a.json) {
    std::fputs(classify_to_json(s, r, a.bound).c_str(), stdout);
  } else {
    for (const auto& c : r.components) {
      std::printf("component {");
      for (size_t i = 0; i < c.members.size(); ++i)
        std::printf("%s%s", i ? "," : "",
                    s.variable(c.members[i]).id.c_str());
      std::printf("} via %s*%s: ", s.variable(c.x).id.c_str(),
                  s.variable(c.y).id.c_str());
      print_sequence_line(c.d, a.bound);
    }
    std::printf("coboundary: %s\n", r.coboundary ? "yes" : "no");
  }
  return 0;
}

int cmd_asymptote(const Args& a) {
  AdmissibleSequence d = parse_family(a.seq);
  std::vector<Rational> p = parse_rational_list(a.weights);
  double order = family_order(d);
  if (a.alpha && *a.alpha != order)
    fail(Errc::BadArgument,
         "--alpha " + std::to_string(*a.alpha) +
             " contradicts the family's growth order " +
             std::to_string(order));
  LimitVerdict v = entropy_limit_check(d, p, a.asym_tol);
  if (a.json) {
    std::fputs(limit_verdict_to_json(d.tag(), p, v).c_str(), stdout);
  } else {
    std::printf("limit=%.6f target=%.6f certificate=%.6f %s\n",
                v.estimate.limit, v.target, v.estimate.certificate,
                v.pass ? "PASS" : "FAIL");
    if (!v.message.empty()) std::printf("  %s\n", v.message.c_str());
  }
  return v.pass ? 0 : 1;
}

int cmd_entropy(const Args& a) {
  if (!a.alpha) fail(Errc::BadArgument, "--alpha is required");
  make_order(*a.alpha);
  std::vector<Rational> p = parse_rational_list(a.weights);
  Rational sum = 0;
  for (const auto& w : p) {
    if (w < 0) fail(Errc::DomainViolation, "negative weight");
    sum += w;
  }
  if (sum != 1) fail(Errc::DomainViolation, "weights must sum to 1");
  double v = entropy_of_weights(*a.alpha, p);
  if (a.json)
    std::printf("{\"alpha\": %.17g, \"value\": %.17g}\n", *a.alpha, v);
  else
    std::printf("%.12g\n", v);
  return 0;
}

int cmd_chain_residual(const Args& a) {
  if (!a.alpha) fail(Errc::BadArgument, "--alpha is required");
  Structure s = load_valid_structure(a.structure_path);
  int x = s.index_of(a.var_x);
  int y = s.index_of(a.var_y);
  int z = s.index_of(a.var_z);
  ProbabilityLaw p = make_law(s, x, parse_rational_list(a.weights));
  ProbCochain phi =
      ProbCochain::uniform1(*a.alpha, ProbFunctional::shannon_like(*a.alpha));
  double r = chain_rule_residual(s, phi, y, z, p);
  if (a.json)
    std::printf("{\"alpha\": %.17g, \"residual\": %.17g}\n", *a.alpha, r);
  else
    std::printf("%.12g\n", r);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact information-cohomology toolkit"};
  app.require_subcommand(1);

  Args a;
  double alpha_flag = 0.0;
  app.add_flag("--json", a.json, "machine-readable output");

  auto add_alpha = [&](CLI::App* cmd) {
    cmd->add_option("--alpha", alpha_flag, "module / entropy order");
  };

  CLI::App* validate = app.add_subcommand("validate", "check a structure file");
  validate->add_option("structure", a.structure_path, "structure JSON file")
      ->required();

  CLI::App* coeff = app.add_subcommand("coeff", "one multinomial coefficient");
  coeff->add_option("--seq", a.seq, "family tag")->required();
  coeff->add_option("--parts", a.parts, "comma-separated counts")->required();

  CLI::App* cocheck =
      app.add_subcommand("cocycle-check", "scan the cocycle identity");
  cocheck->add_option("--structure", a.structure_path)->required();
  cocheck->add_option("--cochain", a.cochain_path)->required();
  cocheck->add_option("--bound", a.bound, "magnitude / denominator bound")
      ->required();
  cocheck->add_option("--tol", a.tol, "comparison tolerance");
  add_alpha(cocheck);

  CLI::App* feith =
      app.add_subcommand("feith-solve", "solve the two-table system");
  feith->add_option("--table", a.table_path)->required();
  feith->add_option("--tol", a.tol, "comparison tolerance");

  CLI::App* nondeg =
      app.add_subcommand("nondeg", "search a nondegeneracy certificate");
  nondeg->add_option("--structure", a.structure_path)->required();
  nondeg->add_option("--x", a.var_x)->required();
  nondeg->add_option("--y", a.var_y)->required();

  CLI::App* extract =
      app.add_subcommand("extract", "read the sequence off a cocycle");
  extract->add_option("--structure", a.structure_path)->required();
  extract->add_option("--cochain", a.cochain_path)->required();
  extract->add_option("--bound", a.bound)->required();
  extract->add_option("--x", a.var_x);
  extract->add_option("--y", a.var_y);
  extract->add_option("--tol", a.tol);

  CLI::App* classify =
      app.add_subcommand("classify", "per-component sequences + coboundary");
  classify->add_option("--structure", a.structure_path)->required();
  classify->add_option("--cochain", a.cochain_path)->required();
  classify->add_option("--bound", a.bound)->required();
  classify->add_option("--tol", a.tol);

  CLI::App* asym =
      app.add_subcommand("asymptote", "entropy limit certification");
  asym->add_option("--seq", a.seq, "family tag")->required();
  asym->add_option("--p", a.weights, "comma-separated weights")->required();
  asym->add_option("--tol", a.asym_tol, "certification tolerance");
  add_alpha(asym);

  CLI::App* entropy = app.add_subcommand("entropy", "structural entropy");
  add_alpha(entropy);
  entropy->add_option("--p", a.weights)->required();

  CLI::App* chain =
      app.add_subcommand("chain-residual", "order-alpha chain rule residual");
  add_alpha(chain);
  chain->add_option("--structure", a.structure_path)->required();
  chain->add_option("--p", a.weights)->required();
  chain->add_option("--x", a.var_x, "variable carrying p")->required();
  chain->add_option("--y", a.var_y)->required();
  chain->add_option("--z", a.var_z)->required();

  for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (!app.get_subcommands().empty()) {
    CLI::App* got = app.get_subcommands().front();
    if (auto* opt = got->get_option_no_throw("--alpha"); opt && opt->count())
      a.alpha = alpha_flag;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(a);
    if (app.got_subcommand(coeff)) return cmd_coeff(a);
    if (app.got_subcommand(cocheck)) return cmd_cocycle_check(a);
    if (app.got_subcommand(feith)) return cmd_feith_solve(a);
    if (app.got_subcommand(nondeg)) return cmd_nondeg(a);
    if (app.got_subcommand(extract)) return cmd_extract(a);
    if (app.got_subcommand(classify)) return cmd_classify(a);
    if (app.got_subcommand(asym)) return cmd_asymptote(a);
    if (app.got_subcommand(entropy)) return cmd_entropy(a);
    if (app.got_subcommand(chain)) return cmd_chain_residual(a);
  } catch (const Error& e) {
    // Mathematical verdicts exit 1; malformed input exits 2.
    bool verdict = e.code() == Errc::NotACocycle ||
                   e.code() == Errc::DegenerateProduct ||
                   e.code() == Errc::NoNondegenerateProduct;
    std::cerr << errc_name(e.code()) << ": " << e.what() << "\n";
    return verdict ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
