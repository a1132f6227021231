#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>
#include <sys/wait.h>

#include "doctest.h"
#include "infocoh/admissible.hpp"
#include "infocoh/json_io.hpp"
#include "test_util.hpp"

#ifndef INFOCOH_CLI
#error "INFOCOH_CLI must point at the command-line binary"
#endif

using testutil::fixture_path;

namespace {

namespace fs = std::filesystem;

fs::path scratch() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "infocoh_cli_suite";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

struct Run {
  int exit = -1;
  std::string out;
  std::string err;
};

Run run(const std::string& args) {
  static int n = 0;
  fs::path base = scratch() / ("case_" + std::to_string(n++));
  std::string cmd = std::string(INFOCOH_CLI) + " " + args + " > " +
                    base.string() + ".out 2> " + base.string() + ".err";
  int rc = std::system(cmd.c_str());
  Run r;
  r.exit = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = testutil::slurp(base.string() + ".out");
  r.err = testutil::slurp(base.string() + ".err");
  return r;
}

std::string write_file(const std::string& name, const std::string& text) {
  fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

const char* kNaturalCochain = R"({
  "type": "combinatorial", "degree": 1,
  "variables": {
    "X1": {"form": "fw", "seq": "natural"},
    "X2": {"form": "fw", "seq": "natural"},
    "X1X2": {"form": "fw", "seq": "natural"}
  }
})";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("coeff prints exact values and log forms") {
  Run r = run("coeff --seq natural --parts 2,3");
  CHECK(r.exit == 0);
  CHECK(r.out == "10\n");
  CHECK(run("coeff --seq gaussian:q=2 --parts 1,1").out == "3\n");
  CHECK(run("coeff --seq fibonacci --parts 3,3").out == "60\n");
  Run log = run("coeff --seq alpha:K=1,alpha=0.5 --parts 2,2");
  CHECK(log.exit == 0);
  CHECK(log.out.find("exp(-0.6297") != std::string::npos);

  CHECK(run("coeff --seq bogus --parts 1,1").exit == 2);
  CHECK(run("coeff --seq natural --parts 0,0").exit == 2);
}

TEST_CASE("validate emits the canonical form and reports diagnostics") {
  Run ok = run(std::string("validate ") + fixture_path("twofactor.json"));
  CHECK(ok.exit == 0);
  CHECK(ok.out.front() == '{');
  // canonical output revalidates to the same bytes
  std::string canon = write_file("canon.json", ok.out);
  CHECK(run("validate " + canon).out == ok.out);

  Run js = run(std::string("validate --json ") + fixture_path("twofactor.json"));
  CHECK(js.out.find("\"status\": \"PASS\"") != std::string::npos);

  std::string bad = write_file("bad_terminal.json", R"({
    "variables": [
      {"id": "u", "outcomes": ["a", "b"]},
      {"id": "X", "outcomes": ["x0", "x1"]}
    ],
    "arrows": [{"source": "X", "target": "u", "map": {"x0": "a", "x1": "b"}}],
    "terminal": "u"
  })");
  Run invalid = run("validate " + bad);
  CHECK(invalid.exit == 1);
  CHECK(invalid.out.find("MissingTerminal") != std::string::npos);

  CHECK(run("validate " + write_file("garbage.json", "W@t")).exit == 2);
  CHECK(run("validate /nonexistent/input.json").exit == 2);
}

TEST_CASE("cocycle-check: verdicts, witnesses, exit codes") {
  std::string coch = write_file("nat1.json", kNaturalCochain);
  std::string st = fixture_path("twofactor.json");

  Run pass = run("cocycle-check --structure " + st + " --cochain " + coch + " --bound 4");
  CHECK(pass.exit == 0);
  CHECK(pass.out == "PASS (394 cases)\n");

  std::string bad = write_file("bad1.json", R"({
    "type": "combinatorial", "degree": 1,
    "variables": {
      "X1": {"form": "fw", "seq": "natural"},
      "X2": {"form": "fw", "seq": "natural"},
      "X1X2": {"form": "table", "bound": 4, "entries": [{"parts": [1, 1, 0], "value": 5}]}
    }
  })");
  Run fail = run("cocycle-check --structure " + st + " --cochain " + bad + " --bound 4 --json");
  CHECK(fail.exit == 1);
  auto doc = nlohmann::json::parse(fail.out);
  CHECK(doc["status"] == "FAIL");
  CHECK(doc["cases"] == 394);
  CHECK(doc["witness"]["generators"].size() == 2);

  // probabilistic file: order comes from the file, --alpha may only agree
  std::string prob = write_file("prob1.json", R"({
    "type": "probabilistic", "degree": 1, "alpha": 1.0,
    "variables": {
      "X1": {"form": "entropy", "alpha": 1.0},
      "X2": {"form": "entropy", "alpha": 1.0},
      "X1X2": {"form": "entropy", "alpha": 1.0}
    }
  })");
  CHECK(run("cocycle-check --structure " + st + " --cochain " + prob + " --bound 5").exit == 0);
  CHECK(run("cocycle-check --structure " + st + " --cochain " + prob + " --bound 5 --alpha 1").exit == 0);
  CHECK(run("cocycle-check --structure " + st + " --cochain " + prob + " --bound 5 --alpha 2").exit == 2);
  CHECK(run("cocycle-check --structure " + st + " --cochain " + coch + " --bound 4 --alpha 1").exit == 2);
}

TEST_CASE("feith-solve recovers and rejects") {
  using namespace infocoh;
  BinomialTable nat = fw_binomial_table(AdmissibleSequence::natural(), 6);
  std::string good = write_file("t_nat.json", table_to_json(nat, nat));
  Run r = run("feith-solve --table " + good);
  CHECK(r.exit == 0);
  CHECK(r.out == "D = 1 2 3 4 5 6\n");

  BinomialTable g2 = fw_binomial_table(AdmissibleSequence::gaussian(Rational(2)), 6);
  std::string mixed = write_file("t_mixed.json", table_to_json(nat, g2));
  Run bad = run("feith-solve --table " + mixed + " --json");
  CHECK(bad.exit == 1);
  auto doc = nlohmann::json::parse(bad.out);
  CHECK(doc["status"] == "FunctionalEquationViolation");
  CHECK(doc["witness"] == nlohmann::json::array({0, 1, 1}));
}

TEST_CASE("nondeg certifies or reports exhaustion") {
  Run found = run("nondeg --structure " + fixture_path("twofactor.json") + " --x X1 --y X2");
  CHECK(found.exit == 0);
  CHECK(found.out.find("FOUND") == 0);
  CHECK(found.out.find("path: (1,1) (2,1) (2,2)") != std::string::npos);

  Run js = run("nondeg --structure " + fixture_path("twofactor.json") + " --x X1 --y X2 --json");
  auto doc = nlohmann::json::parse(js.out);
  CHECK(doc["status"] == "FOUND");
  CHECK(doc["witness"]["order_x"] == nlohmann::json::array({"x1", "x02"}));

  Run none = run("nondeg --structure " + fixture_path("degenerate.json") + " --x X --y Y");
  CHECK(none.exit == 1);
  CHECK(none.out.find("NOT_FOUND") == 0);

  CHECK(run("nondeg --structure " + fixture_path("twofactor.json") + " --x X1 --y X1").exit == 2);
}

TEST_CASE("extract and classify") {
  std::string coch = write_file("nat2.json", kNaturalCochain);
  Run ext = run("extract --structure " + fixture_path("twofactor.json") + " --cochain " + coch +
                " --bound 6 --x X1 --y X2");
  CHECK(ext.exit == 0);
  CHECK(ext.out == "D = 1 2 3 4 5 6\n");

  // without --x/--y the first certifiable product is used
  Run auto_ext = run("extract --structure " + fixture_path("twofactor.json") + " --cochain " + coch +
                     " --bound 6");
  CHECK(auto_ext.exit == 0);
  CHECK(auto_ext.out == ext.out);

  std::string mixed = write_file("mixed1.json", R"({
    "type": "combinatorial", "degree": 1,
    "variables": {
      "X": {"form": "fw", "seq": "natural"},
      "Y": {"form": "fw", "seq": "natural"},
      "XY": {"form": "fw", "seq": "natural"},
      "Z": {"form": "fw", "seq": "gaussian:q=2"},
      "W": {"form": "fw", "seq": "gaussian:q=2"},
      "ZW": {"form": "fw", "seq": "gaussian:q=2"}
    }
  })");
  Run cls = run("classify --structure " + fixture_path("twocomp.json") + " --cochain " + mixed +
                " --bound 5 --json");
  CHECK(cls.exit == 0);
  auto doc = nlohmann::json::parse(cls.out);
  CHECK(doc["coboundary"] == false);
  REQUIRE(doc["components"].size() == 2);
  CHECK(doc["components"][1]["sequence"]["d"] == nlohmann::json::array({"1", "3", "7", "15", "31"}));

  // a component with no certifiable product is a verdict failure, not a crash
  std::string nat_deg = write_file("nat_deg.json", R"({
    "type": "combinatorial", "degree": 1,
    "variables": {
      "X": {"form": "fw", "seq": "natural"},
      "Y": {"form": "fw", "seq": "natural"},
      "XY": {"form": "fw", "seq": "natural"}
    }
  })");
  CHECK(run("classify --structure " + fixture_path("degenerate.json") + " --cochain " + nat_deg +
            " --bound 5").exit == 1);
}

TEST_CASE("asymptote and entropy") {
  Run nat = run("asymptote --seq natural --p 1/2,1/2");
  CHECK(nat.exit == 0);
  CHECK(nat.out.find("PASS") != std::string::npos);

  Run alpha = run("asymptote --seq alpha:K=1,alpha=0.5 --p 1/2,1/2");
  CHECK(alpha.exit == 1);
  CHECK(alpha.out.find("FAIL") != std::string::npos);

  CHECK(run("asymptote --seq natural --p 1/2,1/2 --alpha 2").exit == 2);
  CHECK(run("asymptote --seq natural --p 1/2,1/3").exit == 2);  // weights must sum to 1

  Run ent = run("entropy --alpha 1 --p 1/2,1/2");
  CHECK(ent.exit == 0);
  CHECK(ent.out.find("0.69314718") == 0);
  CHECK(run("entropy --alpha 2 --p 1/2,1/4,1/4").out.find("0.625") == 0);
  CHECK(run("entropy --alpha 0 --p 1/2,1/2").exit == 2);
}

TEST_CASE("chain-residual is zero for the matching entropy") {
  Run r = run("chain-residual --alpha 2 --structure " + fixture_path("twofactor.json") +
              " --p 1/2,1/4,1/4 --x X1X2 --y X1 --z X2");
  CHECK(r.exit == 0);
  CHECK(r.out == "0\n");
}

TEST_CASE("argument errors never masquerade as verdicts") {
  CHECK(run("").exit == 2);                 // a subcommand is required
  CHECK(run("frobnicate").exit == 2);
  CHECK(run("coeff --seq natural --parts 2,3 --bogus").exit == 2);
  CHECK(run("cocycle-check --structure /missing.json --cochain /missing.json --bound 3").exit == 2);
}

}  // TEST_SUITE
