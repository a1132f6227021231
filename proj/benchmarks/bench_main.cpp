// Microbenchmarks for the hot paths: coefficient evaluation (exact vs log
// form), the dense cocycle scan, equation solving from tables, and the
// nondegeneracy search.

#include <benchmark/benchmark.h>

#include <vector>

#include "infocoh/admissible.hpp"
#include "infocoh/cochain.hpp"
#include "infocoh/feith.hpp"
#include "infocoh/json_io.hpp"
#include "infocoh/nondegenerate.hpp"

using namespace infocoh;

namespace {

Structure fixture(const char* name) {
  auto out = validate(load_structure_file(std::string(INFOCOH_FIXTURES) + "/" + name));
  return *std::move(out.structure);
}

void BM_fw_multinomial_exact(benchmark::State& state) {
  AdmissibleSequence d = AdmissibleSequence::gaussian(Rational(2));
  std::vector<long long> parts{state.range(0), state.range(0), state.range(0)};
  for (auto _ : state) benchmark::DoNotOptimize(fw_multinomial(d, parts));
}
BENCHMARK(BM_fw_multinomial_exact)->Arg(4)->Arg(16)->Arg(64);

void BM_fw_multinomial_log(benchmark::State& state) {
  AdmissibleSequence d = AdmissibleSequence::alpha_family(1.0, 0.5);
  std::vector<long long> parts{state.range(0), state.range(0), state.range(0)};
  for (auto _ : state) benchmark::DoNotOptimize(fw_multinomial_log(d, parts));
}
BENCHMARK(BM_fw_multinomial_log)->Arg(4)->Arg(16)->Arg(64);

void BM_cocycle_check_dense(benchmark::State& state) {
  Structure s = fixture("twofactor.json");
  CombCochain psi = CombCochain::uniform1(CombFunctional::fw(AdmissibleSequence::natural()));
  for (auto _ : state) {
    CheckVerdict v = cocycle_check(s, psi, state.range(0));
    benchmark::DoNotOptimize(v.pass);
  }
}
BENCHMARK(BM_cocycle_check_dense)->Arg(4)->Arg(6)->Arg(8);

void BM_feith_solve(benchmark::State& state) {
  BinomialTable t = fw_binomial_table(AdmissibleSequence::fibonacci(), state.range(0));
  for (auto _ : state) {
    FeithResult r = comb_feith_solve(t, t);
    benchmark::DoNotOptimize(r.solved());
  }
}
BENCHMARK(BM_feith_solve)->Arg(8)->Arg(16)->Arg(32);

void BM_nondegenerate_search(benchmark::State& state) {
  // full grid: every enumeration pair certifies, so this measures the
  // happy path; the degenerate fixture exercises full backtracking
  Structure s = fixture("prod22.json");
  int x = s.index_of("X");
  int y = s.index_of("Y");
  for (auto _ : state) benchmark::DoNotOptimize(nondegenerate_witness(s, x, y));
}
BENCHMARK(BM_nondegenerate_search);

void BM_nondegenerate_exhaust(benchmark::State& state) {
  Structure s = fixture("degenerate.json");
  int x = s.index_of("X");
  int y = s.index_of("Y");
  for (auto _ : state) benchmark::DoNotOptimize(nondegenerate_witness(s, x, y));
}
BENCHMARK(BM_nondegenerate_exhaust);

}  // namespace

BENCHMARK_MAIN();
