#pragma once

#include <string>

#include "infocoh/admissible.hpp"
#include "infocoh/asymptotics.hpp"
#include "infocoh/classify.hpp"
#include "infocoh/cochain.hpp"
#include "infocoh/counting.hpp"
#include "infocoh/feith.hpp"
#include "infocoh/nondegenerate.hpp"
#include "infocoh/structure.hpp"

namespace infocoh {

// Strict parse of the structure file format: unknown keys and wrong types
// are ParseError. `variables` and `terminal` are required; `arrows`,
// `products` and `comment` may be omitted.
RawStructure parse_structure_json(const std::string& text);

// Byte-stable serialization: object keys sorted, two-space indent, trailing
// newline. Serializing to_raw() of a validated structure is the canonical
// form; feeding that back through parse + serialize is the identity.
std::string structure_to_json(const RawStructure& raw);

// Reads and parses a structure file; ParseError mentions the path on
// unreadable input.
RawStructure load_structure_file(const std::string& path);

// ---- value atoms ----------------------------------------------------------
// Exact values travel as "p/q" strings (or JSON integers on input);
// log-domain values as {"log": x}.

FwValue parse_value_json(const std::string& text);
std::string value_to_json(const FwValue& v);

// ---- counting functions and laws ------------------------------------------
// {"variable": id, "values": [...]}; counts as integers, weights as "p/q".

CountingFunction parse_counts_json(const Structure& s, const std::string& text);
std::string counts_to_json(const Structure& s, const CountingFunction& nu);

ProbabilityLaw parse_law_json(const Structure& s, const std::string& text);
std::string law_to_json(const Structure& s, const ProbabilityLaw& p);

// ---- two-argument coefficient tables --------------------------------------
// {"limit": N, "f1": [{"parts": [n1, n2], "value": v}, ...], "f2": [...]};
// "f2" defaults to "f1". Missing entries are ParseError — the solver needs
// the full triangle.

struct TablePair {
  BinomialTable f1;
  BinomialTable f2;
};

TablePair parse_table_file(const std::string& text);
std::string table_to_json(const BinomialTable& f1, const BinomialTable& f2);

// ---- cochain files ---------------------------------------------------------
// {"type": "combinatorial", "degree": 0, "psi": F} with F one of
//   {"form": "one"} | {"form": "exp", "k": x} |
//   {"form": "table", "values": [v_0, v_1, ...]}        (v_n at magnitude n)
// {"type": "combinatorial", "degree": 1, "variables": {id: G, ...}} with G
//   {"form": "one"} | {"form": "exp", "k": x} |
//   {"form": "fw", "seq": tag} | {"form": "fwpow", "seq": tag, "r": x} |
//   {"form": "table", "bound": N, "entries": [{"parts": [...], "value": v}]}
//   (unlisted table entries default to 1; unlisted variables act as the
//   constant 1)
// {"type": "probabilistic", "degree": 0, "alpha": a, "value": x}
// {"type": "probabilistic", "degree": 1, "alpha": a, "variables": {id: F}}
//   with F {"form": "constant", "value": x} | {"form": "entropy", "alpha": a}
//   | {"form": "random", "seed": n}

enum class CochainType { Combinatorial, Probabilistic };

CochainType cochain_file_type(const std::string& text);

CombCochain parse_comb_cochain(const Structure& s, const std::string& text);
ProbCochain parse_prob_cochain(const Structure& s, const std::string& text);

// ---- report serialization --------------------------------------------------
// All emitters produce deterministic two-space-indented JSON with a
// trailing newline.

std::string verdict_to_json(const Structure& s, const CheckVerdict& v);
std::string feith_result_to_json(const FeithResult& r);
std::string nondeg_to_json(const Structure& s, int x, int y,
                           const std::optional<NondegWitness>& w);
std::string sequence_to_json(const AdmissibleSequence& d, long long upto);
std::string classify_to_json(const Structure& s, const ClassifyResult& r,
                             long long upto);
std::string limit_verdict_to_json(const std::string& family,
                                  const std::vector<Rational>& p,
                                  const LimitVerdict& v);

}  // namespace infocoh
