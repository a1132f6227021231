#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace infocoh {

// Declarative form of an observable-variable lattice, as read from disk.
// Outcome order is semantic: indices into VariableDecl::outcomes are the
// canonical outcome identifiers everywhere else in the library.
struct VariableDecl {
  std::string id;
  std::vector<std::string> outcomes;
};

// A coarsening arrow: every outcome of `source` maps to one of `target`.
struct ArrowDecl {
  std::string source;
  std::string target;
  std::map<std::string, std::string> map;
};

// Declares `result` as the categorical product (joint variable) of
// `left` and `right`.
struct ProductDecl {
  std::string left;
  std::string right;
  std::string result;
};

struct RawStructure {
  std::vector<VariableDecl> variables;
  std::vector<ArrowDecl> arrows;
  std::string terminal;
  std::vector<ProductDecl> products;
  std::string comment;  // free-form, ignored by validation
};

enum class DiagnosticKind {
  MissingTerminal,
  NonSurjectiveFiberMap,
  ProductNotInjective,
  PosetViolation,
  MissingProduct,
  ConservativityViolation,
};

const char* diagnostic_name(DiagnosticKind k);

struct Diagnostic {
  DiagnosticKind kind;
  std::string message;
};

struct ValidationOutcome;

// A validated information structure: a finite poset of variables with
// fiber maps, a one-outcome terminal, and declared binary products.
// Arrows are stored transitively closed; all queries are by dense index.
class Structure {
 public:
  int var_count() const { return static_cast<int>(vars_.size()); }
  const VariableDecl& variable(int v) const {
    return vars_[static_cast<std::size_t>(v)];
  }
  int outcome_count(int v) const {
    return static_cast<int>(variable(v).outcomes.size());
  }

  std::optional<int> find(std::string_view id) const;
  // Throws UnknownVariable if absent.
  int index_of(std::string_view id) const;

  int terminal() const { return terminal_; }

  // True iff x is finer than or equal to y (an arrow x -> y exists).
  bool refines(int x, int y) const;

  // Outcome map of the arrow x -> y; identity when x == y.
  // Throws UnknownArrow if x does not refine y.
  const std::vector<int>& fiber_map(int x, int y) const;

  // Preimage of one y-outcome under the arrow x -> y.
  std::vector<int> fiber(int x, int y, int target_outcome) const;

  // Greatest lower bound of x and y when one exists: the finer of a
  // comparable pair, or the declared product of an incomparable one.
  std::optional<int> meet(int x, int y) const;
  int meet_or_fail(int x, int y) const;

  // Declared products as {left, right, result} with left < right.
  const std::vector<std::array<int, 3>>& products() const { return products_; }

  // All y (including x itself) with x finer than or equal to y.
  std::vector<int> coarsenings(int x) const;

  // Connected components of the non-terminal variables under comparability,
  // each sorted, listed in order of smallest member.
  std::vector<std::vector<int>> components() const;

  // Canonical declarative form: variables/arrows/products sorted by id,
  // arrows transitively closed, comment carried through.
  RawStructure to_raw() const;

  // Checks every structural axiom, collecting all diagnostics rather than
  // stopping at the first.
  static ValidationOutcome validate(const RawStructure& raw);

 private:
  friend struct ValidationBuilder;

  std::vector<VariableDecl> vars_;
  std::map<std::string, int, std::less<>> index_;
  int terminal_ = -1;
  // arrows_[x][y] = outcome map of x -> y (transitively closed, no identity).
  std::vector<std::map<int, std::vector<int>>> arrows_;
  std::vector<std::array<int, 3>> products_;
  std::map<std::pair<int, int>, int> meets_;
  std::string comment_;
  mutable std::map<int, std::vector<int>> identity_cache_;
};

struct ValidationOutcome {
  std::optional<Structure> structure;
  std::vector<Diagnostic> issues;
  bool ok() const { return structure.has_value(); }
};

ValidationOutcome validate(const RawStructure& raw);

}  // namespace infocoh
