#pragma once

#include <stdexcept>
#include <string>

namespace infocoh {

/// Error condition codes shared by the library and the CLI.  Codes describe
/// the contract that was broken, not the call site.
enum class Errc {
  ParseError,                   // malformed input file / unknown key / bad literal
  MissingTerminal,              // terminal absent, non-singleton, or unreachable
  NonSurjectiveFiberMap,        // arrow map misses a target outcome
  ProductNotInjective,          // joint outcome map collides
  PosetViolation,               // antisymmetry or uniqueness broken
  MissingProduct,               // a cospan has no declared meet
  ConservativityViolation,      // non-identity arrow with bijective fiber map
  UnknownVariable,
  UnknownArrow,
  UnknownOutcome,
  VariableMismatch,             // value attached to the wrong variable
  ZeroConditioningMass,
  NotCoarser,                   // action through a variable that is not coarser
  AllZeroParts,
  OutOfRange,
  InvalidGrouping,
  InconsistentTable,
  TableBoundExceeded,
  BoundaryViolation,
  SymmetryViolation,
  FunctionalEquationViolation,
  DomainViolation,
  NotACocycle,
  DegenerateProduct,
  NoNondegenerateProduct,
  UnsupportedFamily,
  BadArgument,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace infocoh
