#include "infocoh/errors.hpp"

namespace infocoh {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ParseError: return "ParseError";
    case Errc::MissingTerminal: return "MissingTerminal";
    case Errc::NonSurjectiveFiberMap: return "NonSurjectiveFiberMap";
    case Errc::ProductNotInjective: return "ProductNotInjective";
    case Errc::PosetViolation: return "PosetViolation";
    case Errc::MissingProduct: return "MissingProduct";
    case Errc::ConservativityViolation: return "ConservativityViolation";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::UnknownArrow: return "UnknownArrow";
    case Errc::UnknownOutcome: return "UnknownOutcome";
    case Errc::VariableMismatch: return "VariableMismatch";
    case Errc::ZeroConditioningMass: return "ZeroConditioningMass";
    case Errc::NotCoarser: return "NotCoarser";
    case Errc::AllZeroParts: return "AllZeroParts";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::InvalidGrouping: return "InvalidGrouping";
    case Errc::InconsistentTable: return "InconsistentTable";
    case Errc::TableBoundExceeded: return "TableBoundExceeded";
    case Errc::BoundaryViolation: return "BoundaryViolation";
    case Errc::SymmetryViolation: return "SymmetryViolation";
    case Errc::FunctionalEquationViolation: return "FunctionalEquationViolation";
    case Errc::DomainViolation: return "DomainViolation";
    case Errc::NotACocycle: return "NotACocycle";
    case Errc::DegenerateProduct: return "DegenerateProduct";
    case Errc::NoNondegenerateProduct: return "NoNondegenerateProduct";
    case Errc::UnsupportedFamily: return "UnsupportedFamily";
    case Errc::BadArgument: return "BadArgument";
  }
  return "?";
}

}  // namespace infocoh
