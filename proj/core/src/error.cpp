#include "ealab/error.hpp"

namespace ealab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidTable: return "InvalidTable";
    case ErrorKind::kNotAnEffectAlgebra: return "NotAnEffectAlgebra";
    case ErrorKind::kNotALattice: return "NotALattice";
    case ErrorKind::kNotAPoset: return "NotAPoset";
    case ErrorKind::kZeroHasNoOrder: return "ZeroHasNoOrder";
    case ErrorKind::kSubsetNotClosed: return "SubsetNotClosed";
    case ErrorKind::kNotCentral: return "NotCentral";
    case ErrorKind::kDegenerateInterval: return "DegenerateInterval";
    case ErrorKind::kEmptyFactorList: return "EmptyFactorList";
    case ErrorKind::kFactorTooSmall: return "FactorTooSmall";
    case ErrorKind::kNotOrthomodular: return "NotOrthomodular";
    case ErrorKind::kNotOrthocomplemented: return "NotOrthocomplemented";
    case ErrorKind::kBoundExceeded: return "BoundExceeded";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kContradictorySum: return "ContradictorySum";
    case ErrorKind::kUnknownName: return "UnknownName";
    case ErrorKind::kInternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message,
             std::vector<std::uint32_t> witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness)) {}

ParseError::ParseError(ErrorKind kind, std::size_t line,
                       const std::string& message)
    : Error(kind, line == 0 ? message
                            : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

}  // namespace ealab
