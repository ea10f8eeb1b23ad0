#include "dimscope/error.hpp"

namespace dimscope {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::InvalidGrammar: return "invalid-grammar";
    case ErrorKind::EstimationImpossible: return "estimation-impossible";
    case ErrorKind::EstimationDegenerate: return "estimation-degenerate";
    case ErrorKind::UndefinedCorrelation: return "undefined-correlation";
    case ErrorKind::DegenerateDesign: return "degenerate-design";
    case ErrorKind::Format: return "format-error";
    case ErrorKind::Io: return "io-error";
  }
  return "unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Format:
      return 3;
    case ErrorKind::EstimationImpossible:
    case ErrorKind::EstimationDegenerate:
    case ErrorKind::UndefinedCorrelation:
    case ErrorKind::DegenerateDesign:
      return 4;
    default:
      return 2;
  }
}

}  // namespace dimscope
