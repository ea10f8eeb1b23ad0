#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dimscope {

enum class ErrorKind {
  InvalidInput,
  InvalidParameter,
  InvalidGrammar,
  EstimationImpossible,
  EstimationDegenerate,
  UndefinedCorrelation,
  DegenerateDesign,
  Format,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Process exit code for an error category: 2 invalid input, 3 format error,
/// 4 estimation-degenerate.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dimscope
