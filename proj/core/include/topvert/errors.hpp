#pragma once

#include <stdexcept>
#include <string>

namespace topvert {

// All library failures derive from Error so callers can catch one type.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ArithmeticError : Error { using Error::Error; };
struct EvaluationError : Error { using Error::Error; };
struct IncompleteDataError : Error { using Error::Error; };
struct UniquenessError : Error { using Error::Error; };
struct UnsupportedActionError : Error { using Error::Error; };
struct PreconditionError : Error { using Error::Error; };
struct TruncationError : Error { using Error::Error; };
struct DivisibilityError : Error { using Error::Error; };
struct FormulaDivergenceError : Error { using Error::Error; };
struct GluingError : Error { using Error::Error; };
struct BranchError : Error { using Error::Error; };
struct NoSolutionError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace topvert
