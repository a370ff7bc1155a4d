#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace topoq {

/// Base class of every error the library throws. `kind()` is the stable
/// machine-readable name used in CLI error documents.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)), detail_(detail) {}

  const std::string& kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string kind_;
  std::string detail_;
};

/// Errors caused by bad input (shapes, malformed groups, violated promises).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Errors signalling a numerical inconsistency inside the library.
class InternalError : public Error {
 public:
  using Error::Error;
};

#define TOPOQ_DEFINE_ERROR(Name, Base)                                   \
  class Name : public Base {                                             \
   public:                                                               \
    explicit Name(const std::string& detail) : Base(#Name, detail) {}    \
  };

TOPOQ_DEFINE_ERROR(DimensionMismatch, InputError)
TOPOQ_DEFINE_ERROR(NotSquare, InputError)
TOPOQ_DEFINE_ERROR(TooLarge, InputError)
TOPOQ_DEFINE_ERROR(NotAGroup, InputError)
TOPOQ_DEFINE_ERROR(NotNormal, InputError)
TOPOQ_DEFINE_ERROR(IncompleteIrreps, InputError)
TOPOQ_DEFINE_ERROR(AllProjectorsZero, InputError)
TOPOQ_DEFINE_ERROR(NonProjector, InputError)
TOPOQ_DEFINE_ERROR(ZeroState, InputError)
TOPOQ_DEFINE_ERROR(PromiseViolated, InputError)
TOPOQ_DEFINE_ERROR(UnknownForm, InputError)
TOPOQ_DEFINE_ERROR(UnboundGenerator, InputError)
TOPOQ_DEFINE_ERROR(ValidationError, InputError)
TOPOQ_DEFINE_ERROR(Inconsistent, InternalError)
TOPOQ_DEFINE_ERROR(DecompositionFailed, InternalError)
TOPOQ_DEFINE_ERROR(NumericalError, InternalError)

#undef TOPOQ_DEFINE_ERROR

/// Parse failure at a 1-based line and column.
class SyntaxError : public InputError {
 public:
  SyntaxError(std::size_t line, std::size_t col, const std::string& what)
      : InputError("SyntaxError", "line " + std::to_string(line) + ", col " +
                                      std::to_string(col) + ": " + what),
        line_(line),
        col_(col) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t line_;
  std::size_t col_;
};

}  // namespace topoq
