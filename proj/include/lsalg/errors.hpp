#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lsalg {

/// Base class for every lsalg-specific failure.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A monoid closure grew past the caller-supplied element budget.
/// The closure is always finite (at most n^n elements), so raising the
/// cap and retrying is always an option.
struct CapExceeded : Error {
  explicit CapExceeded(std::size_t cap_)
      : Error("closure exceeded the element budget of " + std::to_string(cap_)),
        cap(cap_) {}
  std::size_t cap;
};

/// An operation requiring a minimal algebra was given a non-minimal one.
struct NotMinimal : Error {
  explicit NotMinimal(int unreached_state)
      : Error("algebra is not minimal: state " + std::to_string(unreached_state) +
              " is unreachable from the base point"),
        unreached(unreached_state) {}
  int unreached;
};

/// The requested centraliser strategy cannot run with the given inputs.
struct StrategyUnavailable : Error {
  using Error::Error;
};

/// An operation table failed a compatibility precondition.
struct IncompatibleOp : Error {
  using Error::Error;
};

/// The allowable-map construction assigned two distinct maps to one state,
/// which means the supplied family was not a true reflection.
struct InconsistentAllowable : Error {
  using Error::Error;
};

/// A structural criterion and the direct table check disagreed.  This
/// indicates an internal bug, never a property of the input.
struct CriterionMismatch : Error {
  using Error::Error;
};

/// Input is larger than the configured bound of a brute-force oracle.
struct BoundExceeded : Error {
  using Error::Error;
};

/// A word used a symbol that is not in the algebra's alphabet.
struct UnknownSymbol : Error {
  using Error::Error;
};

/// Text input could not be parsed; carries the 1-based line number.
struct ParseError : Error {
  ParseError(int line_, const std::string& message)
      : Error("line " + std::to_string(line_) + ": " + message), line(line_) {}
  int line;
};

}  // namespace lsalg
