#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ea {

/// Base class of every recoverable error raised by this library.
/// Findings of the checkers (axiom violations, countermodels, invalid proof
/// lines) are *not* errors; they are returned as report values. Errors signal
/// that an operation could not run at all: malformed input, a violated
/// precondition, a missing resource.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ragged, out-of-range or otherwise unusable tables. A file/format problem,
/// not an axiom failure.
struct MalformedTable : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos, std::string expected_tokens)
      : Error(what), position(pos), expected(std::move(expected_tokens)) {}
  std::size_t position;
  std::string expected;
};

struct NotLattice : Error {
  using Error::Error;
};

struct KindMismatch : Error {
  using Error::Error;
};

struct SizeMismatch : Error {
  using Error::Error;
};

struct EmptyArgument : Error {
  using Error::Error;
};

struct UnboundVariable : Error {
  using Error::Error;
};

struct UnknownSuite : Error {
  using Error::Error;
};

struct MissingSchemaVariable : Error {
  using Error::Error;
};

/// Raised by rule application when a premise formula does not match the
/// rule's premise schema. `index` is the position of the first failing
/// premise (0-based).
struct PremiseMismatch : Error {
  PremiseMismatch(const std::string& what, int premise_index)
      : Error(what), index(premise_index) {}
  int index;
};

/// The table handed to the effect-algebra construction is not an implication
/// algebra: the constructed partial addition violates E1-E4. The message
/// carries the witnessing implication-axiom diagnosis.
struct NotAnImplicationAlgebra : Error {
  using Error::Error;
};

/// The implication-algebra direction of the round trip needs a single-valued
/// table; a set-valued one cannot be converted back.
struct SetValuedNotRoundTrippable : Error {
  using Error::Error;
};

struct CapExceeded : Error {
  using Error::Error;
};

}  // namespace ea
