#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordfree {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An element, ordering or homomorphism was used with a group whose shape
// it does not match.
struct ShapeMismatchError : Error {
  using Error::Error;
};

// VecLex rows do not span the ambient rational vector space; the induced
// relation would only be a partial order.
struct DegenerateVecLexError : Error {
  using Error::Error;
};

// Asked for the leading term of the zero ring element.
struct ZeroElementError : Error {
  using Error::Error;
};

// A certificate replay needed an answer the certificate does not contain.
struct MissingAnswerError : Error {
  using Error::Error;
};

// Evaluation reached a state the construction rules out (e.g. two distinct
// normal forms with equal matrix images). Always an implementation bug.
struct InternalError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

}  // namespace ordfree
