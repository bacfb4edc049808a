#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace parqsym {

// Exact rational scalars. Always kept in canonical reduced form with a
// positive denominator (mpq_class invariant after canonicalize()).
using Rational = mpq_class;

// Raised when a value violates a structural invariant (bad q, metadata
// mismatch, precondition failure). The CLI maps this to exit code 3.
struct InvariantError : std::runtime_error {
    explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

// Parses "p" or "p/q" with optional sign. Throws InvariantError on a zero
// denominator or garbage input.
Rational rational_from_string(const std::string& text);

// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& x);

}  // namespace parqsym
