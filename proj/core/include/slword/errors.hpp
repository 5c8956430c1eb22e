#ifndef SLWORD_ERRORS_HPP
#define SLWORD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace slword {

// Every failure mode that callers are expected to catch derives from Error.
// Anything else escaping the library is a bug.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Parameters outside the supported family: p not an odd prime, p < m for
// m > 2, n < 1, working exponent below n, mismatched rings.
struct InvalidGroupSpec : Error {
  using Error::Error;
};

// Matrix inversion attempted on a determinant that is not a unit.
struct Singular : Error {
  using Error::Error;
};

// Logarithm input is not congruent to the identity.
struct NotCongruent : Error {
  using Error::Error;
};

// Exponential input has a zero-valuation entry, so the series cannot
// converge at finite precision.
struct NotNilpotentEnough : Error {
  using Error::Error;
};

// A series evaluation would need terms beyond the working precision.
struct PrecisionExhausted : Error {
  using Error::Error;
};

// The given set does not generate the group at the requested level.
struct NotGenerating : Error {
  using Error::Error;
};

// An exhaustive computation (BFS table, exact diameter) would exceed the
// caller's stated budget.
struct TooLarge : Error {
  using Error::Error;
};

// An internally produced word failed its own re-evaluation check.
struct VerifyFailure : Error {
  using Error::Error;
};

// Malformed problem file, word string, or CSV.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace slword

#endif
