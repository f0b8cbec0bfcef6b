#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace rsv {

/// Exact rational scalar. GMP keeps every value canonical (lowest terms,
/// positive denominator) after each arithmetic operation.
using Rat = mpq_class;
using BigInt = mpz_class;

/// Raised for precondition violations on mathematical inputs
/// (degenerate points, singular matrices, bad truncation requests).
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when two operands do not share the same structure
/// (variable sets, truncation degree).
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Rat make_rat(long num, long den = 1);

/// Integer power; negative exponents invert (base must then be nonzero).
Rat pow(const Rat& base, int exponent);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rat& r);

/// Inverse of to_string. Throws std::invalid_argument on malformed text.
Rat parse_rat(std::string_view text);

}  // namespace rsv
