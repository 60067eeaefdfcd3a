#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace torblocks {

/// Thrown when an input violates a documented precondition.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an internal invariant is breached. Never expected in practice.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<std::int64_t>;
using BigVector = std::vector<Integer>;
using BigMatrix = std::vector<BigVector>;

/// Parses "p/q", "-p/q" or "p". Whitespace is not accepted.
Rational parse_rational(std::string_view text);

/// Lowest-terms rendering; integers print without a denominator.
std::string format_rational(const Rational& q);

/// Floor division and the matching nonnegative remainder for b > 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t floor_mod(std::int64_t a, std::int64_t b);

/// Overflow-checked int64 arithmetic; throws ValidationError on overflow.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

std::int64_t to_int64(const Integer& z);
BigVector to_big(const IntVector& v);
IntVector to_small(const BigVector& v);

}  // namespace torblocks
