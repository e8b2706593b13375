#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace acstk {

/// Arbitrary-precision rational, always kept in canonical form
/// (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Base of every error the toolkit raises for bad input.
class Error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a computed certificate contradicts itself. Never expected.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// "num/den", denominator omitted when it is 1.
std::string to_string(const Rational& q);

/// Accepts "a", "-a", "a/b". Throws Error on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

/// Comma separated list of rationals, e.g. "1,-1/2,3".
std::vector<Rational> parse_rational_list(std::string_view text);

bool is_integer(const Rational& q);

Integer factorial(unsigned long n);

/// Rational power with a non-negative exponent.
Rational pow(const Rational& base, unsigned long exp);

} // namespace acstk
