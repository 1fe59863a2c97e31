#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace khr {

using Integer = mpz_class;
using Rational = mpq_class;

/// Malformed textual input (PD code, Σ specification, JSON document).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Request outside the supported computational range (e.g. N >= 3 cubes).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structurally valid input that violates an operation's precondition.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "p", "-p", "p/q" into a canonical rational. Throws ParseError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

Rational pow(const Rational& base, unsigned exponent);

}  // namespace khr
