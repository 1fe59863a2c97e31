#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "khr/arith.hpp"

namespace khr {

/// Dense univariate polynomial over the rationals, coefficients low degree first.
/// Always normalized: no trailing zero coefficients; the zero polynomial is empty.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  RatPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)

  static RatPoly monomial(const Rational& c, int degree);
  /// X - root
  static RatPoly linear(const Rational& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }
  Rational eval(const Rational& x) const;

  RatPoly operator-() const;
  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; throws std::domain_error on zero divisor.
  static std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
  RatPoly mod(const RatPoly& m) const { return divmod(*this, m).second; }
  RatPoly pow(unsigned e) const;

  std::string str(char var = 'X') const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Returns (g, s, t) with s*a + t*b = g and g monic.
struct ExtendedGcd {
  RatPoly gcd, s, t;
};
ExtendedGcd extended_gcd(const RatPoly& a, const RatPoly& b);

/// Polynomial with integer coefficients in the equivariant variables e_1..e_k.
/// Sparse: exponent vector -> coefficient, zero coefficients never stored.
class SymPoly {
 public:
  using Exponents = std::vector<int>;

  SymPoly() = default;
  SymPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit SymPoly(Integer constant);

  /// The variable e_index (1-based), living in a ring with `nvars` variables.
  static SymPoly variable(int index, int nvars);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Integer>& terms() const { return terms_; }

  /// Evaluates with e_i := values[i-1]; throws ValidationError if a variable
  /// occurring in the polynomial has no assigned value.
  Rational specialize(std::span<const Rational> values) const;

  SymPoly operator-() const;
  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly& operator*=(const SymPoly& o) { return *this = *this * o; }
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.terms_ == b.terms_; }

  std::string str() const;

 private:
  void add_term(Exponents e, const Integer& c);
  std::map<Exponents, Integer> terms_;
};

inline bool is_zero(const SymPoly& p) { return p.is_zero(); }

}  // namespace khr
