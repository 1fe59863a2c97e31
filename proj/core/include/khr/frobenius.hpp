#pragma once

// The rank-N unknot Frobenius algebra k[X]/p(X) with monomial basis
// 1, X, ..., X^{N-1}, in undeformed, Σ-deformed and symbolic equivariant form.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "khr/arith.hpp"
#include "khr/polynomial.hpp"

namespace khr {

enum class CoefficientMode { Integers, Deformed, Equivariant };

std::string to_string(CoefficientMode m);

struct DeformationEntry {
  Rational value;
  int multiplicity = 1;
};

/// Multiset {λ_1^{N_1}, ..., λ_n^{N_n}} of pairwise distinct rational roots.
class DeformationMultiset {
 public:
  explicit DeformationMultiset(std::vector<DeformationEntry> entries);

  /// "0^2,1,-1/2" style. Throws ParseError / ValidationError.
  static DeformationMultiset parse(std::string_view text);
  /// {0, 1, ..., n-1}, all simple.
  static DeformationMultiset consecutive(int n);

  const std::vector<DeformationEntry>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  int total() const;  ///< N = Σ N_i
  bool all_simple() const;
  int max_multiplicity() const;

  /// ∏ (X - λ_i)^{N_i}
  RatPoly polynomial() const;
  /// e_1(Σ), ..., e_N(Σ), counted with multiplicity.
  std::vector<Rational> elementary_symmetric() const;

  std::string str() const;
  friend bool operator==(const DeformationMultiset&, const DeformationMultiset&);

 private:
  std::vector<DeformationEntry> entries_;
};

/// Structure constants over the scalar ring S (Rational or SymPoly). Elements
/// are coefficient vectors of length N in the monomial basis.
template <class S>
struct FrobeniusAlgebra {
  int rank = 0;
  CoefficientMode mode = CoefficientMode::Integers;
  /// X^N = Σ_{a<N} relation[a] X^a
  std::vector<S> relation;
  /// X^a X^b = Σ_c mult[a][b][c] X^c
  std::vector<std::vector<std::vector<S>>> mult;
  /// Δ(X^a) = Σ_{b,c} comult[a][b][c] X^b ⊗ X^c
  std::vector<std::vector<std::vector<S>>> comult;
  std::vector<S> unit;
  std::vector<S> counit;

  /// q-degree of X^a: 2a + 1 - N.
  int degree(int a) const { return 2 * a + 1 - rank; }
  int dimension() const { return rank; }

  std::vector<S> multiply(const std::vector<S>& x, const std::vector<S>& y) const;
  /// Reduces a coefficient vector of arbitrary length modulo the relation.
  std::vector<S> reduce(std::vector<S> coeffs) const;
};

/// Builds the algebra defined by X^N = Σ relation[a] X^a with the counit
/// ε(X^a) = δ_{a,N-1}; the coproduct is dual to the counit pairing.
template <class S>
FrobeniusAlgebra<S> algebra_from_relation(std::vector<S> relation, CoefficientMode mode);

/// k[X]/X^N
FrobeniusAlgebra<Rational> unknot_algebra(int rank);
/// k[X]/∏(X-λ_i)^{N_i}; throws ValidationError if Σ.total() != rank.
FrobeniusAlgebra<Rational> unknot_algebra(int rank, const DeformationMultiset& sigma);
/// Z[e_1..e_N][X]/(X^N - Σ (-1)^{i-1} e_i X^{N-i})
FrobeniusAlgebra<SymPoly> equivariant_algebra(int rank);

/// Entry-wise evaluation e_i := values[i-1].
FrobeniusAlgebra<Rational> specialize(const FrobeniusAlgebra<SymPoly>& a, std::span<const Rational> values);
/// Values e_i(Σ) realizing the Σ-deformed algebra from the equivariant one.
std::vector<Rational> equivariant_values(const DeformationMultiset& sigma);

/// Orthogonal idempotents e(λ_i) (degree < N), in entry order.
std::vector<RatPoly> crt_idempotents(const DeformationMultiset& sigma);

/// d_i = ∏_{j != i} (λ_i - λ_j)^{N_j}
Rational twisting_scalar(const DeformationMultiset& sigma, int index);

/// Counit of the class of p in k[X]/∏(X-λ_i)^{N_i}: the X^{N-1} coefficient
/// of p reduced modulo the relation.
Rational sphere_evaluation(const DeformationMultiset& sigma, const RatPoly& decoration);

/// Exhaustive structure-constant check of (co)associativity, (co)unit laws,
/// commutativity and the Frobenius relation. Returns human-readable failures.
template <class S>
std::vector<std::string> frobenius_axiom_failures(const FrobeniusAlgebra<S>& a);

}  // namespace khr
