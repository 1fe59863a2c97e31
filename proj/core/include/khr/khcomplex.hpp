#pragma once

// Cube-of-resolutions chain complexes in the framing-adapted (fr) grading.
//
// At each crossing the two resolutions are ordered as in the fr crossing
// relation: a positive crossing contributes [unoriented smoothing -> q^{-1}
// oriented smoothing] in t-degrees 0,1; a negative crossing contributes
// [q oriented smoothing -> unoriented smoothing] in t-degrees -1,0. The
// differential raises t by one. Basis monomials X^a carry q-degree 2a+1-N.
//
// For N = 1 the unoriented resolution (a web with a 2-labelled edge) carries
// the zero state space, so only the oriented resolution survives.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "khr/frobenius.hpp"
#include "khr/linkdiag.hpp"
#include "khr/sparse.hpp"

namespace khr {

struct Bidegree {
  int q = 0;
  int t = 0;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

/// (q_std, t_std) -> (q_std - N w, w - t_std)
Bidegree regrade_fr(Bidegree standard, int rank, int writhe);
/// Inverse of regrade_fr (the reflection in t is an involution).
Bidegree fr_to_std(Bidegree fr, int rank, int writhe);

struct FrGrading {
  int rank = 2;
  int writhe = 0;
  Bidegree from_std(Bidegree b) const { return regrade_fr(b, rank, writhe); }
  Bidegree to_std(Bidegree b) const { return fr_to_std(b, rank, writhe); }
};

/// Bidegree shift of fr homology under a framing change Δf: (-N Δf, Δf).
Bidegree framing_shift(int rank, int delta_framing);

enum class Grading { Fr, Std };
std::string to_string(Grading g);
Grading parse_grading(const std::string& s);

struct BasisElement {
  std::uint64_t vertex = 0;    ///< bit i set: crossing i in its second (t-raising) resolution
  std::uint64_t monomial = 0;  ///< mixed-radix exponent vector over the circles at the vertex
  int q = 0;                   ///< fr q-degree
};

template <class S>
struct GradedChainComplex {
  int rank = 2;
  int writhe = 0;
  CoefficientMode mode = CoefficientMode::Integers;
  int t_min = 0;  ///< fr t-degree of basis[0]
  std::vector<std::vector<BasisElement>> basis;
  /// differential[k] : C^{t_min+k} -> C^{t_min+k+1}
  std::vector<SparseMatrix<S>> differential;

  int t_max() const { return t_min + static_cast<int>(basis.size()) - 1; }
  bool has_degree(int t) const { return t >= t_min && t <= t_max(); }
  const std::vector<BasisElement>& basis_at(int t) const;
  /// The matrix C^t -> C^{t+1} (an empty matrix of the right shape at the ends).
  SparseMatrix<S> differential_at(int t) const;
  std::size_t total_dimension() const;
};

/// Builds the cube complex over A. Supports rank 1 and 2 for any diagram and
/// any rank for crossingless diagrams; throws UnsupportedError otherwise.
template <class S>
GradedChainComplex<S> cube(const PlanarDiagram& d, const FrobeniusAlgebra<S>& a);

/// Entry-wise evaluation of a symbolic complex.
GradedChainComplex<Rational> specialize(const GradedChainComplex<SymPoly>& c, std::span<const Rational> values);

/// Exhaustive check d_{t+1} d_t = 0 for all t.
template <class S>
bool differential_squares_to_zero(const GradedChainComplex<S>& c);

/// Σ_t (-1)^t Σ_q dim C^{q,t} q^q as (q, coefficient) pairs sorted by q.
std::vector<std::pair<int, long>> graded_euler_characteristic(const GradedChainComplex<Rational>& c);

}  // namespace khr
