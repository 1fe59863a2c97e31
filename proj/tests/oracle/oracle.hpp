#pragma once

// Brute-force reference computations used only by the tests. They share no
// code with the engine beyond the GMP number types and the PD data structure.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "khr/arith.hpp"
#include "khr/khcomplex.hpp"
#include "khr/linkdiag.hpp"

namespace oracle {

using khr::Integer;
using khr::Rational;
using DenseQ = std::vector<std::vector<Rational>>;
using DenseZ = std::vector<std::vector<Integer>>;

std::size_t rank(DenseQ m);
/// Basis of the right null space (as columns).
std::vector<std::vector<Rational>> null_space(const DenseQ& m);
/// Invariant factors (including ones) from gcds of k x k minors. Tiny matrices only.
std::vector<Integer> determinantal_invariant_factors(const DenseZ& m);
/// Textbook dense Smith normal form diagonal (nonzero entries, absolute values).
std::vector<Integer> dense_smith_diagonal(DenseZ m);

/// Khovanov homology in Bar-Natan's conventions (0-smoothing joins labels
/// (a,b),(c,d) of X(a,b,c,d); q = #v+ - #v- + r + n+ - 2n-, t = r - n-).
struct KhResult {
  std::map<std::pair<int, int>, std::size_t> free;  ///< (q,t) -> rank
  std::map<std::pair<int, int>, std::vector<Integer>> torsion;
};
KhResult bar_natan_homology(const khr::PlanarDiagram& d, bool integral);

/// t -> dimension of the homology of the Bar-Natan cube with the Frobenius
/// algebra Q[X]/((X - a)(X - b)), in Bar-Natan's t-grading.
std::map<int, std::size_t> bar_natan_deformed_dimensions(const khr::PlanarDiagram& d, const Rational& a, const Rational& b);

/// dim of the image of H(F_p C) -> H(C) in degree t, by dense linear algebra.
std::size_t filtered_dimension(const khr::GradedChainComplex<Rational>& c, int t, int p);

/// Coefficients (ascending) of the idempotent for root index i obtained by
/// solving the Hermite interpolation conditions.
std::vector<Rational> hermite_idempotent(const std::vector<std::pair<Rational, int>>& roots, std::size_t i);

}  // namespace oracle
