#pragma once

// Grading calculus for surfaces in 4-manifolds with link boundary, the gl(1)
// skein tridegrees, the coloring decomposition of deformed homology and a few
// closed-form models (blackboard cables of the unknot, S^2 x D^2).

#include <map>
#include <optional>
#include <vector>

#include "khr/frobenius.hpp"
#include "khr/khcomplex.hpp"
#include "khr/linkdiag.hpp"

namespace khr {

using LatticeVector = std::vector<long long>;

/// Free part of H_2(W): rank b2 with intersection form Q, plus a chosen
/// element alpha0 of the torsor H_2(W)^L.
struct FourManifoldDatum {
  int b2 = 0;
  std::vector<LatticeVector> form;
  LatticeVector alpha0;

  /// Throws ValidationError unless Q is b2 x b2 symmetric and alpha0 has length b2.
  void validate() const;
  long long pairing(const LatticeVector& x, const LatticeVector& y) const;
};

struct SurfaceComponent {
  int chi = 0;
  LatticeVector homology_class;
  bool closed = false;
};

struct SurfaceDatum {
  std::vector<SurfaceComponent> components;

  /// Throws ValidationError on odd χ of a closed component or ragged classes.
  void validate() const;
  int chi() const;
  LatticeVector total_class() const;
};

/// Component index -> index into the entries of a deformation multiset.
using Coloring = std::vector<int>;

/// All colorings of `components` components by `colors` colors, in
/// lexicographic order (component 0 varies slowest).
std::vector<Coloring> enumerate_colorings(int components, int colors);

struct Tridegree {
  LatticeVector homology_class;
  int q = 0;
  int t = 0;
  friend bool operator==(const Tridegree&, const Tridegree&) = default;
};

/// (class, (1-N) chi - N ss, ss)
Tridegree surface_tridegree(int rank, int chi, int self_intersection, const LatticeVector& cls);
/// Same, with ss = [S].[S] computed from the intersection form.
Tridegree surface_tridegree(int rank, const FourManifoldDatum& w, const SurfaceDatum& s);

/// floor((-N ss - q_min) / (N - 1)); ValidationError for N < 2.
int genus_bound(int rank, int q_min, int self_intersection);

struct DiversityResult {
  bool diverse = true;
  /// On failure: indices (into SurfaceDatum::components) of closed components
  /// whose classes sum to zero; a smallest such subset.
  std::vector<int> witness;
};

DiversityResult is_homologically_diverse(const SurfaceDatum& s);

/// alpha = alpha0 + v and the tridegree (alpha, -alpha.alpha, alpha.alpha).
Tridegree gl1_skein_tridegree(const FourManifoldDatum& w, const LatticeVector& offset);

/// t-degree -> dimension
using TDimensions = std::map<int, std::size_t>;

/// Sum over colorings of the tensor products of per-color fr homologies of the
/// colored sublinks: gl(1) colors contribute rank one at the sublink writhe,
/// gl(N_i) colors their undeformed rational homology with q forgotten.
TDimensions predict_decomposition(const PlanarDiagram& d, const DeformationMultiset& sigma);

struct DecompositionReport {
  struct Row {
    int t = 0;
    std::size_t predicted = 0;
    std::size_t computed = 0;
    bool match() const { return predicted == computed; }
  };
  DeformationMultiset sigma;
  std::vector<Row> rows;  ///< union of t-degrees, ascending
  bool matched() const;
};

/// Compares predict_decomposition against the filtered homology of the
/// Σ-deformed cube.
DecompositionReport verify_decomposition(const PlanarDiagram& d, const DeformationMultiset& sigma);

struct CableInvariants {
  int r = 0;
  int m = 0;
  int s = 0;                   ///< (r-1)^2 - 2m
  int chi_bound_s = 0;         ///< 2m + 2r - r^2
  int chi_km = 0;              ///< 2 - (r-1)(r-2) - (2m + r)
  int qmin_conditional = 0;    ///< -2m - 2r + r^2, valid only under an extra hypothesis
  int handle_lower_bound = 0;  ///< -4m - 3r + r^2
  bool qmin_is_conditional = true;
};

/// Invariants of L^1_{n,m} with n = m + r; ValidationError for r < 1 or m < 0.
CableInvariants cable_invariants(int r, int m);

struct SphereGenerator {
  int extra_pairs = 0;  ///< n
  int dots = 0;         ///< 0 or 1
  int q = 0;            ///< 2(dots - |k| - 2n)
};

/// The first `depth` generators of the class kβ in S^2 x D^2, ordered by
/// descending q.
std::vector<SphereGenerator> s2xd2_generators(int k, int depth);
/// (q, multiplicity) by descending q.
std::vector<std::pair<int, int>> s2xd2_model(int k, int depth);

/// Bidegree (k(1-N) - n, n) of the lowest generator of a positive diagram.
Bidegree qmin_for_positive_diagram(int crossings, int seifert_circles, int rank);
/// ((2-k)(1-N) + n, -n) for a negative diagram.
Bidegree qmin_for_negative_diagram(int crossings, int seifert_circles, int rank);

}  // namespace khr
