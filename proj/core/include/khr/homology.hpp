#pragma once

#include <map>
#include <optional>
#include <vector>

#include "khr/frobenius.hpp"
#include "khr/khcomplex.hpp"

namespace khr {

/// Homology of a q-homogeneous complex, stored in fr bidegrees.
struct BigradedHomology {
  struct Torsion {
    int q = 0;
    int t = 0;  ///< fr t-degree where the torsion appears in the fr complex
    std::vector<Integer> orders;
  };

  int rank = 2;
  int writhe = 0;
  bool integral = false;
  std::map<Bidegree, std::size_t> free;  ///< nonzero ranks only
  std::vector<Torsion> torsion;          ///< sorted by (t, q)

  std::map<int, std::size_t> dimensions_by_t() const;
  std::size_t total_rank() const;
  /// Ranks re-indexed in the requested grading.
  std::map<Bidegree, std::size_t> free_in(Grading g) const;
};

/// Free ranks over Q per (q,t). Throws ValidationError if the differential is
/// not q-homogeneous.
BigradedHomology rational_homology(const GradedChainComplex<Rational>& c);

/// Free ranks and torsion over Z via Smith normal form of every (q,t) block.
/// Throws ValidationError on non-integral entries or inhomogeneous input.
BigradedHomology integral_homology(const GradedChainComplex<Rational>& c);

/// t-degree at which torsion reported in the fr complex sits in the standard
/// (dual) complex: w - t_fr + 1.
int torsion_std_placement(int t_fr, int writhe);

/// Homology of a complex whose differential never raises q, with the induced
/// increasing filtration F_p = span{basis elements of q <= p}.
struct FilteredHomology {
  struct Degree {
    int t = 0;
    std::size_t dimension = 0;
    /// (p, dim F_p H^t) at every level where the dimension increases.
    std::vector<std::pair<int, std::size_t>> jumps;
  };

  int rank = 2;
  int writhe = 0;
  std::vector<Degree> degrees;  ///< nonzero degrees only, ascending t

  std::size_t dimension_at(int t) const;
  std::size_t total_dimension() const;
  /// dim F_p H^t.
  std::size_t filtration_dimension(int t, int p) const;
  std::map<int, std::size_t> dimensions_by_t() const;
};

/// Throws ValidationError if some differential entry raises q.
FilteredHomology filtered_homology(const GradedChainComplex<Rational>& c);

/// Gaussian elimination of every differential entry joining two basis
/// elements of equal q. The result is filtered chain homotopy equivalent to
/// the input (and chain homotopy equivalent for a q-homogeneous complex).
GradedChainComplex<Rational> cancel_equal_degree(const GradedChainComplex<Rational>& c);

/// Minimal filtration level of a nonzero class in H^{t0}; nullopt if the
/// degree is empty.
std::optional<int> q_min(const FilteredHomology& h, int t0);

struct NontorsionWitness {
  DeformationMultiset sigma;
  int q_min = 0;
};

/// First candidate Σ (all multiplicities one) whose deformed homology is
/// nonzero in fr t-degree t0. Absence is not a proof of torsion.
std::optional<NontorsionWitness> nontorsion_witness(const PlanarDiagram& d, int t0,
                                                    const std::vector<DeformationMultiset>& candidates);

/// {0,1,...,N-1} followed by a few fixed pseudo-random sets of distinct rationals.
std::vector<DeformationMultiset> default_witness_candidates(int rank);

/// Σ-deformed fr complex of d over Q (rank = Σ.total()).
GradedChainComplex<Rational> deformed_complex(const PlanarDiagram& d, const DeformationMultiset& sigma);

}  // namespace khr
