#pragma once

// JSON reports (pretty-printed, key order fixed, byte-stable across runs) and
// JSON input for 4-manifold and surface data.

#include <string>
#include <string_view>
#include <vector>

#include "khr/acceptance.hpp"
#include "khr/homology.hpp"
#include "khr/lasagna.hpp"

namespace khr {

std::string diagram_json(const PlanarDiagram& d);

std::string algebra_json(const FrobeniusAlgebra<Rational>& a);

/// Chain-group dimensions per bidegree and the differential sizes.
std::string complex_json(const GradedChainComplex<Rational>& c, Grading g);

/// Either part may be null. Bidegrees are converted to the requested grading;
/// torsion entries carry the grading they are placed in.
std::string homology_json(int rank, int writhe, Grading g, const BigradedHomology* graded,
                          const FilteredHomology* filtered);

std::string decomposition_json(const DecompositionReport& r, int writhe, Grading g, int rank);
std::string tridegree_json(const Tridegree& t);
std::string cable_json(const CableInvariants& c);
std::string spheres_json(int k, int depth, const std::vector<std::pair<int, int>>& model);
std::string diversity_json(const DiversityResult& r);
std::string acceptance_json(const std::vector<acceptance::CriterionResult>& results);

/// {"b2": 1, "form": [[1]], "alpha0": [0]}; throws ParseError / ValidationError.
FourManifoldDatum parse_four_manifold_json(std::string_view text);
/// {"components": [{"chi": 2, "class": [1], "closed": true}, ...]}
SurfaceDatum parse_surface_json(std::string_view text);

/// Bidegree of a torsion summand found in fr t-degree t_fr of the fr complex,
/// in the requested grading (the std complex is dual, so torsion moves up one
/// t-degree there).
Bidegree torsion_bidegree(int q_fr, int t_fr, int rank, int writhe, Grading g);

}  // namespace khr
