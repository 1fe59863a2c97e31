#include "khr/lasagna.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>

#include "khr/homology.hpp"
#include "khr/parallel.hpp"

namespace khr {

void FourManifoldDatum::validate() const {
  if (b2 < 0) throw ValidationError("b2 must be nonnegative");
  if (static_cast<int>(form.size()) != b2) throw ValidationError("intersection form must have b2 rows");
  for (const auto& row : form)
    if (static_cast<int>(row.size()) != b2) throw ValidationError("intersection form must be square");
  for (int i = 0; i < b2; ++i)
    for (int j = 0; j < i; ++j)
      if (form[i][j] != form[j][i]) throw ValidationError("intersection form must be symmetric");
  if (static_cast<int>(alpha0.size()) != b2) throw ValidationError("alpha0 must have length b2");
}

long long FourManifoldDatum::pairing(const LatticeVector& x, const LatticeVector& y) const {
  if (static_cast<int>(x.size()) != b2 || static_cast<int>(y.size()) != b2)
    throw ValidationError("class dimension " + std::to_string(x.size()) + " does not match b2 = " +
                          std::to_string(b2));
  long long s = 0;
  for (int i = 0; i < b2; ++i)
    for (int j = 0; j < b2; ++j) s += x[i] * form[i][j] * y[j];
  return s;
}

void SurfaceDatum::validate() const {
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& c = components[i];
    if (c.closed && (c.chi % 2 != 0 || c.chi > 2))
      throw ValidationError("closed component " + std::to_string(i) + " has invalid Euler characteristic " +
                            std::to_string(c.chi));
    if (c.homology_class.size() != components.front().homology_class.size())
      throw ValidationError("surface components have classes of different dimensions");
  }
}

int SurfaceDatum::chi() const {
  int s = 0;
  for (const auto& c : components) s += c.chi;
  return s;
}

LatticeVector SurfaceDatum::total_class() const {
  if (components.empty()) return {};
  LatticeVector v(components.front().homology_class.size(), 0);
  for (const auto& c : components)
    for (std::size_t i = 0; i < v.size() && i < c.homology_class.size(); ++i) v[i] += c.homology_class[i];
  return v;
}

std::vector<Coloring> enumerate_colorings(int components, int colors) {
  if (components < 0 || colors < 1) throw ValidationError("need at least one color");
  std::vector<Coloring> out;
  Coloring c(static_cast<std::size_t>(components), 0);
  while (true) {
    out.push_back(c);
    int i = components - 1;
    while (i >= 0 && c[i] == colors - 1) c[i--] = 0;
    if (i < 0) break;
    ++c[i];
  }
  return out;
}

Tridegree surface_tridegree(int rank, int chi, int self_intersection, const LatticeVector& cls) {
  return {cls, (1 - rank) * chi - rank * self_intersection, self_intersection};
}

Tridegree surface_tridegree(int rank, const FourManifoldDatum& w, const SurfaceDatum& s) {
  w.validate();
  s.validate();
  LatticeVector cls = s.total_class();
  if (cls.empty()) cls.assign(static_cast<std::size_t>(w.b2), 0);
  long long ss = w.pairing(cls, cls);
  return surface_tridegree(rank, s.chi(), static_cast<int>(ss), cls);
}

int genus_bound(int rank, int q_min, int self_intersection) {
  if (rank < 2) throw ValidationError("genus bound needs N >= 2 (the N = 1 bound is degenerate)");
  long long num = -static_cast<long long>(rank) * self_intersection - q_min;
  long long den = rank - 1;
  long long q = num / den;
  if ((num % den != 0) && (num < 0)) --q;
  return static_cast<int>(q);
}

DiversityResult is_homologically_diverse(const SurfaceDatum& s) {
  s.validate();
  std::vector<int> closed;
  for (int i = 0; i < static_cast<int>(s.components.size()); ++i)
    if (s.components[i].closed) closed.push_back(i);
  if (closed.size() > 24) throw ValidationError("too many closed components for subset enumeration");
  const std::size_t dim = s.components.empty() ? 0 : s.components.front().homology_class.size();

  // Smallest subsets first so the witness is minimal.
  const int c = static_cast<int>(closed.size());
  for (int size = 1; size <= c; ++size) {
    std::vector<bool> pick(static_cast<std::size_t>(c), false);
    std::fill(pick.end() - size, pick.end(), true);
    do {
      LatticeVector sum(dim, 0);
      std::vector<int> subset;
      for (int i = 0; i < c; ++i) {
        if (!pick[i]) continue;
        subset.push_back(closed[i]);
        const auto& v = s.components[closed[i]].homology_class;
        for (std::size_t j = 0; j < dim; ++j) sum[j] += v[j];
      }
      if (std::all_of(sum.begin(), sum.end(), [](long long x) { return x == 0; })) return {false, subset};
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return {true, {}};
}

Tridegree gl1_skein_tridegree(const FourManifoldDatum& w, const LatticeVector& offset) {
  w.validate();
  if (static_cast<int>(offset.size()) != w.b2)
    throw ValidationError("offset has length " + std::to_string(offset.size()) + ", expected b2 = " +
                          std::to_string(w.b2));
  LatticeVector alpha(offset.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) alpha[i] = w.alpha0[i] + offset[i];
  long long aa = w.pairing(alpha, alpha);
  return {alpha, static_cast<int>(-aa), static_cast<int>(aa)};
}

namespace {

TDimensions convolve(const TDimensions& a, const TDimensions& b) {
  TDimensions out;
  for (const auto& [ta, da] : a)
    for (const auto& [tb, db] : b) out[ta + tb] += da * db;
  return out;
}

TDimensions factor_dimensions(const PlanarDiagram& sub, int multiplicity) {
  if (sub.component_count() == 0) return {{0, 1}};
  if (multiplicity == 1) return {{writhe(sub), 1}};
  BigradedHomology h = rational_homology(cube(sub, unknot_algebra(multiplicity)));
  return h.dimensions_by_t();
}

}  // namespace

TDimensions predict_decomposition(const PlanarDiagram& d, const DeformationMultiset& sigma) {
  const int c = d.component_count();
  const int colors = sigma.size();
  if (c > 12) throw ValidationError("too many components for coloring enumeration");
  for (const auto& e : sigma.entries())
    if (e.multiplicity > 2 && d.crossing_count() > 0)
      throw UnsupportedError("decomposition prediction supports multiplicities 1 and 2 only");

  // Factor for (color, component subset), computed once each.
  const std::size_t subsets = std::size_t{1} << c;
  std::vector<TDimensions> factors(static_cast<std::size_t>(colors) * subsets);
  parallel_for(factors.size(), [&](std::size_t job) {
    const int color = static_cast<int>(job / subsets);
    const std::size_t mask = job % subsets;
    SublinkSelector sel;
    for (int i = 0; i < c; ++i)
      if (mask >> i & 1) sel.kept_components.insert(i);
    factors[job] = factor_dimensions(sublink(d, sel), sigma.entries()[color].multiplicity);
  });

  TDimensions total;
  for (const Coloring& col : enumerate_colorings(c, colors)) {
    TDimensions term{{0, 1}};
    for (int color = 0; color < colors; ++color) {
      std::size_t mask = 0;
      for (int i = 0; i < c; ++i)
        if (col[i] == color) mask |= std::size_t{1} << i;
      term = convolve(term, factors[static_cast<std::size_t>(color) * subsets + mask]);
    }
    for (const auto& [t, dim] : term) total[t] += dim;
  }
  return total;
}

bool DecompositionReport::matched() const {
  return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.match(); });
}

DecompositionReport verify_decomposition(const PlanarDiagram& d, const DeformationMultiset& sigma) {
  TDimensions predicted = predict_decomposition(d, sigma);
  TDimensions computed = filtered_homology(deformed_complex(d, sigma)).dimensions_by_t();
  std::set<int> ts;
  for (const auto& [t, n] : predicted) ts.insert(t);
  for (const auto& [t, n] : computed) ts.insert(t);
  DecompositionReport rep{sigma, {}};
  for (int t : ts) {
    DecompositionReport::Row row;
    row.t = t;
    if (auto it = predicted.find(t); it != predicted.end()) row.predicted = it->second;
    if (auto it = computed.find(t); it != computed.end()) row.computed = it->second;
    if (row.predicted != 0 || row.computed != 0) rep.rows.push_back(row);
  }
  return rep;
}

CableInvariants cable_invariants(int r, int m) {
  if (r < 1) throw ValidationError("cable invariants need r >= 1");
  if (m < 0) throw ValidationError("cable invariants need m >= 0");
  CableInvariants c;
  c.r = r;
  c.m = m;
  c.s = (r - 1) * (r - 1) - 2 * m;
  c.chi_bound_s = 2 * m + 2 * r - r * r;
  c.chi_km = 2 - (r - 1) * (r - 2) - (2 * m + r);
  c.qmin_conditional = -2 * m - 2 * r + r * r;
  c.handle_lower_bound = -4 * m - 3 * r + r * r;
  return c;
}

std::vector<SphereGenerator> s2xd2_generators(int k, int depth) {
  if (depth < 1) throw ValidationError("truncation depth must be at least 1");
  std::vector<SphereGenerator> out;
  for (int n = 0; static_cast<int>(out.size()) < depth; ++n)
    for (int dots = 1; dots >= 0 && static_cast<int>(out.size()) < depth; --dots)
      out.push_back({n, dots, 2 * (dots - std::abs(k) - 2 * n)});
  return out;
}

std::vector<std::pair<int, int>> s2xd2_model(int k, int depth) {
  std::map<int, int, std::greater<>> mult;
  for (const auto& g : s2xd2_generators(k, depth)) ++mult[g.q];
  return {mult.begin(), mult.end()};
}

Bidegree qmin_for_positive_diagram(int crossings, int seifert_circles, int rank) {
  return {seifert_circles * (1 - rank) - crossings, crossings};
}

Bidegree qmin_for_negative_diagram(int crossings, int seifert_circles, int rank) {
  return {(2 - seifert_circles) * (1 - rank) + crossings, -crossings};
}

}  // namespace khr
