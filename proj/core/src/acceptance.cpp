#include "khr/acceptance.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "khr/fixtures.hpp"
#include "khr/homology.hpp"
#include "khr/lasagna.hpp"

namespace khr::acceptance {

namespace {

using FreeMap = std::map<Bidegree, std::size_t>;

class Checks {
 public:
  explicit Checks(CriterionResult& r) : r_(r) {}

  void expect(bool ok, const std::string& what) {
    (ok ? passed_ : failed_).push_back((ok ? "ok    " : "FAIL  ") + what);
  }

  void finish() {
    r_.passed = failed_.empty();
    r_.details = failed_;
    r_.details.insert(r_.details.end(), passed_.begin(), passed_.end());
  }

 private:
  CriterionResult& r_;
  std::vector<std::string> passed_, failed_;
};

std::string str(const FreeMap& m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [b, n] : m) {
    os << (first ? "" : ", ") << '(' << b.q << ',' << b.t << "):" << n;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string str(const TDimensions& m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [t, n] : m) {
    os << (first ? "" : ", ") << "t=" << t << ':' << n;
    first = false;
  }
  os << '}';
  return os.str();
}

FreeMap shifted(const FreeMap& m, Bidegree by) {
  FreeMap out;
  for (const auto& [b, n] : m) out[{b.q + by.q, b.t + by.t}] = n;
  return out;
}

FreeMap fr_homology(const PlanarDiagram& d, int rank) { return rational_homology(cube(d, unknot_algebra(rank))).free; }

const DeformationMultiset& sigma01() {
  static const DeformationMultiset s = DeformationMultiset::consecutive(2);
  return s;
}

// ---------------------------------------------------------------------------

void unknot_algebra_criterion(Checks& c) {
  PlanarDiagram u = fixture("unknot").diagram();
  BigradedHomology h = integral_homology(cube(u, unknot_algebra(2)));
  FreeMap expected{{{-1, 0}, 1}, {{1, 0}, 1}};
  c.expect(h.free == expected && h.torsion.empty(), "unknot N=2 integral fr homology " + str(h.free) + " torsion-free");

  auto idem = crt_idempotents(sigma01());
  RatPoly p = sigma01().polynomial();
  bool ok = idem.size() == 2;
  if (ok) {
    ok = ((idem[0] * idem[0]).mod(p) == idem[0]) && ((idem[1] * idem[1]).mod(p) == idem[1]) &&
         (idem[0] * idem[1]).mod(p).is_zero() && (idem[0] + idem[1]) == RatPoly(Rational(1));
  }
  c.expect(ok, "Sigma={0,1}: e(0), e(1) orthogonal idempotents summing to 1");
  for (std::size_t i = 0; i < idem.size(); ++i) {
    // X e(λ) = λ e(λ): each summand is a one-dimensional eigenspace of X.
    Rational lambda = sigma01().entries()[i].value;
    RatPoly lhs = (RatPoly::monomial(Rational(1), 1) * idem[i]).mod(p);
    c.expect(lhs == (RatPoly(lambda) * idem[i]), "X e(" + to_string(lambda) + ") = " + to_string(lambda) + " e(" +
                                                       to_string(lambda) + ")");
  }
  FilteredHomology f = filtered_homology(deformed_complex(u, sigma01()));
  c.expect(f.dimension_at(0) == 2 && f.total_dimension() == 2, "deformed unknot homology is 2-dimensional at t=0");
  c.expect(f.filtration_dimension(0, -1) == 1 && f.filtration_dimension(0, 1) == 2,
           "deformed unknot filtration jumps at q=-1 and q=1");
}

void framing_criterion(Checks& c) {
  PlanarDiagram u = fixture("unknot").diagram();
  for (int rank : {1, 2}) {
    FreeMap h0 = fr_homology(u, rank);
    for (int sign : {+1, -1}) {
      for (int kinks : {1, 2}) {
        PlanarDiagram d = u;
        for (int i = 0; i < kinks; ++i) d = add_kink(d, 0, sign);
        FreeMap h = fr_homology(d, rank);
        Bidegree step = framing_shift(rank, sign * kinks);
        c.expect(h == shifted(h0, step), "N=" + std::to_string(rank) + ", " + std::to_string(kinks) + " kink(s) of sign " +
                                             (sign > 0 ? "+" : "-") + ": " + str(h) + " = shift by (" +
                                             std::to_string(step.q) + "," + std::to_string(step.t) + ")");
      }
    }
    for (const char* name : {"unknot_kink_pos", "unknot_kink_neg"}) {
      PlanarDiagram d = fixture(name).diagram();
      FreeMap h = fr_homology(d, rank);
      c.expect(h == shifted(h0, framing_shift(rank, writhe(d))),
               std::string(name) + " N=" + std::to_string(rank) + ": " + str(h));
    }
  }
}

void gl1_criterion(Checks& c) {
  for (const auto& f : fixtures()) {
    PlanarDiagram d = f.diagram();
    BigradedHomology h = integral_homology(cube(d, unknot_algebra(1)));
    int w = writhe(d);
    FreeMap expected{{{-w, w}, 1}};
    c.expect(h.free == expected && h.torsion.empty(),
             f.name + ": N=1 homology " + str(h.free) + ", expected rank 1 at (" + std::to_string(-w) + "," +
                 std::to_string(w) + ")");
  }
}

void positive_qmin_criterion(Checks& c) {
  const std::vector<std::pair<std::string, int>> cases{{"trefoil_right", -5}, {"hopf_pos", -4}, {"t24", -6}};
  for (const auto& [name, anchor] : cases) {
    PlanarDiagram d = fixture(name).diagram();
    int n = d.crossing_count();
    int k = seifert_data(d).circles;
    Bidegree formula = qmin_for_positive_diagram(n, k, 2);
    auto q = q_min(filtered_homology(deformed_complex(d, sigma01())), n);
    c.expect(q && *q == formula.q && formula.q == anchor && formula.t == n,
             name + ": q_min at t=" + std::to_string(n) + " is " + (q ? std::to_string(*q) : "undefined") +
                 ", k(1-N)-n = " + std::to_string(formula.q));
  }
}

void genus_criterion(Checks& c) {
  for (const char* name : {"trefoil_right", "hopf_pos", "t24"}) {
    PlanarDiagram d = fixture(name).diagram();
    int n = d.crossing_count();
    SeifertData s = seifert_data(d);
    auto q = q_min(filtered_homology(deformed_complex(d, sigma01())), n);
    if (!q) {
      c.expect(false, std::string(name) + ": no class at t=n");
      continue;
    }
    int bound = genus_bound(2, *q, writhe(d));
    c.expect(bound == s.circles - n && bound == s.chi,
             std::string(name) + ": chi <= " + std::to_string(bound) + ", Seifert surface chi = " + std::to_string(s.chi));
  }
  PlanarDiagram left = fixture("trefoil_left").diagram();
  int n = left.crossing_count();
  int k = seifert_data(left).circles;
  auto q = q_min(filtered_homology(deformed_complex(left, sigma01())), -n);
  Bidegree formula = qmin_for_negative_diagram(n, k, 2);
  c.expect(q && *q == formula.q && formula.q == 3,
           "trefoil_left: q_min at t=-3 is " + (q ? std::to_string(*q) : std::string("undefined")) + ", expected 3");
  int bound = q ? genus_bound(2, *q, writhe(left)) : 0;
  c.expect(q && bound == n + (k - 2) && bound == 3, "trefoil_left: chi <= " + std::to_string(bound) + " = n+(k-2)");
}

void deformed_rank_criterion(Checks& c) {
  const std::vector<std::pair<std::string, std::size_t>> cases{
      {"unknot", 2}, {"trefoil_right", 2}, {"trefoil_left", 2}, {"hopf_pos", 4}, {"hopf_neg", 4}, {"unlink2", 4}, {"t24", 4}};
  for (const auto& [name, expected] : cases) {
    PlanarDiagram d = fixture(name).diagram();
    std::size_t total = filtered_homology(deformed_complex(d, sigma01())).total_dimension();
    std::size_t power = std::size_t{1} << d.component_count();
    c.expect(total == expected && total == power,
             name + ": total deformed dimension " + std::to_string(total) + " = 2^" + std::to_string(d.component_count()));
  }
}

void decomposition_criterion(Checks& c) {
  for (const auto& f : fixtures()) {
    if (f.crossings > 8) continue;
    PlanarDiagram d = f.diagram();
    DecompositionReport rep = verify_decomposition(d, sigma01());
    TDimensions computed;
    for (const auto& row : rep.rows) computed[row.t] = row.computed;
    c.expect(rep.matched(), f.name + ": prediction matches deformed homology " + str(computed));
  }
  PlanarDiagram hopf = fixture("hopf_pos").diagram();
  TDimensions pred = predict_decomposition(hopf, sigma01());
  c.expect(pred == TDimensions{{0, 2}, {2, 2}}, "hopf_pos: predicted " + str(pred) + " = {t=0:2, t=2:2}");

  // Mixed colorings of the Hopf link split into two unknots and sit at t = 0.
  std::size_t mixed_t0 = 0;
  for (const Coloring& col : enumerate_colorings(2, 2))
    if (col[0] != col[1]) mixed_t0 += 1;
  c.expect(mixed_t0 == pred[0], "hopf_pos: the two mixed colorings account for t=0");
}

void reidemeister_criterion(Checks& c) {
  for (const auto& p : reidemeister_pairs()) {
    PlanarDiagram a = diagram_from_source(p.first), b = diagram_from_source(p.second);
    FreeMap ha = fr_homology(a, 2), hb = fr_homology(b, 2);
    c.expect(ha == hb, p.name + ": " + str(ha) + (ha == hb ? " == " : " != ") + str(hb));
  }
  for (const char* name : {"trefoil_right", "hopf_pos", "figure8"}) {
    PlanarDiagram d = fixture(name).diagram();
    for (int rank : {1, 2}) {
      FreeMap h = fr_homology(d, rank), hk = fr_homology(add_kink(d, 0, +1), rank);
      c.expect(hk == shifted(h, {-rank, 1}),
               std::string(name) + " + positive kink, N=" + std::to_string(rank) + ": shift by (" +
                   std::to_string(-rank) + ",1)");
    }
  }
}

void cable_criterion(Checks& c) {
  int bad = 0, strict_bad = 0;
  for (int r = 1; r <= 10; ++r)
    for (int m = 0; m <= 10; ++m) {
      CableInvariants ci = cable_invariants(r, m);
      bool ok = ci.s == (r - 1) * (r - 1) - 2 * m && ci.chi_bound_s == 2 * m + 2 * r - r * r &&
                ci.chi_km == 2 - (r - 1) * (r - 2) - (2 * m + r) && ci.qmin_conditional == -2 * m - 2 * r + r * r &&
                ci.handle_lower_bound == -4 * m - 3 * r + r * r && ci.qmin_is_conditional && ci.chi_km <= ci.chi_bound_s;
      if (!ok) ++bad;
      if (m > 1 && !(ci.chi_km < ci.chi_bound_s)) ++strict_bad;
      if (m == 0 && ci.chi_km != ci.chi_bound_s) ++bad;
    }
  c.expect(bad == 0, "closed forms and chi_km <= chi_bound_s on r<=10, m<=10 (" + std::to_string(bad) + " failures)");
  c.expect(strict_bad == 0, "strict inequality for every m > 1 (" + std::to_string(strict_bad) + " failures)");
  CableInvariants a = cable_invariants(1, 1), b = cable_invariants(3, 0);
  c.expect(a.s == -2 && a.chi_bound_s == 3 && a.chi_km == -1 && a.qmin_conditional == -3,
           "(r,m)=(1,1): s=-2, chi_bound_s=3, chi_km=-1, qmin=-3");
  c.expect(b.s == 4 && b.chi_bound_s == -3 && b.chi_km == -3, "(r,m)=(3,0): s=4, chi_bound_s=chi_km=-3");
}

void spheres_criterion(Checks& c) {
  for (int k : {0, 1, 2}) {
    auto model = s2xd2_model(k, 10);
    bool ok = model.size() == 10;
    for (std::size_t i = 0; ok && i < model.size(); ++i)
      ok = model[i].second == 1 && model[i].first == 2 * (1 - k) - 2 * static_cast<int>(i);
    c.expect(ok, "k=" + std::to_string(k) + ": 10 degrees of multiplicity 1 descending by 2 from " +
                     std::to_string(2 * (1 - k)));
  }
}

void property_criterion(Checks& c) {
  // Frobenius axioms.
  std::vector<std::pair<std::string, FrobeniusAlgebra<Rational>>> algebras{
      {"k[X]/X", unknot_algebra(1)},
      {"k[X]/X^2", unknot_algebra(2)},
      {"k[X]/X^3", unknot_algebra(3)},
      {"Sigma={0,1}", unknot_algebra(2, sigma01())},
      {"Sigma={-1,1/2,3}", unknot_algebra(3, DeformationMultiset::parse("-1,1/2,3"))},
      {"Sigma={0^2,1}", unknot_algebra(3, DeformationMultiset::parse("0^2,1"))},
  };
  for (const auto& [name, a] : algebras)
    c.expect(frobenius_axiom_failures(a).empty(), "Frobenius axioms for " + name);
  for (int rank : {1, 2, 3})
    c.expect(frobenius_axiom_failures(equivariant_algebra(rank)).empty(),
             "Frobenius axioms for the equivariant rank-" + std::to_string(rank) + " algebra");

  // CRT identities.
  for (const char* text : {"0,1", "0^2,1", "-1,1/2,3", "2^3,-1^2"}) {
    DeformationMultiset s = DeformationMultiset::parse(text);
    RatPoly p = s.polynomial();
    auto e = crt_idempotents(s);
    RatPoly sum;
    bool ok = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      sum = sum + e[i];
      ok = ok && (e[i] * e[i]).mod(p) == e[i];
      for (std::size_t j = i + 1; j < e.size(); ++j) ok = ok && (e[i] * e[j]).mod(p).is_zero();
    }
    c.expect(ok && sum == RatPoly(Rational(1)), std::string("CRT idempotents for {") + text + "}");
  }

  // d^2 = 0 and filtration monotonicity.
  for (const auto& f : fixtures()) {
    if (f.crossings > 8) continue;
    PlanarDiagram d = f.diagram();
    bool sq = differential_squares_to_zero(cube(d, unknot_algebra(2))) &&
              differential_squares_to_zero(cube(d, unknot_algebra(1)));
    auto deformed = deformed_complex(d, sigma01());
    sq = sq && differential_squares_to_zero(deformed);
    if (f.crossings <= 5) sq = sq && differential_squares_to_zero(cube(d, equivariant_algebra(2)));
    c.expect(sq, f.name + ": d^2 = 0");
    FilteredHomology h = filtered_homology(deformed);
    bool mono = true;
    for (const auto& deg : h.degrees) {
      std::size_t prev = 0;
      for (const auto& [p, n] : deg.jumps) {
        mono = mono && n > prev;
        prev = n;
      }
      mono = mono && prev == deg.dimension;
    }
    c.expect(mono, f.name + ": filtration dimensions increase to the total dimension");
  }

  // Künneth on split unions.
  const std::vector<std::pair<std::string, std::string>> unions{
      {"trefoil_right", "hopf_pos"}, {"figure8", "unknot"}, {"hopf_neg", "trefoil_left"}};
  for (const auto& [x, y] : unions) {
    PlanarDiagram a = fixture(x).diagram(), b = fixture(y).diagram();
    FreeMap ha = fr_homology(a, 2), hb = fr_homology(b, 2), hab = fr_homology(disjoint_union(a, b), 2);
    FreeMap product;
    for (const auto& [ba, na] : ha)
      for (const auto& [bb, nb] : hb) product[{ba.q + bb.q, ba.t + bb.t}] += na * nb;
    c.expect(hab == product, x + " split union " + y + ": Kunneth product of ranks");
  }

  // Diversity monotonicity under removal of closed components.
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-2, 2), count(1, 6), coin(0, 1);
  int violations = 0;
  for (int trial = 0; trial < 200; ++trial) {
    SurfaceDatum s;
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
      bool closed = coin(rng) == 1;
      s.components.push_back({closed ? 2 * coord(rng) - 2 : coord(rng), {coord(rng), coord(rng)}, closed});
    }
    if (!is_homologically_diverse(s).diverse) continue;
    for (int i = 0; i < n; ++i) {
      if (!s.components[i].closed) continue;
      SurfaceDatum smaller = s;
      smaller.components.erase(smaller.components.begin() + i);
      if (!is_homologically_diverse(smaller).diverse) ++violations;
    }
  }
  c.expect(violations == 0, "diversity preserved by removing closed components (200 random surfaces)");
}

struct Criterion {
  const char* title;
  std::function<void(Checks&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"Unknot algebra", unknot_algebra_criterion},
      {"Framing law", framing_criterion},
      {"gl(1) oracle", gl1_criterion},
      {"Positive-diagram q_min", positive_qmin_criterion},
      {"Genus-bound sharpness", genus_criterion},
      {"Deformed total rank", deformed_rank_criterion},
      {"Decomposition verification", decomposition_criterion},
      {"Reidemeister invariance", reidemeister_criterion},
      {"Cable arithmetic", cable_criterion},
      {"S^2 x D^2 model", spheres_criterion},
      {"Property suite", property_criterion},
  };
  return all;
}

}  // namespace

int criterion_count() { return static_cast<int>(criteria().size()); }

CriterionResult run_criterion(int id) {
  if (id < 1 || id > criterion_count()) throw ValidationError("no acceptance criterion " + std::to_string(id));
  const Criterion& cr = criteria()[static_cast<std::size_t>(id - 1)];
  CriterionResult r;
  r.id = id;
  r.title = cr.title;
  auto start = std::chrono::steady_clock::now();
  Checks checks(r);
  try {
    cr.run(checks);
    checks.finish();
  } catch (const std::exception& e) {
    checks.expect(false, std::string("exception: ") + e.what());
    checks.finish();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_all() {
  std::vector<CriterionResult> out;
  for (int i = 1; i <= criterion_count(); ++i) out.push_back(run_criterion(i));
  return out;
}

std::string summary_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << "  " << (r.id < 10 ? " " : "") << r.id << "  " << r.title;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "  (" << r.seconds << " s)";
  return os.str();
}

}  // namespace khr::acceptance
