#include "khr/json_io.hpp"

#include <nlohmann/json.hpp>

namespace khr {

using Json = nlohmann::ordered_json;

namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json rational_array(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json lattice(const LatticeVector& v) {
  Json a = Json::array();
  for (long long x : v) a.push_back(x);
  return a;
}

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

LatticeVector read_lattice(const Json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an integer array");
  LatticeVector v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ValidationError(std::string(what) + " must be an integer array");
    v.push_back(x.get<long long>());
  }
  return v;
}

}  // namespace

Bidegree torsion_bidegree(int q_fr, int t_fr, int rank, int writhe, Grading g) {
  if (g == Grading::Fr) return {q_fr, t_fr};
  return {q_fr + rank * writhe, torsion_std_placement(t_fr, writhe)};
}

std::string diagram_json(const PlanarDiagram& d) {
  Json j;
  j["pd"] = to_pd_text(d);
  j["crossings"] = d.crossing_count();
  j["components"] = d.component_count();
  j["free_loops"] = d.free_loops();
  j["n_plus"] = d.n_plus();
  j["n_minus"] = d.n_minus();
  j["writhe"] = writhe(d);
  SeifertData s = seifert_data(d);
  j["seifert_circles"] = s.circles;
  j["seifert_chi"] = s.chi;
  Json signs = Json::array();
  for (const auto& x : d.crossings()) signs.push_back(x.sign());
  j["signs"] = signs;
  return dump(j);
}

std::string algebra_json(const FrobeniusAlgebra<Rational>& a) {
  Json j;
  j["N"] = a.rank;
  j["mode"] = to_string(a.mode);
  j["relation"] = rational_array(a.relation);
  Json degrees = Json::array();
  for (int i = 0; i < a.rank; ++i) degrees.push_back(a.degree(i));
  j["degrees"] = degrees;
  Json mult = Json::array();
  for (int x = 0; x < a.rank; ++x)
    for (int y = 0; y < a.rank; ++y) mult.push_back({{"a", x}, {"b", y}, {"product", rational_array(a.mult[x][y])}});
  j["mult"] = mult;
  Json comult = Json::array();
  for (int x = 0; x < a.rank; ++x) {
    Json terms = Json::array();
    for (int b = 0; b < a.rank; ++b)
      for (int c = 0; c < a.rank; ++c)
        if (!is_zero(a.comult[x][b][c])) terms.push_back({{"b", b}, {"c", c}, {"coeff", to_string(a.comult[x][b][c])}});
    comult.push_back({{"a", x}, {"terms", terms}});
  }
  j["comult"] = comult;
  j["counit"] = rational_array(a.counit);
  return dump(j);
}

std::string complex_json(const GradedChainComplex<Rational>& c, Grading g) {
  std::map<Bidegree, std::size_t> dims;
  for (int t = c.t_min; t <= c.t_max(); ++t)
    for (const auto& b : c.basis_at(t)) {
      Bidegree fr{b.q, t};
      ++dims[g == Grading::Fr ? fr : fr_to_std(fr, c.rank, c.writhe)];
    }
  Json j;
  j["N"] = c.rank;
  j["writhe"] = c.writhe;
  j["grading"] = to_string(g);
  j["mode"] = to_string(c.mode);
  j["total_dimension"] = c.total_dimension();
  Json groups = Json::array();
  for (const auto& [b, n] : dims) groups.push_back({{"q", b.q}, {"t", b.t}, {"rank", n}});
  j["chain_groups"] = groups;
  Json diffs = Json::array();
  for (int t = c.t_min; t < c.t_max(); ++t) {
    const auto& m = c.differential[static_cast<std::size_t>(t - c.t_min)];
    diffs.push_back({{"t_fr", t}, {"rows", m.rows}, {"cols", m.cols}, {"nonzeros", m.nonzeros()}});
  }
  j["differentials"] = diffs;
  return dump(j);
}

std::string homology_json(int rank, int writhe, Grading g, const BigradedHomology* graded,
                          const FilteredHomology* filtered) {
  auto conv = [&](Bidegree fr) { return g == Grading::Fr ? fr : fr_to_std(fr, rank, writhe); };
  Json j;
  j["N"] = rank;
  j["writhe"] = writhe;
  j["grading"] = to_string(g);
  if (graded) {
    std::map<Bidegree, std::size_t> free = graded->free_in(g);
    Json a = Json::array();
    for (const auto& [b, n] : free) a.push_back({{"q", b.q}, {"t", b.t}, {"rank", n}});
    j["free"] = a;
    if (graded->integral) {
      std::vector<std::pair<Bidegree, const BigradedHomology::Torsion*>> placed;
      for (const auto& tor : graded->torsion) placed.emplace_back(torsion_bidegree(tor.q, tor.t, rank, writhe, g), &tor);
      std::sort(placed.begin(), placed.end(), [](const auto& x, const auto& y) {
        return std::tie(x.first.t, x.first.q) < std::tie(y.first.t, y.first.q);
      });
      Json tors = Json::array();
      for (const auto& [b, tor] : placed) {
        Json orders = Json::array();
        for (const auto& o : tor->orders) orders.push_back(o.get_str());
        tors.push_back({{"q", b.q}, {"t", b.t}, {"orders", orders}, {"placement", to_string(g)}});
      }
      j["torsion"] = tors;
    }
  }
  if (filtered) {
    // Levels are q-degrees, so they convert like q; t reflects in std grading.
    std::vector<std::pair<int, Json>> rows;
    std::vector<std::pair<int, int>> qmins;
    for (const auto& d : filtered->degrees) {
      Json jumps = Json::array();
      for (const auto& [p, n] : d.jumps) jumps.push_back({conv({p, d.t}).q, n});
      int t = conv({0, d.t}).t;
      rows.emplace_back(t, Json{{"t", t}, {"dimension", d.dimension}, {"jumps", jumps}});
      if (!d.jumps.empty()) qmins.emplace_back(t, conv({d.jumps.front().first, d.t}).q);
    }
    std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::sort(qmins.begin(), qmins.end());
    Json f = Json::array();
    for (auto& [t, row] : rows) f.push_back(std::move(row));
    j["filtration"] = f;
    Json q = Json::array();
    for (const auto& [t, v] : qmins) q.push_back({{"t", t}, {"value", v}});
    j["qmin"] = q;
  }
  return dump(j);
}

std::string decomposition_json(const DecompositionReport& r, int writhe, Grading g, int rank) {
  Json j;
  j["sigma"] = r.sigma.str();
  j["grading"] = to_string(g);
  j["matched"] = r.matched();
  std::vector<std::pair<int, Json>> rows;
  for (const auto& row : r.rows) {
    int t = g == Grading::Fr ? row.t : fr_to_std({0, row.t}, rank, writhe).t;
    rows.emplace_back(t, Json{{"t", t}, {"predicted", row.predicted}, {"computed", row.computed}, {"match", row.match()}});
  }
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  Json a = Json::array();
  for (auto& [t, row] : rows) a.push_back(std::move(row));
  j["rows"] = a;
  return dump(j);
}

std::string tridegree_json(const Tridegree& t) {
  Json j;
  j["class"] = lattice(t.homology_class);
  j["q"] = t.q;
  j["t"] = t.t;
  return dump(j);
}

std::string cable_json(const CableInvariants& c) {
  Json j;
  j["r"] = c.r;
  j["m"] = c.m;
  j["n"] = c.m + c.r;
  j["s"] = c.s;
  j["chi_bound_s"] = c.chi_bound_s;
  j["chi_km"] = c.chi_km;
  j["qmin_conditional"] = {{"value", c.qmin_conditional}, {"conditional", c.qmin_is_conditional}};
  j["handle_lower_bound"] = c.handle_lower_bound;
  return dump(j);
}

std::string spheres_json(int k, int depth, const std::vector<std::pair<int, int>>& model) {
  Json j;
  j["k"] = k;
  j["depth"] = depth;
  Json a = Json::array();
  for (const auto& [q, m] : model) a.push_back({{"q", q}, {"multiplicity", m}});
  j["degrees"] = a;
  return dump(j);
}

std::string diversity_json(const DiversityResult& r) {
  Json j;
  j["diverse"] = r.diverse;
  Json w = Json::array();
  for (int i : r.witness) w.push_back(i);
  j["witness"] = w;
  return dump(j);
}

std::string acceptance_json(const std::vector<acceptance::CriterionResult>& results) {
  Json a = Json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    a.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"details", r.details}});
  }
  Json j;
  j["passed"] = all;
  j["criteria"] = a;
  return dump(j);
}

FourManifoldDatum parse_four_manifold_json(std::string_view text) {
  Json j = parse_text(text);
  if (!j.is_object()) throw ValidationError("4-manifold datum must be a JSON object");
  FourManifoldDatum w;
  if (!j.contains("form")) throw ValidationError("4-manifold datum needs 'form'");
  for (const auto& row : j.at("form")) w.form.push_back(read_lattice(row, "form row"));
  w.b2 = j.contains("b2") ? j.at("b2").get<int>() : static_cast<int>(w.form.size());
  w.alpha0 = j.contains("alpha0") ? read_lattice(j.at("alpha0"), "alpha0") : LatticeVector(static_cast<std::size_t>(w.b2), 0);
  w.validate();
  return w;
}

SurfaceDatum parse_surface_json(std::string_view text) {
  Json j = parse_text(text);
  if (!j.is_object() || !j.contains("components")) throw ValidationError("surface datum needs 'components'");
  SurfaceDatum s;
  for (const auto& c : j.at("components")) {
    SurfaceComponent comp;
    if (!c.contains("chi") || !c.at("chi").is_number_integer()) throw ValidationError("component needs integer 'chi'");
    comp.chi = c.at("chi").get<int>();
    if (c.contains("class")) comp.homology_class = read_lattice(c.at("class"), "class");
    comp.closed = c.value("closed", false);
    s.components.push_back(std::move(comp));
  }
  s.validate();
  return s;
}

}  // namespace khr
