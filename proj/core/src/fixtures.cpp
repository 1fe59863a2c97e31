#include "khr/fixtures.hpp"

#include <algorithm>
#include <sstream>

#include "khr/arith.hpp"

namespace khr {

namespace {

Fixture make(std::string name, std::string description, std::string source) {
  Fixture f{std::move(name), std::move(description), std::move(source)};
  PlanarDiagram d = f.diagram();
  f.crossings = d.crossing_count();
  f.components = d.component_count();
  f.positive = d.crossing_count() > 0 && d.n_minus() == 0;
  return f;
}

std::vector<Fixture> build_fixtures() {
  std::vector<Fixture> v;
  v.push_back(make("unknot", "crossingless unknot", "PD[]; O(1)"));
  v.push_back(make("unknot_kink_pos", "unknot with one positive curl", "PD[X(1,1,2,2)]"));
  v.push_back(make("unknot_kink_neg", "unknot with one negative curl", "PD[X(1,2,2,1)]"));
  v.push_back(make("unlink2", "two-component unlink", "PD[]; O(2)"));
  v.push_back(make("hopf_pos", "positive Hopf link", "PD[X(1,3,2,4), X(3,1,4,2)]"));
  v.push_back(make("hopf_neg", "negative Hopf link", "BR[2; -1 -1]"));
  v.push_back(make("trefoil_right", "right-handed trefoil", "PD[X(1,5,2,4), X(3,1,4,6), X(5,3,6,2)]"));
  v.push_back(make("trefoil_left", "left-handed trefoil", "PD[X(1,4,2,5), X(3,6,4,1), X(5,2,6,3)]"));
  v.push_back(make("figure8", "figure-eight knot", "PD[X(4,2,5,1), X(8,6,1,5), X(6,3,7,4), X(2,7,3,8)]"));
  v.push_back(make("t24", "positive T(2,4) torus link", "BR[2; 1 1 1 1]"));
  v.push_back(make("trefoil_unknot", "right trefoil split with an unknot", "PD[X(1,5,2,4), X(3,1,4,6), X(5,3,6,2)]; O(1)"));
  v.push_back(make("whitehead", "Whitehead link",
                   "PD[X(6,1,7,2), X(10,7,5,8), X(4,5,1,6), X(2,10,3,9), X(8,4,9,3)]"));
  v.push_back(make("borromean", "Borromean rings", "BR[3; 1 -2 1 -2 1 -2]"));
  v.push_back(make("t34", "positive T(3,4) torus knot", "BR[3; 1 2 1 2 1 2 1 2]"));
  v.push_back(make("cable_1_2_1", "blackboard cable L^1_{2,1} of the 1-framed unknot", "cable 1,2,1"));
  return v;
}

}  // namespace

PlanarDiagram diagram_from_source(std::string_view source) {
  std::string s(source);
  auto first = s.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && s.compare(first, 5, "cable") == 0) {
    std::string rest = s.substr(first + 5);
    std::replace(rest.begin(), rest.end(), ',', ' ');
    std::istringstream is(rest);
    int f = 0, n = 0, m = 0;
    std::string extra;
    if (!(is >> f >> n >> m) || (is >> extra)) throw ParseError("expected 'cable f,n,m', got '" + s + "'");
    return cable_unknot(f, n, m);
  }
  return parse_diagram(source);
}

PlanarDiagram Fixture::diagram() const { return diagram_from_source(source); }

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = build_fixtures();
  return all;
}

const Fixture& fixture(std::string_view name) {
  for (const auto& f : fixtures())
    if (f.name == name) return f;
  std::string known;
  for (const auto& f : fixtures()) known += (known.empty() ? "" : ", ") + f.name;
  throw ValidationError("unknown fixture '" + std::string(name) + "' (known: " + known + ")");
}

const std::vector<DiagramPair>& reidemeister_pairs() {
  static const std::vector<DiagramPair> pairs{
      {"trefoil_r2", "BR[2; 1 1 1]", "BR[2; 1 1 1 1 -1]"},
      {"braid_r3", "BR[3; 1 2 1]", "BR[3; 2 1 2]"},
      {"trefoil_unknot_r2", "BR[3; 1 1 1]", "BR[3; 1 1 1 2 -2]"},
      {"hopf_pd_vs_braid", "PD[X(1,3,2,4), X(3,1,4,2)]", "BR[2; 1 1]"},
      {"figure8_pd_vs_braid", "PD[X(4,2,5,1), X(8,6,1,5), X(6,3,7,4), X(2,7,3,8)]", "BR[3; 1 -2 1 -2]"},
  };
  return pairs;
}

}  // namespace khr
