#pragma once

// Oriented, blackboard-framed link diagrams in planar-diagram (PD) notation.
//
// A crossing X(a,b,c,d) lists its four incident strand labels
// counterclockwise, starting at the incoming under-strand; a -> c is the
// under-pass and the over-pass runs either d -> b (positive crossing) or
// b -> d (negative crossing).

#include <array>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace khr {

struct Crossing {
  std::array<int, 4> labels{};
  /// Over strand enters at position 3 and leaves at position 1.
  bool over_d_to_b = true;

  int sign() const { return over_d_to_b ? +1 : -1; }
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct SeifertData {
  int circles = 0;  ///< k
  int chi = 0;      ///< k - n
};

/// Components to keep when passing to a sublink.
struct SublinkSelector {
  std::set<int> kept_components;
};

class PlanarDiagram {
 public:
  /// The empty diagram (no components).
  PlanarDiagram() = default;

  /// Builds a diagram whose over-strand directions must be inferred from the
  /// under-strand convention. Throws ParseError / ValidationError.
  static PlanarDiagram from_crossings(std::vector<std::array<int, 4>> crossings, int free_loops = 0);

  /// Builds a diagram with explicitly given over-strand directions; these are
  /// checked for consistency.
  static PlanarDiagram from_oriented(std::vector<Crossing> crossings, int free_loops = 0);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int free_loops() const { return free_loops_; }
  int n_plus() const { return n_plus_; }
  int n_minus() const { return n_minus_; }
  int component_count() const { return n_components_; }

  /// Component index of a strand label (labels as they appear in crossings()).
  int component_of(int label) const;
  /// Component of the under strand / over strand at crossing i.
  int under_component(int i) const { return component_of(crossings_[static_cast<std::size_t>(i)].labels[0]); }
  int over_component(int i) const { return component_of(crossings_[static_cast<std::size_t>(i)].labels[1]); }

  /// Sorted list of distinct strand labels.
  const std::vector<int>& labels() const { return labels_; }
  /// Dense index of a label in labels().
  int label_index(int label) const;

  friend bool operator==(const PlanarDiagram&, const PlanarDiagram&) = default;

 private:
  void finalize();

  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
  int n_plus_ = 0;
  int n_minus_ = 0;
  int n_components_ = 0;
  std::vector<int> labels_;
  std::vector<int> label_component_;  // indexed like labels_
};

/// Parses `PD[X(a,b,c,d), ...]` optionally followed by `; O(n)` and braid
/// words `BR[width; s1 -s2 ...]`.
PlanarDiagram parse_pd(std::string_view text);
PlanarDiagram parse_braid(std::string_view text);
/// Dispatches on the leading keyword (PD / BR).
PlanarDiagram parse_diagram(std::string_view text);

/// Canonical PD text; parse_pd(to_pd_text(D)) == D.
std::string to_pd_text(const PlanarDiagram& d);

/// Closure of a braid word on `width` strands; generator +i is sigma_i
/// (strand i passes over strand i+1), -i its inverse. All strands run upward.
PlanarDiagram braid_closure(int width, const std::vector<int>& word);

int writhe(const PlanarDiagram& d);
SeifertData seifert_data(const PlanarDiagram& d);
PlanarDiagram sublink(const PlanarDiagram& d, const SublinkSelector& sel);
PlanarDiagram mirror(const PlanarDiagram& d);
PlanarDiagram disjoint_union(const PlanarDiagram& a, const PlanarDiagram& b);
/// One single-component sub-diagram per component, in component order.
std::vector<PlanarDiagram> components(const PlanarDiagram& d);
/// Reverses the orientation of the given components.
PlanarDiagram reverse_components(const PlanarDiagram& d, const std::set<int>& comps);
/// Inserts a Reidemeister-I curl of the given sign on component `comp`.
PlanarDiagram add_kink(const PlanarDiagram& d, int comp, int sign = +1);
/// Relabels strands 1..2n in order of first appearance.
PlanarDiagram compact_labels(const PlanarDiagram& d);

/// Blackboard cable L^f_{n,m} of the f-framed unknot: n strands one way, m the
/// other. f*(n+m)^2 crossings, writhe f*(n-m)^2.
PlanarDiagram cable_unknot(int f, int n, int m);

}  // namespace khr
