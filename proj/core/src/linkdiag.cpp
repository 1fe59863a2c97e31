#include "khr/linkdiag.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "khr/arith.hpp"
#include "union_find.hpp"

namespace khr {

namespace {

// Direction of the strand at position `pos` of a crossing: true if it enters
// the crossing there.
bool is_incoming(int pos, bool over_d_to_b) {
  switch (pos) {
    case 0: return true;
    case 2: return false;
    case 1: return !over_d_to_b;
    default: return over_d_to_b;
  }
}

int pass_through(int pos) { return (pos + 2) % 4; }

struct Occurrence {
  int crossing;
  int pos;
};

std::map<int, std::vector<Occurrence>> occurrences(const std::vector<Crossing>& xs) {
  std::map<int, std::vector<Occurrence>> occ;
  for (int c = 0; c < static_cast<int>(xs.size()); ++c)
    for (int p = 0; p < 4; ++p) occ[xs[c].labels[p]].push_back({c, p});
  for (const auto& [label, list] : occ) {
    if (list.size() != 2)
      throw ValidationError("strand label " + std::to_string(label) + " appears " +
                            std::to_string(list.size()) + " times (expected 2)");
  }
  return occ;
}

// Resolves the over-strand directions from the under-strand convention, by
// propagation along strands. Components consisting only of over-passes are
// oriented so that labels increase along the strand.
std::vector<Crossing> infer_orientation(const std::vector<std::array<int, 4>>& raw) {
  std::vector<Crossing> xs(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) xs[i].labels = raw[i];
  auto occ = occurrences(xs);

  std::vector<int> state(xs.size(), -1);  // -1 unknown, 1 d->b, 0 b->d
  auto known = [&](const Occurrence& o) { return o.pos == 0 || o.pos == 2 || state[o.crossing] >= 0; };
  auto incoming = [&](const Occurrence& o) { return is_incoming(o.pos, state[o.crossing] == 1); };

  auto propagate = [&] {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [label, list] : occ) {
        const Occurrence& a = list[0];
        const Occurrence& b = list[1];
        bool ka = known(a), kb = known(b);
        if (ka && kb) {
          if (incoming(a) == incoming(b))
            throw ValidationError("inconsistent orientation along strand " + std::to_string(label));
        } else if (ka != kb) {
          const Occurrence& fixed = ka ? a : b;
          const Occurrence& open = ka ? b : a;
          bool want_incoming = !incoming(fixed);
          // open.pos is 1 or 3; position 3 incoming <=> d->b.
          bool d_to_b = (open.pos == 3) == want_incoming;
          state[open.crossing] = d_to_b ? 1 : 0;
          changed = true;
        }
      }
    }
  };

  propagate();
  for (std::size_t c = 0; c < xs.size(); ++c) {
    if (state[c] >= 0) continue;
    int b = xs[c].labels[1], d = xs[c].labels[3];
    bool d_to_b;
    if (b == d + 1) d_to_b = true;
    else if (d == b + 1) d_to_b = false;
    else d_to_b = d > b;  // wrap-around: largest label enters
    state[c] = d_to_b ? 1 : 0;
    propagate();
  }
  for (std::size_t c = 0; c < xs.size(); ++c) xs[c].over_d_to_b = state[c] == 1;
  return xs;
}

void check_orientation(const std::vector<Crossing>& xs) {
  auto occ = occurrences(xs);
  for (const auto& [label, list] : occ) {
    bool a = is_incoming(list[0].pos, xs[list[0].crossing].over_d_to_b);
    bool b = is_incoming(list[1].pos, xs[list[1].crossing].over_d_to_b);
    if (a == b) throw ValidationError("inconsistent orientation along strand " + std::to_string(label));
  }
}

}  // namespace

PlanarDiagram PlanarDiagram::from_crossings(std::vector<std::array<int, 4>> crossings, int free_loops) {
  PlanarDiagram d;
  d.crossings_ = infer_orientation(crossings);
  d.free_loops_ = free_loops;
  d.finalize();
  return d;
}

PlanarDiagram PlanarDiagram::from_oriented(std::vector<Crossing> crossings, int free_loops) {
  PlanarDiagram d;
  d.crossings_ = std::move(crossings);
  d.free_loops_ = free_loops;
  check_orientation(d.crossings_);
  d.finalize();
  return d;
}

void PlanarDiagram::finalize() {
  if (free_loops_ < 0) throw ValidationError("negative free loop count");
  labels_.clear();
  for (const auto& x : crossings_)
    for (int l : x.labels) labels_.push_back(l);
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
  occurrences(crossings_);  // label multiplicity check

  const int nl = static_cast<int>(labels_.size());
  detail::UnionFind uf(nl);
  for (const auto& x : crossings_) {
    uf.unite(label_index(x.labels[0]), label_index(x.labels[2]));
    uf.unite(label_index(x.labels[1]), label_index(x.labels[3]));
  }
  // Components numbered by their smallest label.
  label_component_.assign(static_cast<std::size_t>(nl), -1);
  std::map<int, int> root_to_comp;
  for (int i = 0; i < nl; ++i) {
    int r = uf.find(i);
    auto [it, inserted] = root_to_comp.try_emplace(r, static_cast<int>(root_to_comp.size()));
    label_component_[static_cast<std::size_t>(i)] = it->second;
  }
  n_components_ = static_cast<int>(root_to_comp.size()) + free_loops_;

  n_plus_ = n_minus_ = 0;
  for (const auto& x : crossings_) (x.sign() > 0 ? n_plus_ : n_minus_)++;

  // Planarity: faces of the 4-valent projection graph, traced through the
  // counterclockwise rotation at each crossing, must satisfy Euler's formula
  // on every connected piece.
  const int n = crossing_count();
  if (n == 0) return;
  std::vector<std::array<Occurrence, 2>> occ_by_label(static_cast<std::size_t>(nl));
  std::vector<int> fill(static_cast<std::size_t>(nl), 0);
  detail::UnionFind pieces(n);
  for (int c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p) {
      int li = label_index(crossings_[c].labels[p]);
      occ_by_label[li][fill[li]++] = {c, p};
    }
  for (const auto& pair : occ_by_label) pieces.unite(pair[0].crossing, pair[1].crossing);
  int piece_count = 0;
  for (int c = 0; c < n; ++c) piece_count += pieces.find(c) == c;

  std::vector<char> seen(static_cast<std::size_t>(4 * n), 0);
  int faces = 0;
  for (int start = 0; start < 4 * n; ++start) {
    if (seen[start]) continue;
    ++faces;
    int dart = start;
    while (!seen[dart]) {
      seen[dart] = 1;
      int c = dart / 4, p = dart % 4;
      const auto& pair = occ_by_label[label_index(crossings_[c].labels[p])];
      const Occurrence& other = (pair[0].crossing == c && pair[0].pos == p) ? pair[1] : pair[0];
      dart = other.crossing * 4 + (other.pos + 1) % 4;
    }
  }
  if (faces != n + 2 * piece_count)
    throw ValidationError("PD code is not planar (" + std::to_string(faces) + " faces, expected " +
                          std::to_string(n + 2 * piece_count) + ")");
}

int PlanarDiagram::label_index(int label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) throw std::out_of_range("unknown strand label " + std::to_string(label));
  return static_cast<int>(it - labels_.begin());
}

int PlanarDiagram::component_of(int label) const {
  return label_component_[static_cast<std::size_t>(label_index(label))];
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (s_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  char expect_open() {
    if (accept('(')) return ')';
    if (accept('[')) return ']';
    fail("expected '(' or '['");
  }
  long integer() {
    skip_ws();
    std::size_t b = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected integer");
    return std::stol(std::string(s_.substr(b, pos_ - b)));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

PlanarDiagram parse_pd(std::string_view text) {
  Lexer lx(text);
  if (!lx.accept_word("PD")) lx.fail("expected 'PD'");
  char close = lx.expect_open();
  std::vector<std::array<int, 4>> xs;
  if (!lx.accept(close)) {
    do {
      if (!lx.accept('X')) lx.fail("expected crossing 'X(...)'");
      char xclose = lx.expect_open();
      std::array<int, 4> q{};
      for (int i = 0; i < 4; ++i) {
        if (i > 0) lx.expect(',');
        long v = lx.integer();
        q[static_cast<std::size_t>(i)] = static_cast<int>(v);
      }
      lx.expect(xclose);
      xs.push_back(q);
    } while (lx.accept(','));
    lx.expect(close);
  }
  int loops = 0;
  while (lx.accept(';') || lx.accept(',')) {
    if (!lx.accept('O')) lx.fail("expected 'O(n)'");
    char oclose = lx.expect_open();
    long v = lx.integer();
    if (v < 0) lx.fail("negative loop count");
    loops += static_cast<int>(v);
    lx.expect(oclose);
  }
  if (!lx.at_end()) lx.fail("trailing input");
  return PlanarDiagram::from_crossings(std::move(xs), loops);
}

PlanarDiagram parse_braid(std::string_view text) {
  Lexer lx(text);
  if (!lx.accept_word("BR")) lx.fail("expected 'BR'");
  char close = lx.expect_open();
  long width = lx.integer();
  if (width < 1) lx.fail("braid width must be positive");
  std::vector<int> word;
  if (lx.accept(';') || lx.accept(',')) {
    while (!lx.accept(close)) {
      lx.accept(',');
      lx.skip_ws();
      long g = lx.integer();
      word.push_back(static_cast<int>(g));
    }
  } else {
    lx.expect(close);
  }
  if (!lx.at_end()) lx.fail("trailing input");
  for (int g : word)
    if (g == 0 || std::abs(g) >= width) throw ParseError("braid generator " + std::to_string(g) + " out of range");
  return braid_closure(static_cast<int>(width), word);
}

PlanarDiagram parse_diagram(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (text.substr(i, 2) == "BR") return parse_braid(text);
  return parse_pd(text);
}

std::string to_pd_text(const PlanarDiagram& d) {
  std::ostringstream os;
  os << "PD[";
  for (std::size_t i = 0; i < d.crossings().size(); ++i) {
    const auto& l = d.crossings()[i].labels;
    if (i) os << ", ";
    os << "X(" << l[0] << ',' << l[1] << ',' << l[2] << ',' << l[3] << ')';
  }
  os << ']';
  if (d.free_loops() > 0) os << "; O(" << d.free_loops() << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// Generators and transformations

namespace {

struct BraidStep {
  int generator = 0;  // +-i, or 0 for a curl
  int curl_position = 0;
};

struct BraidBuild {
  std::vector<Crossing> crossings;
  int free_loops = 0;
  std::vector<int> initial_labels;  // per strand position, 0 if free loop
};

BraidBuild build_braid(int width, const std::vector<BraidStep>& steps) {
  BraidBuild out;
  std::vector<int> cur(static_cast<std::size_t>(width));
  std::iota(cur.begin(), cur.end(), 1);
  std::vector<char> touched(static_cast<std::size_t>(width), 0);
  int next = width + 1;
  for (const auto& st : steps) {
    if (st.generator == 0) {
      auto p = static_cast<std::size_t>(st.curl_position);
      int in = cur[p], out_label = next++, loop = next++;
      out.crossings.push_back({{in, out_label, loop, loop}, true});
      cur[p] = out_label;
      touched[p] = 1;
      continue;
    }
    auto i = static_cast<std::size_t>(std::abs(st.generator) - 1);
    int bl = cur[i], br = cur[i + 1];
    int tl = next++, tr = next++;
    if (st.generator > 0) out.crossings.push_back({{br, tr, tl, bl}, true});
    else out.crossings.push_back({{bl, br, tr, tl}, false});
    cur[i] = tl;
    cur[i + 1] = tr;
    touched[i] = touched[i + 1] = 1;
  }
  std::map<int, int> rename;
  out.initial_labels.assign(static_cast<std::size_t>(width), 0);
  for (int p = 0; p < width; ++p) {
    if (!touched[static_cast<std::size_t>(p)]) {
      ++out.free_loops;
      continue;
    }
    rename[cur[static_cast<std::size_t>(p)]] = p + 1;
    out.initial_labels[static_cast<std::size_t>(p)] = p + 1;
  }
  for (auto& x : out.crossings)
    for (int& l : x.labels) {
      auto it = rename.find(l);
      if (it != rename.end()) l = it->second;
    }
  return out;
}

}  // namespace

PlanarDiagram compact_labels(const PlanarDiagram& d) {
  const auto& xs = d.crossings();
  if (xs.empty()) return d;
  // head occurrence of each label (where it enters a crossing)
  std::map<int, Occurrence> head;
  for (int c = 0; c < static_cast<int>(xs.size()); ++c)
    for (int p = 0; p < 4; ++p)
      if (is_incoming(p, xs[c].over_d_to_b)) head[xs[c].labels[p]] = {c, p};

  std::map<int, int> rename;
  int next = 1;
  for (int label : d.labels()) {  // ascending: components in order of smallest label
    if (rename.count(label)) continue;
    int l = label;
    while (!rename.count(l)) {
      rename[l] = next++;
      Occurrence h = head.at(l);
      l = xs[h.crossing].labels[pass_through(h.pos)];
    }
  }
  std::vector<Crossing> out = xs;
  for (auto& x : out)
    for (int& l : x.labels) l = rename.at(l);
  return PlanarDiagram::from_oriented(std::move(out), d.free_loops());
}

PlanarDiagram braid_closure(int width, const std::vector<int>& word) {
  if (width < 1) throw ValidationError("braid width must be positive");
  std::vector<BraidStep> steps;
  for (int g : word) {
    if (g == 0 || std::abs(g) >= width) throw ValidationError("braid generator out of range");
    steps.push_back({g, 0});
  }
  auto b = build_braid(width, steps);
  return compact_labels(PlanarDiagram::from_oriented(std::move(b.crossings), b.free_loops));
}

int writhe(const PlanarDiagram& d) { return d.n_plus() - d.n_minus(); }

SeifertData seifert_data(const PlanarDiagram& d) {
  const auto& xs = d.crossings();
  detail::UnionFind uf(static_cast<int>(d.labels().size()));
  for (const auto& x : xs) {
    auto idx = [&](int p) { return d.label_index(x.labels[p]); };
    if (x.sign() > 0) {
      uf.unite(idx(0), idx(1));
      uf.unite(idx(2), idx(3));
    } else {
      uf.unite(idx(0), idx(3));
      uf.unite(idx(1), idx(2));
    }
  }
  int circles = d.free_loops();
  for (int i = 0; i < uf.size(); ++i) circles += uf.find(i) == i;
  return {circles, circles - d.crossing_count()};
}

PlanarDiagram sublink(const PlanarDiagram& d, const SublinkSelector& sel) {
  const int crossing_comps = d.component_count() - d.free_loops();
  for (int c : sel.kept_components)
    if (c < 0 || c >= d.component_count()) throw ValidationError("sublink selector: no component " + std::to_string(c));

  const auto& xs = d.crossings();
  detail::UnionFind uf(static_cast<int>(d.labels().size()));
  std::vector<Crossing> kept;
  for (int i = 0; i < d.crossing_count(); ++i) {
    const auto& x = xs[static_cast<std::size_t>(i)];
    bool under = sel.kept_components.count(d.under_component(i)) > 0;
    bool over = sel.kept_components.count(d.over_component(i)) > 0;
    if (under && over) kept.push_back(x);
    else if (under) uf.unite(d.label_index(x.labels[0]), d.label_index(x.labels[2]));
    else if (over) uf.unite(d.label_index(x.labels[1]), d.label_index(x.labels[3]));
  }
  for (auto& x : kept)
    for (int& l : x.labels) l = d.labels()[static_cast<std::size_t>(uf.find(d.label_index(l)))];

  std::set<int> comps_with_crossings;
  for (const auto& x : kept) {
    comps_with_crossings.insert(d.component_of(x.labels[0]));
    comps_with_crossings.insert(d.component_of(x.labels[1]));
  }
  int loops = 0;
  for (int c : sel.kept_components)
    if (c >= crossing_comps || !comps_with_crossings.count(c)) ++loops;
  return compact_labels(PlanarDiagram::from_oriented(std::move(kept), loops));
}

PlanarDiagram mirror(const PlanarDiagram& d) {
  std::vector<Crossing> out;
  out.reserve(d.crossings().size());
  for (const auto& x : d.crossings()) {
    const auto& [a, b, c, e] = x.labels;
    if (x.over_d_to_b) out.push_back({{e, a, b, c}, false});
    else out.push_back({{b, c, e, a}, true});
  }
  return PlanarDiagram::from_oriented(std::move(out), d.free_loops());
}

PlanarDiagram disjoint_union(const PlanarDiagram& a, const PlanarDiagram& b) {
  int offset = a.labels().empty() ? 0 : a.labels().back();
  std::vector<Crossing> out = a.crossings();
  for (Crossing x : b.crossings()) {
    for (int& l : x.labels) l += offset;
    out.push_back(x);
  }
  return PlanarDiagram::from_oriented(std::move(out), a.free_loops() + b.free_loops());
}

std::vector<PlanarDiagram> components(const PlanarDiagram& d) {
  std::vector<PlanarDiagram> out;
  for (int c = 0; c < d.component_count(); ++c) out.push_back(sublink(d, {{c}}));
  return out;
}

PlanarDiagram reverse_components(const PlanarDiagram& d, const std::set<int>& comps) {
  std::vector<Crossing> out;
  for (int i = 0; i < d.crossing_count(); ++i) {
    Crossing x = d.crossings()[static_cast<std::size_t>(i)];
    bool ur = comps.count(d.under_component(i)) > 0;
    bool orv = comps.count(d.over_component(i)) > 0;
    if (ur) x.labels = {x.labels[2], x.labels[3], x.labels[0], x.labels[1]};
    x.over_d_to_b = x.over_d_to_b != ur != orv;
    out.push_back(x);
  }
  return PlanarDiagram::from_oriented(std::move(out), d.free_loops());
}

PlanarDiagram add_kink(const PlanarDiagram& d, int comp, int sign) {
  if (comp < 0 || comp >= d.component_count()) throw ValidationError("add_kink: no component " + std::to_string(comp));
  std::vector<Crossing> xs = d.crossings();
  int next = d.labels().empty() ? 1 : d.labels().back() + 1;
  const int crossing_comps = d.component_count() - d.free_loops();
  int loops = d.free_loops();
  if (comp >= crossing_comps) {
    int a = next++, b = next++;
    if (sign > 0) xs.push_back({{a, a, b, b}, true});
    else xs.push_back({{a, b, b, a}, false});
    --loops;
  } else {
    int label = -1;
    for (int l : d.labels())
      if (d.component_of(l) == comp) {
        label = l;
        break;
      }
    int renamed = next++, loop = next++;
    bool done = false;
    for (auto& x : xs) {
      for (int p = 0; p < 4 && !done; ++p)
        if (x.labels[p] == label && is_incoming(p, x.over_d_to_b)) {
          x.labels[p] = renamed;
          done = true;
        }
      if (done) break;
    }
    if (sign > 0) xs.push_back({{label, renamed, loop, loop}, true});
    else xs.push_back({{label, loop, loop, renamed}, false});
  }
  return compact_labels(PlanarDiagram::from_oriented(std::move(xs), loops));
}

PlanarDiagram cable_unknot(int f, int n, int m) {
  if (f < 0) throw ValidationError("cable framing must be non-negative");
  if (n < 0 || m < 0 || n + m < 1) throw ValidationError("cable needs n+m >= 1 strands");
  const int s = n + m;
  if (f == 0) return PlanarDiagram::from_oriented({}, s);
  std::vector<BraidStep> steps;
  for (int rep = 0; rep < s * f; ++rep)
    for (int i = 1; i < s; ++i) steps.push_back({i, 0});
  for (int p = 0; p < s; ++p)
    for (int k = 0; k < f; ++k) steps.push_back({0, p});
  auto b = build_braid(s, steps);
  PlanarDiagram d = PlanarDiagram::from_oriented(std::move(b.crossings), b.free_loops);
  std::set<int> reversed;
  for (int p = n; p < s; ++p) reversed.insert(d.component_of(b.initial_labels[static_cast<std::size_t>(p)]));
  return compact_labels(reverse_components(d, reversed));
}

}  // namespace khr
