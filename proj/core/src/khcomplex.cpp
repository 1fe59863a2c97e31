#include "khr/khcomplex.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "khr/parallel.hpp"
#include "union_find.hpp"

namespace khr {

Bidegree regrade_fr(Bidegree s, int rank, int w) { return {s.q - rank * w, w - s.t}; }
Bidegree fr_to_std(Bidegree f, int rank, int w) { return {f.q + rank * w, w - f.t}; }
Bidegree framing_shift(int rank, int df) { return {-rank * df, df}; }

std::string to_string(Grading g) { return g == Grading::Fr ? "fr" : "std"; }

Grading parse_grading(const std::string& s) {
  if (s == "fr") return Grading::Fr;
  if (s == "std") return Grading::Std;
  throw ParseError("grading must be 'fr' or 'std', got '" + s + "'");
}

template <class S>
const std::vector<BasisElement>& GradedChainComplex<S>::basis_at(int t) const {
  static const std::vector<BasisElement> empty;
  if (!has_degree(t)) return empty;
  return basis[static_cast<std::size_t>(t - t_min)];
}

template <class S>
SparseMatrix<S> GradedChainComplex<S>::differential_at(int t) const {
  if (has_degree(t) && has_degree(t + 1)) return differential[static_cast<std::size_t>(t - t_min)];
  return SparseMatrix<S>(static_cast<int>(basis_at(t + 1).size()), static_cast<int>(basis_at(t).size()));
}

template <class S>
std::size_t GradedChainComplex<S>::total_dimension() const {
  std::size_t n = 0;
  for (const auto& b : basis) n += b.size();
  return n;
}

namespace {

constexpr int kMaxCrossings = 24;

// Circles of one resolution: labels are dense indices 0..L-1, free loops are
// appended after the label circles.
struct Resolution {
  int circles = 0;
  int label_circles = 0;
  std::vector<int> circle_of_label;
};

Resolution resolve(const PlanarDiagram& d, std::uint64_t vertex) {
  const auto& xs = d.crossings();
  const int nl = static_cast<int>(d.labels().size());
  detail::UnionFind uf(nl);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    auto idx = [&](int p) { return d.label_index(xs[i].labels[static_cast<std::size_t>(p)]); };
    if ((vertex >> i) & 1u) {
      uf.unite(idx(0), idx(1));
      uf.unite(idx(2), idx(3));
    } else {
      uf.unite(idx(0), idx(3));
      uf.unite(idx(1), idx(2));
    }
  }
  Resolution r;
  r.circle_of_label.assign(static_cast<std::size_t>(nl), -1);
  std::vector<int> root_id(static_cast<std::size_t>(nl), -1);
  for (int i = 0; i < nl; ++i) {
    int root = uf.find(i);
    if (root_id[root] < 0) root_id[root] = r.label_circles++;
    r.circle_of_label[i] = root_id[root];
  }
  r.circles = r.label_circles + d.free_loops();
  return r;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

template <class S>
GradedChainComplex<S> cube(const PlanarDiagram& d, const FrobeniusAlgebra<S>& A) {
  const int n = d.crossing_count();
  const int N = A.rank;
  if (N >= 3 && n > 0)
    throw UnsupportedError("cube complexes with crossings are implemented for N = 1, 2 only (got N = " +
                           std::to_string(N) + ")");
  if (n > kMaxCrossings) throw UnsupportedError("diagram has too many crossings for the cube engine");

  GradedChainComplex<S> C;
  C.rank = N;
  C.writhe = writhe(d);
  C.mode = A.mode;

  const auto& xs = d.crossings();
  std::uint64_t oriented_vertex = 0;
  for (int i = 0; i < n; ++i)
    if (xs[static_cast<std::size_t>(i)].sign() > 0) oriented_vertex |= std::uint64_t{1} << i;

  // Vertices contributing to the complex, grouped by t = |v| - n_minus.
  std::vector<std::uint64_t> vertices;
  if (N == 1) {
    vertices.push_back(oriented_vertex);
  } else {
    const std::uint64_t count = std::uint64_t{1} << n;
    vertices.resize(count);
    for (std::uint64_t v = 0; v < count; ++v) vertices[v] = v;
    std::stable_sort(vertices.begin(), vertices.end(),
                     [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
  }

  std::vector<Resolution> res(vertices.size());
  parallel_for(vertices.size(), [&](std::size_t i) { res[i] = resolve(d, vertices[i]); });

  const int t_lo = std::popcount(vertices.front()) - d.n_minus();
  const int t_hi = std::popcount(vertices.back()) - d.n_minus();
  C.t_min = t_lo;
  C.basis.resize(static_cast<std::size_t>(t_hi - t_lo + 1));

  // Offsets of each vertex inside its t-group.
  std::vector<std::size_t> vertex_slot(N == 1 ? 0 : vertices.size());
  std::vector<std::uint64_t> offset(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::uint64_t v = vertices[i];
    const int t = std::popcount(v) - d.n_minus();
    auto& group = C.basis[static_cast<std::size_t>(t - t_lo)];
    offset[i] = group.size();
    if (N != 1) vertex_slot[v] = i;
    const std::uint64_t dim = ipow(static_cast<std::uint64_t>(N), res[i].circles);
    for (std::uint64_t m = 0; m < dim; ++m) {
      int q = -t;
      std::uint64_t rest = m;
      for (int c = 0; c < res[i].circles; ++c) {
        q += A.degree(static_cast<int>(rest % static_cast<std::uint64_t>(N)));
        rest /= static_cast<std::uint64_t>(N);
      }
      group.push_back({v, m, q});
    }
  }

  if (N == 1 || n == 0) return C;

  C.differential.reserve(C.basis.size() - 1);
  for (std::size_t k = 0; k + 1 < C.basis.size(); ++k)
    C.differential.emplace_back(static_cast<int>(C.basis[k + 1].size()), static_cast<int>(C.basis[k].size()));

  const auto un = static_cast<std::uint64_t>(N);
  parallel_for(vertices.size(), [&](std::size_t vi) {
    const std::uint64_t v = vertices[vi];
    const Resolution& src = res[vi];
    const int t = std::popcount(v) - d.n_minus();
    if (t == t_hi) return;
    auto& mat = C.differential[static_cast<std::size_t>(t - t_lo)];
    const std::uint64_t dim = ipow(un, src.circles);
    std::vector<int> digits(static_cast<std::size_t>(src.circles));
    std::vector<std::uint64_t> place;  // N^j for target circles

    for (int i = 0; i < n; ++i) {
      if ((v >> i) & 1u) continue;
      const std::uint64_t w = v | (std::uint64_t{1} << i);
      const std::size_t wi = vertex_slot[w];
      const Resolution& dst = res[wi];
      const bool negative_sign = std::popcount(v & ((std::uint64_t{1} << i) - 1)) % 2 == 1;
      const auto& lab = xs[static_cast<std::size_t>(i)].labels;
      const int cs0 = src.circle_of_label[d.label_index(lab[0])];
      const int cs1 = src.circle_of_label[d.label_index(lab[1])];
      const int ct0 = dst.circle_of_label[d.label_index(lab[0])];
      const int ct1 = dst.circle_of_label[d.label_index(lab[2])];
      const bool merge = cs0 != cs1;
      if (merge == (ct0 != ct1) || (merge ? dst.circles != src.circles - 1 : dst.circles != src.circles + 1))
        throw ValidationError("resolution change at crossing " + std::to_string(i) +
                              " is neither a merge nor a split (non-planar diagram?)");

      // Where every untouched source circle lands.
      std::vector<int> circle_map(static_cast<std::size_t>(src.circles), -1);
      for (std::size_t l = 0; l < src.circle_of_label.size(); ++l)
        circle_map[src.circle_of_label[l]] = dst.circle_of_label[l];
      for (int f = 0; f < d.free_loops(); ++f) circle_map[src.label_circles + f] = dst.label_circles + f;
      place.assign(static_cast<std::size_t>(dst.circles), 1);
      for (int j = 1; j < dst.circles; ++j) place[j] = place[j - 1] * un;

      for (std::uint64_t m = 0; m < dim; ++m) {
        std::uint64_t rest = m;
        for (int c = 0; c < src.circles; ++c) {
          digits[c] = static_cast<int>(rest % un);
          rest /= un;
        }
        std::uint64_t base = 0;
        for (int c = 0; c < src.circles; ++c) {
          if (c == cs0 || c == cs1) continue;
          base += place[circle_map[c]] * static_cast<std::uint64_t>(digits[c]);
        }
        auto& column = mat.columns[offset[vi] + m];
        const std::size_t row0 = offset[wi];
        if (merge) {
          const auto& prod = A.mult[digits[cs0]][digits[cs1]];
          for (int c = 0; c < N; ++c) {
            if (is_zero(prod[c])) continue;
            S val = negative_sign ? S(-prod[c]) : prod[c];
            column.emplace_back(static_cast<int>(row0 + base + place[ct0] * static_cast<std::uint64_t>(c)), val);
          }
        } else {
          const auto& co = A.comult[digits[cs0]];
          for (int b = 0; b < N; ++b)
            for (int c = 0; c < N; ++c) {
              if (is_zero(co[b][c])) continue;
              S val = negative_sign ? S(-co[b][c]) : co[b][c];
              std::uint64_t row = row0 + base + place[ct0] * static_cast<std::uint64_t>(b) +
                                  place[ct1] * static_cast<std::uint64_t>(c);
              column.emplace_back(static_cast<int>(row), val);
            }
        }
      }
    }
    for (std::uint64_t m = 0; m < dim; ++m) {
      auto& column = mat.columns[offset[vi] + m];
      std::sort(column.begin(), column.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
  });
  return C;
}

GradedChainComplex<Rational> specialize(const GradedChainComplex<SymPoly>& c, std::span<const Rational> values) {
  GradedChainComplex<Rational> out;
  out.rank = c.rank;
  out.writhe = c.writhe;
  bool all_zero = std::all_of(values.begin(), values.end(), [](const Rational& r) { return is_zero(r); });
  out.mode = all_zero ? CoefficientMode::Integers : CoefficientMode::Deformed;
  out.t_min = c.t_min;
  out.basis = c.basis;
  for (const auto& m : c.differential) {
    SparseMatrix<Rational> r(m.rows, m.cols);
    for (int j = 0; j < m.cols; ++j)
      for (const auto& [row, val] : m.columns[j]) {
        Rational x = val.specialize(values);
        if (!is_zero(x)) r.columns[j].emplace_back(row, x);
      }
    out.differential.push_back(std::move(r));
  }
  return out;
}

template <class S>
bool differential_squares_to_zero(const GradedChainComplex<S>& c) {
  for (std::size_t k = 0; k + 1 < c.differential.size(); ++k)
    if (!multiply(c.differential[k + 1], c.differential[k]).is_zero()) return false;
  return true;
}

std::vector<std::pair<int, long>> graded_euler_characteristic(const GradedChainComplex<Rational>& c) {
  std::map<int, long> chi;
  for (int t = c.t_min; t <= c.t_max(); ++t)
    for (const auto& b : c.basis_at(t)) chi[b.q] += (t % 2 == 0) ? 1 : -1;
  std::vector<std::pair<int, long>> out;
  for (const auto& [q, v] : chi)
    if (v != 0) out.emplace_back(q, v);
  return out;
}

template struct GradedChainComplex<Rational>;
template struct GradedChainComplex<SymPoly>;
template GradedChainComplex<Rational> cube(const PlanarDiagram&, const FrobeniusAlgebra<Rational>&);
template GradedChainComplex<SymPoly> cube(const PlanarDiagram&, const FrobeniusAlgebra<SymPoly>&);
template bool differential_squares_to_zero(const GradedChainComplex<Rational>&);
template bool differential_squares_to_zero(const GradedChainComplex<SymPoly>&);

}  // namespace khr
