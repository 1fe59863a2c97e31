#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace oracle {

std::size_t rank(DenseQ m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

std::vector<std::vector<Rational>> null_space(const DenseQ& input) {
  if (input.empty()) return {};
  DenseQ m = input;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::vector<int> pivot_col_of_row;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (std::size_t j = 0; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col_of_row.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col_of_row) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i) v[static_cast<std::size_t>(pivot_col_of_row[i])] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

Integer determinant(DenseZ m) {
  const std::size_t n = m.size();
  DenseQ q(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i][j] = Rational(m[i][j]);
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && q[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(q[p], q[c]);
      det = -det;
    }
    det *= q[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      Rational f = q[i][c] / q[c][c];
      for (std::size_t j = c; j < n; ++j) q[i][j] -= f * q[c][j];
    }
  }
  return det.get_num();
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Integer> determinantal_invariant_factors(const DenseZ& m) {
  if (m.empty() || m[0].empty()) return {};
  const std::size_t rows = m.size(), cols = m[0].size();
  std::vector<Integer> divisors{1};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    Integer g = 0;
    for_each_subset(rows, k, [&](const std::vector<std::size_t>& rs) {
      for_each_subset(cols, k, [&](const std::vector<std::size_t>& cs) {
        DenseZ minor(k, std::vector<Integer>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor[i][j] = m[rs[i]][cs[j]];
        Integer d = determinant(minor);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      });
    });
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<Integer> factors;
  for (std::size_t k = 1; k < divisors.size(); ++k) factors.push_back(divisors[k] / divisors[k - 1]);
  return factors;
}

std::vector<Integer> dense_smith_diagonal(DenseZ a) {
  std::vector<Integer> diag;
  if (a.empty() || a[0].empty()) return diag;
  const std::size_t rows = a.size(), cols = a[0].size();
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    while (true) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = k; i < rows; ++i)
        for (std::size_t j = k; j < cols; ++j)
          if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) return diag;
      std::swap(a[k], a[pr]);
      for (auto& row : a) std::swap(row[k], row[pc]);
      bool done = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        Integer q = a[i][k] / a[k][k];
        for (std::size_t j = k; j < cols; ++j) a[i][j] -= q * a[k][j];
        if (a[i][k] != 0) done = false;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        Integer q = a[k][j] / a[k][k];
        for (std::size_t i = k; i < rows; ++i) a[i][j] -= q * a[i][k];
        if (a[k][j] != 0) done = false;
      }
      if (!done) continue;
      // Enforce divisibility of the remaining block by the pivot.
      bool divides = true;
      for (std::size_t i = k + 1; i < rows && divides; ++i)
        for (std::size_t j = k + 1; j < cols; ++j)
          if (a[i][j] % a[k][k] != 0) {
            for (std::size_t c = k; c < cols; ++c) a[k][c] += a[i][c];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(a[k][k]));
  }
  return diag;
}

// ---------------------------------------------------------------------------

namespace {

struct State {
  int circles = 0;
  std::vector<int> circle_of_label;  // dense label index -> circle
};

State resolve(const khr::PlanarDiagram& d, unsigned mask) {
  const auto& labels = d.labels();
  const int n = static_cast<int>(labels.size());
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  for (int i = 0; i < d.crossing_count(); ++i) {
    const auto& l = d.crossings()[static_cast<std::size_t>(i)].labels;
    auto idx = [&](int p) { return d.label_index(l[p]); };
    if (mask >> i & 1) {
      unite(idx(0), idx(3));
      unite(idx(1), idx(2));
    } else {
      unite(idx(0), idx(1));
      unite(idx(2), idx(3));
    }
  }
  State s;
  std::map<int, int> root_index;
  s.circle_of_label.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    auto it = root_index.find(r);
    if (it == root_index.end()) it = root_index.emplace(r, s.circles++).first;
    s.circle_of_label[i] = it->second;
  }
  s.circles += d.free_loops();
  return s;
}

struct Cube {
  int n = 0, n_plus = 0, n_minus = 0;
  std::vector<State> states;
  // generator list per t (BN), each (mask, assignment)
  std::map<int, std::vector<std::pair<unsigned, unsigned>>> gens;
  std::map<int, std::map<std::pair<unsigned, unsigned>, std::size_t>> index;
};

int popcount(unsigned x) { return __builtin_popcount(x); }

Cube build(const khr::PlanarDiagram& d) {
  Cube c;
  c.n = d.crossing_count();
  c.n_plus = d.n_plus();
  c.n_minus = d.n_minus();
  for (unsigned s = 0; s < (1u << c.n); ++s) {
    c.states.push_back(resolve(d, s));
    int t = popcount(s) - c.n_minus;
    for (unsigned g = 0; g < (1u << c.states.back().circles); ++g) {
      c.index[t][{s, g}] = c.gens[t].size();
      c.gens[t].push_back({s, g});
    }
  }
  return c;
}

int q_degree(const Cube& c, unsigned s, unsigned g) {
  int k = c.states[s].circles;
  int xs = popcount(g);
  return (k - xs) - xs + popcount(s) + c.n_plus - 2 * c.n_minus;
}

// Image of generator g at state s under the edge map to s | (1 << i), as
// (generator, coefficient) pairs; bit j of a generator set means circle j
// carries X.
std::vector<std::pair<unsigned, Rational>> edge_map(const khr::PlanarDiagram& d, const Cube& c, unsigned s, int i,
                                                    unsigned g, const Rational& e1, const Rational& e2) {
  const State& from = c.states[s];
  const State& to = c.states[s | (1u << i)];
  const auto& l = d.crossings()[static_cast<std::size_t>(i)].labels;
  const int nl = static_cast<int>(d.labels().size());
  // Free loops occupy the last circle indices in both states.
  auto map_circle = [&](int circle) {
    if (circle >= from.circles - d.free_loops()) return circle - from.circles + to.circles;
    for (int x = 0; x < nl; ++x)
      if (from.circle_of_label[x] == circle) return to.circle_of_label[x];
    return -1;
  };
  std::vector<std::pair<unsigned, Rational>> out;
  if (to.circles < from.circles) {
    int a = from.circle_of_label[d.label_index(l[0])];
    int b = from.circle_of_label[d.label_index(l[2])];
    unsigned base = 0;
    for (int j = 0; j < from.circles; ++j)
      if (j != a && j != b && (g >> j & 1)) base |= 1u << map_circle(j);
    int target = map_circle(a);
    int xs = (g >> a & 1) + (g >> b & 1);
    if (xs == 0) out.push_back({base, 1});
    else if (xs == 1) out.push_back({base | 1u << target, 1});
    else {
      out.push_back({base | 1u << target, e1});
      out.push_back({base, -e2});
    }
  } else {
    int a = from.circle_of_label[d.label_index(l[0])];
    int c1 = to.circle_of_label[d.label_index(l[0])];
    int c2 = to.circle_of_label[d.label_index(l[1])];
    unsigned base = 0;
    for (int j = 0; j < from.circles; ++j)
      if (j != a && (g >> j & 1)) base |= 1u << map_circle(j);
    if (!(g >> a & 1)) {
      out.push_back({base | 1u << c2, 1});
      out.push_back({base | 1u << c1, 1});
      out.push_back({base, -e1});
    } else {
      out.push_back({base | 1u << c1 | 1u << c2, 1});
      out.push_back({base, -e2});
    }
  }
  return out;
}

// Dense differential C^t -> C^{t+1} in BN t-grading.
DenseQ differential(const khr::PlanarDiagram& d, const Cube& c, int t, const Rational& e1, const Rational& e2) {
  const auto& src = c.gens.count(t) ? c.gens.at(t) : std::vector<std::pair<unsigned, unsigned>>{};
  const auto& dst = c.gens.count(t + 1) ? c.gens.at(t + 1) : std::vector<std::pair<unsigned, unsigned>>{};
  DenseQ m(dst.size(), std::vector<Rational>(src.size(), 0));
  for (std::size_t col = 0; col < src.size(); ++col) {
    auto [s, g] = src[col];
    for (int i = 0; i < c.n; ++i) {
      if (s >> i & 1) continue;
      int before = popcount(s & ((1u << i) - 1));
      Rational sign = before % 2 ? -1 : 1;
      for (const auto& [h, coeff] : edge_map(d, c, s, i, g, e1, e2))
        m[c.index.at(t + 1).at({s | (1u << i), h})][col] += sign * coeff;
    }
  }
  return m;
}

}  // namespace

KhResult bar_natan_homology(const khr::PlanarDiagram& d, bool integral) {
  Cube c = build(d);
  KhResult res;
  std::map<int, DenseQ> diffs;
  for (const auto& [t, g] : c.gens) diffs[t] = differential(d, c, t, 0, 0);
  // Per (q, t): rank of the outgoing and incoming q-blocks.
  std::map<std::pair<int, int>, std::size_t> out_rank, in_rank;
  for (const auto& [t, gens] : c.gens) {
    if (!c.gens.count(t + 1)) continue;
    const auto& next = c.gens.at(t + 1);
    std::map<int, std::vector<std::size_t>> cols_by_q, rows_by_q;
    for (std::size_t j = 0; j < gens.size(); ++j) cols_by_q[q_degree(c, gens[j].first, gens[j].second)].push_back(j);
    for (std::size_t i = 0; i < next.size(); ++i) rows_by_q[q_degree(c, next[i].first, next[i].second)].push_back(i);
    for (const auto& [q, cols] : cols_by_q) {
      auto it = rows_by_q.find(q);
      if (it == rows_by_q.end()) continue;
      DenseQ block(it->second.size(), std::vector<Rational>(cols.size()));
      DenseZ zblock(it->second.size(), std::vector<Integer>(cols.size()));
      for (std::size_t i = 0; i < it->second.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
          block[i][j] = diffs[t][it->second[i]][cols[j]];
          zblock[i][j] = block[i][j].get_num();
        }
      std::size_t r = rank(block);
      out_rank[{q, t}] = r;
      in_rank[{q, t + 1}] = r;
      if (integral) {
        std::vector<Integer> tors;
        for (const auto& x : dense_smith_diagonal(zblock))
          if (x > 1) tors.push_back(x);
        std::sort(tors.begin(), tors.end());
        if (!tors.empty()) res.torsion[{q, t + 1}] = tors;
      }
    }
  }
  for (const auto& [t, gens] : c.gens) {
    std::map<int, std::size_t> dims;
    for (const auto& [s, g] : gens) ++dims[q_degree(c, s, g)];
    for (const auto& [q, n] : dims) {
      std::size_t r = n - out_rank[{q, t}] - in_rank[{q, t}];
      if (r > 0) res.free[{q, t}] = r;
    }
  }
  return res;
}

std::map<int, std::size_t> bar_natan_deformed_dimensions(const khr::PlanarDiagram& d, const Rational& a,
                                                         const Rational& b) {
  Cube c = build(d);
  Rational e1 = a + b, e2 = a * b;
  std::map<int, std::size_t> ranks;
  for (const auto& [t, g] : c.gens) ranks[t] = rank(differential(d, c, t, e1, e2));
  std::map<int, std::size_t> out;
  for (const auto& [t, g] : c.gens) {
    std::size_t in = ranks.count(t - 1) ? ranks[t - 1] : 0;
    std::size_t dim = g.size() - ranks[t] - in;
    if (dim > 0) out[t] = dim;
  }
  return out;
}

std::size_t filtered_dimension(const khr::GradedChainComplex<Rational>& c, int t, int p) {
  if (!c.has_degree(t)) return 0;
  const auto& basis = c.basis_at(t);
  auto to_dense = [](const khr::SparseMatrix<Rational>& m) {
    DenseQ out(static_cast<std::size_t>(m.rows), std::vector<Rational>(static_cast<std::size_t>(m.cols), 0));
    for (int j = 0; j < m.cols; ++j)
      for (const auto& [r, v] : m.columns[j]) out[r][j] = v;
    return out;
  };
  DenseQ out = to_dense(c.differential_at(t));
  DenseQ in = to_dense(c.differential_at(t - 1));
  std::vector<std::size_t> low;
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (basis[j].q <= p) low.push_back(j);
  if (low.empty()) return 0;
  DenseQ restricted(out.size(), std::vector<Rational>(low.size()));
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < low.size(); ++j) restricted[i][j] = out[i][low[j]];
  if (out.empty()) restricted.assign(1, std::vector<Rational>(low.size(), 0));
  // Rows of `stack` are vectors in C^t: cycles of F_p, then boundaries.
  DenseQ stack, boundaries;
  for (const auto& v : null_space(restricted)) {
    std::vector<Rational> full(basis.size(), 0);
    for (std::size_t j = 0; j < low.size(); ++j) full[low[j]] = v[j];
    stack.push_back(full);
  }
  if (!in.empty())
    for (std::size_t j = 0; j < in[0].size(); ++j) {
      std::vector<Rational> col(basis.size());
      for (std::size_t i = 0; i < basis.size(); ++i) col[i] = in[i][j];
      boundaries.push_back(col);
      stack.push_back(col);
    }
  return rank(stack) - rank(boundaries);
}

std::vector<Rational> hermite_idempotent(const std::vector<std::pair<Rational, int>>& roots, std::size_t i) {
  int n = 0;
  for (const auto& [v, m] : roots) n += m;
  const auto N = static_cast<std::size_t>(n);
  DenseQ sys;
  std::vector<Rational> rhs;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const auto& [lambda, mult] = roots[k];
    for (int j = 0; j < mult; ++j) {
      std::vector<Rational> row(N, 0);
      for (int e = j; e < n; ++e) {
        Rational coeff = 1;
        for (int f = 0; f < j; ++f) coeff *= e - f;
        row[static_cast<std::size_t>(e)] = coeff * khr::pow(lambda, static_cast<unsigned>(e - j));
      }
      sys.push_back(row);
      rhs.push_back(k == i && j == 0 ? 1 : 0);
    }
  }
  // Gauss-Jordan on [sys | rhs].
  for (std::size_t r = 0; r < N; ++r) sys[r].push_back(rhs[r]);
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t p = c;
    while (sys[p][c] == 0) ++p;
    std::swap(sys[p], sys[c]);
    Rational inv = 1 / sys[c][c];
    for (auto& x : sys[c]) x *= inv;
    for (std::size_t r = 0; r < N; ++r) {
      if (r == c || sys[r][c] == 0) continue;
      Rational f = sys[r][c];
      for (std::size_t j = 0; j <= N; ++j) sys[r][j] -= f * sys[c][j];
    }
  }
  std::vector<Rational> out(N);
  for (std::size_t r = 0; r < N; ++r) out[r] = sys[r][N];
  return out;
}

}  // namespace oracle
