#include "khr/homology.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "khr/parallel.hpp"

namespace khr {

std::map<int, std::size_t> BigradedHomology::dimensions_by_t() const {
  std::map<int, std::size_t> out;
  for (const auto& [b, r] : free) out[b.t] += r;
  return out;
}

std::size_t BigradedHomology::total_rank() const {
  std::size_t n = 0;
  for (const auto& [b, r] : free) n += r;
  return n;
}

std::map<Bidegree, std::size_t> BigradedHomology::free_in(Grading g) const {
  if (g == Grading::Fr) return free;
  std::map<Bidegree, std::size_t> out;
  for (const auto& [b, r] : free) out[fr_to_std(b, rank, writhe)] += r;
  return out;
}

int torsion_std_placement(int t_fr, int writhe) { return writhe - t_fr + 1; }

namespace {

struct Block {
  int t;
  int q;
  std::vector<int> cols;  // indices in C^t
};

// Rows of C^{t+1} with a given q, as a position map.
std::map<int, std::vector<int>> indices_by_q(const std::vector<BasisElement>& basis) {
  std::map<int, std::vector<int>> out;
  for (int i = 0; i < static_cast<int>(basis.size()); ++i) out[basis[i].q].push_back(i);
  return out;
}

void require_homogeneous(const GradedChainComplex<Rational>& c) {
  for (int t = c.t_min; t < c.t_max(); ++t) {
    const auto& src = c.basis_at(t);
    const auto& dst = c.basis_at(t + 1);
    const auto& m = c.differential[static_cast<std::size_t>(t - c.t_min)];
    for (int j = 0; j < m.cols; ++j)
      for (const auto& [r, v] : m.columns[j])
        if (dst[r].q != src[j].q) throw ValidationError("differential is not q-homogeneous (deformed complex?)");
  }
}

SparseMatrix<Rational> block_matrix(const SparseMatrix<Rational>& m, const std::vector<int>& cols,
                                    const std::vector<int>& rows) {
  std::map<int, int> row_pos;
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) row_pos[rows[i]] = i;
  SparseMatrix<Rational> out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
    for (const auto& [r, v] : m.columns[cols[j]]) {
      auto it = row_pos.find(r);
      if (it != row_pos.end()) out.columns[j].emplace_back(it->second, v);
    }
    std::sort(out.columns[j].begin(), out.columns[j].end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return out;
}

BigradedHomology bigraded(const GradedChainComplex<Rational>& c, bool integral) {
  require_homogeneous(c);
  BigradedHomology h;
  h.rank = c.rank;
  h.writhe = c.writhe;
  h.integral = integral;

  // One job per (t, q) block of each differential C^t -> C^{t+1}.
  std::vector<Block> blocks;
  std::vector<std::map<int, std::vector<int>>> by_q;
  for (int t = c.t_min; t <= c.t_max(); ++t) by_q.push_back(indices_by_q(c.basis_at(t)));
  for (int t = c.t_min; t < c.t_max(); ++t)
    for (const auto& [q, cols] : by_q[static_cast<std::size_t>(t - c.t_min)]) blocks.push_back({t, q, cols});

  std::vector<SmithForm> forms(blocks.size());
  parallel_for(blocks.size(), [&](std::size_t i) {
    const auto& b = blocks[i];
    const auto& next = by_q[static_cast<std::size_t>(b.t + 1 - c.t_min)];
    auto it = next.find(b.q);
    if (it == next.end()) return;
    auto m = block_matrix(c.differential[static_cast<std::size_t>(b.t - c.t_min)], b.cols, it->second);
    if (integral) forms[i] = smith_form(to_integer(m));
    else forms[i].rank = rank(m);
  });

  std::map<Bidegree, const SmithForm*> outgoing, incoming;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    outgoing[{blocks[i].q, blocks[i].t}] = &forms[i];
    incoming[{blocks[i].q, blocks[i].t + 1}] = &forms[i];
  }
  for (int t = c.t_min; t <= c.t_max(); ++t) {
    for (const auto& [q, idx] : by_q[static_cast<std::size_t>(t - c.t_min)]) {
      std::size_t out_rank = 0, in_rank = 0;
      if (auto it = outgoing.find({q, t}); it != outgoing.end()) out_rank = it->second->rank;
      if (auto it = incoming.find({q, t}); it != incoming.end()) {
        in_rank = it->second->rank;
        if (!it->second->torsion.empty()) h.torsion.push_back({q, t, it->second->torsion});
      }
      std::size_t r = idx.size() - out_rank - in_rank;
      if (r > 0) h.free[{q, t}] = r;
    }
  }
  std::sort(h.torsion.begin(), h.torsion.end(),
            [](const auto& a, const auto& b) { return std::tie(a.t, a.q) < std::tie(b.t, b.q); });
  return h;
}

}  // namespace

BigradedHomology rational_homology(const GradedChainComplex<Rational>& c) { return bigraded(c, false); }

BigradedHomology integral_homology(const GradedChainComplex<Rational>& c) { return bigraded(c, true); }

// ---------------------------------------------------------------------------

std::size_t FilteredHomology::dimension_at(int t) const {
  for (const auto& d : degrees)
    if (d.t == t) return d.dimension;
  return 0;
}

std::size_t FilteredHomology::total_dimension() const {
  std::size_t n = 0;
  for (const auto& d : degrees) n += d.dimension;
  return n;
}

std::size_t FilteredHomology::filtration_dimension(int t, int p) const {
  for (const auto& d : degrees) {
    if (d.t != t) continue;
    std::size_t dim = 0;
    for (const auto& [level, v] : d.jumps)
      if (level <= p) dim = v;
    return dim;
  }
  return 0;
}

std::map<int, std::size_t> FilteredHomology::dimensions_by_t() const {
  std::map<int, std::size_t> out;
  for (const auto& d : degrees) out[d.t] = d.dimension;
  return out;
}

namespace {

// Persistence reduction of one differential with rows and columns sorted by
// ascending q. Ranks of column prefixes {q <= p} and row suffixes {q > p}
// are read off the pivot structure.
struct FilteredReduction {
  std::vector<int> col_q;        // q of each reduced nonzero column
  std::vector<int> low_q;        // q of its pivot row
  std::size_t rank = 0;
};

FilteredReduction reduce_filtered(const SparseMatrix<Rational>& m, const std::vector<BasisElement>& src,
                                  const std::vector<BasisElement>& dst) {
  std::vector<int> col_order(static_cast<std::size_t>(m.cols)), row_order(static_cast<std::size_t>(m.rows));
  std::iota(col_order.begin(), col_order.end(), 0);
  std::iota(row_order.begin(), row_order.end(), 0);
  std::stable_sort(col_order.begin(), col_order.end(), [&](int a, int b) { return src[a].q < src[b].q; });
  std::stable_sort(row_order.begin(), row_order.end(), [&](int a, int b) { return dst[a].q < dst[b].q; });
  std::vector<int> row_rank(static_cast<std::size_t>(m.rows));
  for (int i = 0; i < m.rows; ++i) row_rank[row_order[i]] = i;

  SparseMatrix<Rational> permuted(m.rows, m.cols);
  for (int j = 0; j < m.cols; ++j) {
    auto& col = permuted.columns[j];
    for (const auto& [r, v] : m.columns[col_order[j]]) col.emplace_back(row_rank[r], v);
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  ColumnReduction red = reduce_columns(primitive_columns(permuted));
  FilteredReduction out;
  out.rank = red.rank;
  for (int j = 0; j < m.cols; ++j) {
    if (red.low[j] < 0) continue;
    out.col_q.push_back(src[col_order[j]].q);
    out.low_q.push_back(dst[row_order[red.low[j]]].q);
  }
  std::sort(out.col_q.begin(), out.col_q.end());
  std::sort(out.low_q.begin(), out.low_q.end());
  return out;
}

std::size_t count_le(const std::vector<int>& sorted, int p) {
  return static_cast<std::size_t>(std::upper_bound(sorted.begin(), sorted.end(), p) - sorted.begin());
}

// Working copy of a complex with both row and column access to every
// differential, for in-place cancellation.
class Eliminator {
 public:
  explicit Eliminator(const GradedChainComplex<Rational>& c) : c_(c) {
    const std::size_t nd = c.differential.size();
    cols_.resize(nd);
    rows_.resize(nd);
    for (std::size_t k = 0; k < nd; ++k) {
      const auto& m = c.differential[k];
      cols_[k].resize(static_cast<std::size_t>(m.cols));
      rows_[k].resize(static_cast<std::size_t>(m.rows));
      for (int j = 0; j < m.cols; ++j)
        for (const auto& [r, v] : m.columns[j]) {
          cols_[k][j].emplace(r, v);
          rows_[k][r].emplace(j, v);
        }
    }
    for (const auto& b : c.basis) alive_.emplace_back(b.size(), 1);
  }

  void run() {
    for (std::size_t k = 0; k < cols_.size(); ++k) {
      const auto& src = c_.basis[k];
      const auto& dst = c_.basis[k + 1];
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t x = 0; x < cols_[k].size(); ++x) {
          int best = -1;
          for (const auto& [y, v] : cols_[k][x])
            if (dst[y].q == src[x].q && (best < 0 || rows_[k][y].size() < rows_[k][best].size())) best = y;
          if (best < 0) continue;
          cancel(k, static_cast<int>(x), best);
          changed = true;
        }
      }
    }
  }

  GradedChainComplex<Rational> result() const {
    GradedChainComplex<Rational> out;
    out.rank = c_.rank;
    out.writhe = c_.writhe;
    out.mode = c_.mode;
    out.t_min = c_.t_min;
    std::vector<std::vector<int>> index(c_.basis.size());
    for (std::size_t t = 0; t < c_.basis.size(); ++t) {
      out.basis.emplace_back();
      index[t].assign(c_.basis[t].size(), -1);
      for (std::size_t i = 0; i < c_.basis[t].size(); ++i)
        if (alive_[t][i]) {
          index[t][i] = static_cast<int>(out.basis[t].size());
          out.basis[t].push_back(c_.basis[t][i]);
        }
    }
    for (std::size_t k = 0; k < cols_.size(); ++k) {
      SparseMatrix<Rational> m(static_cast<int>(out.basis[k + 1].size()), static_cast<int>(out.basis[k].size()));
      for (std::size_t x = 0; x < cols_[k].size(); ++x) {
        if (!alive_[k][x]) continue;
        auto& col = m.columns[static_cast<std::size_t>(index[k][x])];
        for (const auto& [y, v] : cols_[k][x]) col.emplace_back(index[k + 1][y], v);
      }
      out.differential.push_back(std::move(m));
    }
    return out;
  }

 private:
  void set(std::size_t k, int row, int col, const Rational& v) {
    if (is_zero(v)) {
      cols_[k][col].erase(row);
      rows_[k][row].erase(col);
    } else {
      cols_[k][col][row] = v;
      rows_[k][row][col] = v;
    }
  }

  // Removes x in degree k and y = d-target in degree k+1, replacing the
  // remaining block of d by ε - γ c^{-1} δ.
  void cancel(std::size_t k, int x, int y) {
    const Rational c = cols_[k][x].at(y);
    const auto col_x = cols_[k][x];
    const auto row_y = rows_[k][y];
    for (const auto& [xp, a] : row_y) {
      if (xp == x) continue;
      Rational f = a / c;
      for (const auto& [z, b] : col_x) {
        if (z == y) continue;
        auto it = cols_[k][xp].find(z);
        Rational cur = it == cols_[k][xp].end() ? Rational(0) : it->second;
        set(k, z, xp, cur - f * b);
      }
    }
    for (const auto& [z, b] : col_x) rows_[k][z].erase(x);
    cols_[k][x].clear();
    for (const auto& [xp, a] : row_y) cols_[k][xp].erase(y);
    rows_[k][y].clear();
    if (k > 0) {
      for (const auto& [w, v] : rows_[k - 1][x]) cols_[k - 1][w].erase(x);
      rows_[k - 1][x].clear();
    }
    if (k + 1 < cols_.size()) {
      for (const auto& [z, v] : cols_[k + 1][y]) rows_[k + 1][z].erase(y);
      cols_[k + 1][y].clear();
    }
    alive_[k][x] = 0;
    alive_[k + 1][y] = 0;
  }

  const GradedChainComplex<Rational>& c_;
  std::vector<std::vector<std::map<int, Rational>>> cols_, rows_;
  std::vector<std::vector<char>> alive_;
};

void require_filtered(const GradedChainComplex<Rational>& c) {
  for (int t = c.t_min; t < c.t_max(); ++t) {
    const auto& src = c.basis_at(t);
    const auto& dst = c.basis_at(t + 1);
    const auto& m = c.differential[static_cast<std::size_t>(t - c.t_min)];
    for (int j = 0; j < m.cols; ++j)
      for (const auto& [r, v] : m.columns[j])
        if (dst[r].q > src[j].q)
          throw ValidationError("differential raises q-degree; complex is not filtered by F_p = {q <= p}");
  }
}

}  // namespace

GradedChainComplex<Rational> cancel_equal_degree(const GradedChainComplex<Rational>& c) {
  Eliminator e(c);
  e.run();
  return e.result();
}

FilteredHomology filtered_homology(const GradedChainComplex<Rational>& input) {
  require_filtered(input);
  const GradedChainComplex<Rational> c = cancel_equal_degree(input);

  const std::size_t nd = c.differential.size();
  std::vector<FilteredReduction> reds(nd);
  parallel_for(nd, [&](std::size_t k) {
    const int t = c.t_min + static_cast<int>(k);
    reds[k] = reduce_filtered(c.differential[k], c.basis_at(t), c.basis_at(t + 1));
  });

  FilteredHomology h;
  h.rank = c.rank;
  h.writhe = c.writhe;
  for (int t = c.t_min; t <= c.t_max(); ++t) {
    const auto& basis = c.basis_at(t);
    const auto k = static_cast<std::size_t>(t - c.t_min);
    const FilteredReduction* out = k < nd ? &reds[k] : nullptr;
    const FilteredReduction* in = (k >= 1 && k - 1 < nd) ? &reds[k - 1] : nullptr;

    std::vector<int> qs;
    for (const auto& b : basis) qs.push_back(b.q);
    std::sort(qs.begin(), qs.end());

    FilteredHomology::Degree deg;
    deg.t = t;
    std::size_t previous = 0;
    std::vector<int> levels = qs;
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    for (int p : levels) {
      std::size_t cycles = count_le(qs, p) - (out ? count_le(out->col_q, p) : 0);
      std::size_t boundaries = in ? count_le(in->low_q, p) : 0;  // rank D - rank(rows q > p)
      std::size_t g = cycles - boundaries;
      if (g > previous) {
        deg.jumps.emplace_back(p, g);
        previous = g;
      }
    }
    deg.dimension = previous;
    if (deg.dimension > 0) h.degrees.push_back(std::move(deg));
  }
  return h;
}

std::optional<int> q_min(const FilteredHomology& h, int t0) {
  for (const auto& d : h.degrees)
    if (d.t == t0 && !d.jumps.empty()) return d.jumps.front().first;
  return std::nullopt;
}

GradedChainComplex<Rational> deformed_complex(const PlanarDiagram& d, const DeformationMultiset& sigma) {
  return cube(d, unknot_algebra(sigma.total(), sigma));
}

std::optional<NontorsionWitness> nontorsion_witness(const PlanarDiagram& d, int t0,
                                                    const std::vector<DeformationMultiset>& candidates) {
  for (const auto& sigma : candidates)
    if (!sigma.all_simple())
      throw ValidationError("witness candidates must have all multiplicities 1, got {" + sigma.str() + "}");
  for (const auto& sigma : candidates) {
    FilteredHomology h = filtered_homology(deformed_complex(d, sigma));
    if (auto q = q_min(h, t0)) return NontorsionWitness{sigma, *q};
  }
  return std::nullopt;
}

std::vector<DeformationMultiset> default_witness_candidates(int rank) {
  std::vector<DeformationMultiset> out{DeformationMultiset::consecutive(rank)};
  std::mt19937 rng(20240917u);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  while (out.size() < 4) {
    std::vector<DeformationEntry> entries;
    while (static_cast<int>(entries.size()) < rank) {
      Rational v(num(rng), den(rng));
      v.canonicalize();
      bool fresh = std::none_of(entries.begin(), entries.end(), [&](const auto& e) { return e.value == v; });
      if (fresh) entries.push_back({v, 1});
    }
    out.emplace_back(std::move(entries));
  }
  return out;
}

}  // namespace khr
