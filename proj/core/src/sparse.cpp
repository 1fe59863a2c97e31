#include "khr/sparse.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "khr/polynomial.hpp"

namespace khr {

template <class S>
SparseMatrix<S> multiply(const SparseMatrix<S>& a, const SparseMatrix<S>& b) {
  if (a.cols != b.rows) throw std::invalid_argument("sparse multiply: dimension mismatch");
  SparseMatrix<S> out(a.rows, b.cols);
  for (int j = 0; j < b.cols; ++j) {
    std::map<int, S> acc;
    for (const auto& [k, bkj] : b.columns[j])
      for (const auto& [i, aik] : a.columns[k]) {
        S term = aik * bkj;
        acc[i] += term;
      }
    for (auto& [i, v] : acc)
      if (!is_zero(v)) out.columns[j].emplace_back(i, std::move(v));
  }
  return out;
}

template SparseMatrix<Rational> multiply(const SparseMatrix<Rational>&, const SparseMatrix<Rational>&);
template SparseMatrix<Integer> multiply(const SparseMatrix<Integer>&, const SparseMatrix<Integer>&);
template SparseMatrix<SymPoly> multiply(const SparseMatrix<SymPoly>&, const SparseMatrix<SymPoly>&);

namespace {

Integer content(const SparseMatrix<Integer>::Column& col) {
  Integer g = 0;
  for (const auto& [r, v] : col) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(SparseMatrix<Integer>::Column& col) {
  Integer g = content(col);
  if (g > 1)
    for (auto& [r, v] : col) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

SparseMatrix<Integer> primitive_columns(const SparseMatrix<Rational>& m) {
  SparseMatrix<Integer> out(m.rows, m.cols);
  for (int j = 0; j < m.cols; ++j) {
    Integer l = 1;
    for (const auto& [r, v] : m.columns[j]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    auto& col = out.columns[j];
    col.reserve(m.columns[j].size());
    for (const auto& [r, v] : m.columns[j]) {
      Integer x = v.get_num() * (l / v.get_den());
      col.emplace_back(r, std::move(x));
    }
    make_primitive(col);
  }
  return out;
}

SparseMatrix<Integer> to_integer(const SparseMatrix<Rational>& m) {
  SparseMatrix<Integer> out(m.rows, m.cols);
  for (int j = 0; j < m.cols; ++j)
    for (const auto& [r, v] : m.columns[j]) {
      if (!is_integral(v)) throw ValidationError("matrix entry " + v.get_str() + " is not an integer");
      out.columns[j].emplace_back(r, v.get_num());
    }
  return out;
}

ColumnReduction reduce_columns(SparseMatrix<Integer> m) {
  ColumnReduction out;
  out.low.assign(static_cast<std::size_t>(m.cols), -1);
  std::vector<int> pivot_col(static_cast<std::size_t>(m.rows), -1);
  SparseMatrix<Integer>::Column scratch;
  for (int j = 0; j < m.cols; ++j) {
    auto& col = m.columns[j];
    make_primitive(col);
    while (!col.empty()) {
      const int low = col.back().first;
      const int p = pivot_col[low];
      if (p < 0) break;
      const auto& pcol = m.columns[p];
      // col <- a*col - b*pcol with a, b chosen to cancel the pivot entry.
      Integer g;
      mpz_gcd(g.get_mpz_t(), col.back().second.get_mpz_t(), pcol.back().second.get_mpz_t());
      Integer a = pcol.back().second / g;
      Integer b = col.back().second / g;
      scratch.clear();
      std::size_t x = 0, y = 0;
      while (x < col.size() || y < pcol.size()) {
        if (y == pcol.size() || (x < col.size() && col[x].first < pcol[y].first)) {
          scratch.emplace_back(col[x].first, a * col[x].second);
          ++x;
        } else if (x == col.size() || pcol[y].first < col[x].first) {
          scratch.emplace_back(pcol[y].first, -b * pcol[y].second);
          ++y;
        } else {
          Integer v = a * col[x].second - b * pcol[y].second;
          if (sgn(v) != 0) scratch.emplace_back(col[x].first, std::move(v));
          ++x;
          ++y;
        }
      }
      col.swap(scratch);
      make_primitive(col);
    }
    if (!col.empty()) {
      out.low[j] = col.back().first;
      pivot_col[col.back().first] = j;
      ++out.rank;
    }
  }
  return out;
}

std::size_t rank(const SparseMatrix<Rational>& m) { return reduce_columns(primitive_columns(m)).rank; }

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

std::vector<Integer> normalize_diagonal(std::vector<Integer> d) {
  for (auto& x : d) x = abs(x);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      Integer g, l;
      mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      d[i] = g;
      d[j] = l;
    }
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<Integer> dense_diagonal(std::vector<std::vector<Integer>> a) {
  std::vector<Integer> diag;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t top = 0;
  while (top < rows && top < cols) {
    // Minimal nonzero magnitude in the active block.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = top; i < rows; ++i)
      for (std::size_t j = top; j < cols; ++j)
        if (sgn(a[i][j]) != 0 && (pr == rows || mpz_cmpabs(a[i][j].get_mpz_t(), a[pr][pc].get_mpz_t()) < 0)) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(a[top], a[pr]);
    for (auto& row : a) std::swap(row[top], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      const Integer& p = a[top][top];
      for (std::size_t i = top + 1; i < rows; ++i) {
        if (sgn(a[i][top]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][top].get_mpz_t(), p.get_mpz_t());
        for (std::size_t j = top; j < cols; ++j)
          if (sgn(a[top][j]) != 0) a[i][j] -= q * a[top][j];
        if (sgn(a[i][top]) != 0) clean = false;
      }
      for (std::size_t j = top + 1; j < cols; ++j) {
        if (sgn(a[top][j]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[top][j].get_mpz_t(), p.get_mpz_t());
        for (std::size_t i = top; i < rows; ++i)
          if (sgn(a[i][top]) != 0) a[i][j] -= q * a[i][top];
        if (sgn(a[top][j]) != 0) clean = false;
      }
      if (!clean) {
        // Bring the smallest remaining entry of the pivot row/column forward.
        std::size_t br = top, bc = top;
        for (std::size_t i = top; i < rows; ++i)
          if (sgn(a[i][top]) != 0 && mpz_cmpabs(a[i][top].get_mpz_t(), a[br][bc].get_mpz_t()) < 0) {
            br = i;
            bc = top;
          }
        for (std::size_t j = top; j < cols; ++j)
          if (sgn(a[top][j]) != 0 && mpz_cmpabs(a[top][j].get_mpz_t(), a[br][bc].get_mpz_t()) < 0) {
            br = top;
            bc = j;
          }
        std::swap(a[top], a[br]);
        for (auto& row : a) std::swap(row[top], row[bc]);
      }
    }
    diag.push_back(a[top][top]);
    ++top;
  }
  return diag;
}

}  // namespace

SmithForm smith_form(const SparseMatrix<Integer>& m) {
  SmithForm out;
  std::vector<std::map<int, Integer>> cols(static_cast<std::size_t>(m.cols));
  std::vector<std::set<int>> rows(static_cast<std::size_t>(m.rows));
  for (int j = 0; j < m.cols; ++j)
    for (const auto& [r, v] : m.columns[j]) {
      cols[j].emplace(r, v);
      rows[r].insert(j);
    }
  std::vector<char> col_alive(static_cast<std::size_t>(m.cols), 1);

  // Unit-pivot elimination. Each pass picks, among unit entries, the one with
  // the smallest Markowitz cost (row_count-1)*(col_count-1).
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<int> order;
    for (int j = 0; j < m.cols; ++j)
      if (col_alive[j] && !cols[j].empty()) order.push_back(j);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return cols[a].size() < cols[b].size(); });
    for (int c : order) {
      if (!col_alive[c] || cols[c].empty()) continue;
      int best_row = -1;
      std::size_t best_cost = 0;
      for (const auto& [r, v] : cols[c]) {
        if (mpz_cmpabs_ui(v.get_mpz_t(), 1) != 0) continue;
        std::size_t cost = (rows[r].size() - 1) * (cols[c].size() - 1);
        if (best_row < 0 || cost < best_cost) {
          best_row = r;
          best_cost = cost;
        }
      }
      if (best_row < 0) continue;
      const int r = best_row;
      const Integer pivot = cols[c].at(r);  // ±1
      // Eliminate row r from every other column: col_k -= (a_rk * pivot) col_c.
      std::vector<int> others(rows[r].begin(), rows[r].end());
      for (int k : others) {
        if (k == c) continue;
        Integer f = cols[k].at(r) * pivot;
        for (const auto& [i, v] : cols[c]) {
          auto it = cols[k].find(i);
          Integer nv = (it == cols[k].end() ? Integer(0) : it->second) - f * v;
          if (sgn(nv) == 0) {
            if (it != cols[k].end()) {
              cols[k].erase(it);
              rows[i].erase(k);
            }
          } else if (it == cols[k].end()) {
            cols[k].emplace(i, std::move(nv));
            rows[i].insert(k);
          } else {
            it->second = std::move(nv);
          }
        }
      }
      for (const auto& [i, v] : cols[c]) rows[i].erase(c);
      cols[c].clear();
      col_alive[c] = 0;
      ++out.rank;
      progress = true;
    }
  }

  // Dense remainder.
  std::vector<int> live_cols, live_rows;
  for (int j = 0; j < m.cols; ++j)
    if (col_alive[j] && !cols[j].empty()) live_cols.push_back(j);
  for (int i = 0; i < m.rows; ++i)
    if (!rows[i].empty()) live_rows.push_back(i);
  if (live_cols.empty()) return out;
  std::map<int, std::size_t> row_pos;
  for (std::size_t i = 0; i < live_rows.size(); ++i) row_pos[live_rows[i]] = i;
  std::vector<std::vector<Integer>> dense(live_rows.size(), std::vector<Integer>(live_cols.size()));
  for (std::size_t j = 0; j < live_cols.size(); ++j)
    for (const auto& [r, v] : cols[live_cols[j]]) dense[row_pos[r]][j] = v;
  for (const auto& d : normalize_diagonal(dense_diagonal(std::move(dense)))) {
    ++out.rank;
    if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

}  // namespace khr
