#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "khr/arith.hpp"

namespace khr {

/// Column-major sparse matrix; each column sorted by row, no stored zeros.
template <class S>
struct SparseMatrix {
  using Entry = std::pair<int, S>;
  using Column = std::vector<Entry>;

  int rows = 0;
  int cols = 0;
  std::vector<Column> columns;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), columns(static_cast<std::size_t>(c)) {}

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns) n += c.size();
    return n;
  }
  bool is_zero() const { return nonzeros() == 0; }
};

/// a * b, or throws std::invalid_argument on a dimension mismatch.
template <class S>
SparseMatrix<S> multiply(const SparseMatrix<S>& a, const SparseMatrix<S>& b);

/// Rank over Q.
std::size_t rank(const SparseMatrix<Rational>& m);

/// Clears denominators column by column and divides out the content, giving
/// an integer matrix with the same column space over Q.
SparseMatrix<Integer> primitive_columns(const SparseMatrix<Rational>& m);

/// Exact conversion; throws ValidationError if an entry is not integral.
SparseMatrix<Integer> to_integer(const SparseMatrix<Rational>& m);

/// Smith normal form summary: rank and the invariant factors greater than one
/// (ascending, each dividing the next).
struct SmithForm {
  std::size_t rank = 0;
  std::vector<Integer> torsion;
};

/// Unit pivots are eliminated sparsely (Markowitz order); the remainder is
/// diagonalized densely with minimal-magnitude pivoting.
SmithForm smith_form(const SparseMatrix<Integer>& m);

/// Result of a left-to-right column reduction with pivot at the largest row
/// index (the persistence reduction): low[j] is the pivot row of reduced
/// column j, or -1 if it reduced to zero.
struct ColumnReduction {
  std::vector<int> low;
  std::size_t rank = 0;
};
ColumnReduction reduce_columns(SparseMatrix<Integer> m);

}  // namespace khr
