#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qhr/rational.hpp"

namespace qhr {

// Finitely supported (row, col) -> Rational table. No stored zeros.
class SparseMatrix {
 public:
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void set(int r, int c, const Rational& v);
  void add(int r, int c, const Rational& v);
  Rational get(int r, int c) const;

  const std::map<std::pair<int, int>, Rational>& entries() const {
    return entries_;
  }

  SparseMatrix transpose() const;

  // Vertical stack: this on top of other (same cols).
  SparseMatrix stacked(const SparseMatrix& other) const;

  // Rows with index in [0, rows) whose index satisfies keep[i] == true.
  SparseMatrix row_subset(const std::vector<bool>& keep) const;
  SparseMatrix column_prefix(int n_cols) const;

 private:
  int rows_;
  int cols_;
  std::map<std::pair<int, int>, Rational> entries_;
};

// Deterministic exact rank over the rationals.
int rank(const SparseMatrix& m);

int kernel_dimension(const SparseMatrix& m);

// dim(row span of numerator / row span of denominator); throws
// ContainmentViolation when the denominator span is not contained in the
// numerator span.
int quotient_dimension(int ambient_dim, const SparseMatrix& numerator_span,
                       const SparseMatrix& denominator_span);

// rank of the submatrix made of the first p columns, for each p in
// prefixes (ascending). One elimination pass shared across all prefixes.
std::vector<int> prefix_column_ranks(const SparseMatrix& m,
                                     const std::vector<int>& prefixes);

// Exact rational nullspace basis (small dense problems only).
std::vector<std::vector<Rational>> nullspace_basis(const SparseMatrix& m);

}  // namespace qhr
