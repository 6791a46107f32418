#include "qhr/sparse_matrix.hpp"

#include <algorithm>

#include "qhr/errors.hpp"

namespace qhr {

void SparseMatrix::set(int r, int c, const Rational& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw Error("matrix index out of bounds");
  if (v == 0)
    entries_.erase({r, c});
  else
    entries_[{r, c}] = v;
}

void SparseMatrix::add(int r, int c, const Rational& v) {
  set(r, c, get(r, c) + v);
}

Rational SparseMatrix::get(int r, int c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Rational(0) : it->second;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (const auto& [rc, v] : entries_) t.set(rc.second, rc.first, v);
  return t;
}

SparseMatrix SparseMatrix::stacked(const SparseMatrix& other) const {
  if (cols_ != other.cols_) throw Error("stack: column count mismatch");
  SparseMatrix s(rows_ + other.rows_, cols_);
  for (const auto& [rc, v] : entries_) s.set(rc.first, rc.second, v);
  for (const auto& [rc, v] : other.entries_)
    s.set(rows_ + rc.first, rc.second, v);
  return s;
}

SparseMatrix SparseMatrix::row_subset(const std::vector<bool>& keep) const {
  std::vector<int> remap(rows_, -1);
  int n = 0;
  for (int i = 0; i < rows_; ++i)
    if (keep[i]) remap[i] = n++;
  SparseMatrix s(n, cols_);
  for (const auto& [rc, v] : entries_)
    if (remap[rc.first] >= 0) s.set(remap[rc.first], rc.second, v);
  return s;
}

SparseMatrix SparseMatrix::column_prefix(int n_cols) const {
  SparseMatrix s(rows_, n_cols);
  for (const auto& [rc, v] : entries_)
    if (rc.second < n_cols) s.set(rc.first, rc.second, v);
  return s;
}

namespace {

using SparseVec = std::map<int, Rational>;

// Reduces v against the echelon basis (pivot row index -> vector with a
// leading 1 at that index). Returns the reduced vector.
SparseVec reduce(SparseVec v, const std::map<int, SparseVec>& basis) {
  while (!v.empty()) {
    const int lead = v.begin()->first;
    auto it = basis.find(lead);
    if (it == basis.end()) break;
    const Rational coef = v.begin()->second;
    for (const auto& [idx, val] : it->second) {
      auto vit = v.find(idx);
      Rational nv = (vit == v.end() ? Rational(0) : vit->second) - coef * val;
      if (nv == 0)
        v.erase(idx);
      else
        v[idx] = nv;
    }
  }
  return v;
}

void insert_pivot(SparseVec v, std::map<int, SparseVec>& basis) {
  const int lead = v.begin()->first;
  const Rational inv = Rational(1) / v.begin()->second;
  for (auto& [idx, val] : v) val *= inv;
  basis.emplace(lead, std::move(v));
}

std::vector<SparseVec> columns_of(const SparseMatrix& m) {
  std::vector<SparseVec> cols(m.cols());
  for (const auto& [rc, v] : m.entries()) cols[rc.second][rc.first] = v;
  return cols;
}

}  // namespace

std::vector<int> prefix_column_ranks(const SparseMatrix& m,
                                     const std::vector<int>& prefixes) {
  auto cols = columns_of(m);
  std::map<int, SparseVec> basis;
  std::vector<int> out;
  out.reserve(prefixes.size());
  int next_col = 0;
  for (int p : prefixes) {
    for (; next_col < p && next_col < m.cols(); ++next_col) {
      SparseVec r = reduce(std::move(cols[next_col]), basis);
      if (!r.empty()) insert_pivot(std::move(r), basis);
    }
    out.push_back(static_cast<int>(basis.size()));
  }
  return out;
}

int rank(const SparseMatrix& m) {
  return prefix_column_ranks(m, {m.cols()}).front();
}

int kernel_dimension(const SparseMatrix& m) { return m.cols() - rank(m); }

int quotient_dimension(int ambient_dim, const SparseMatrix& numerator_span,
                       const SparseMatrix& denominator_span) {
  if (numerator_span.cols() != ambient_dim ||
      denominator_span.cols() != ambient_dim)
    throw Error("quotient_dimension: ambient dimension mismatch");
  const int rn = rank(numerator_span);
  const int rd = rank(denominator_span);
  if (rank(numerator_span.stacked(denominator_span)) != rn)
    throw ContainmentViolation(
        "denominator span not contained in numerator span");
  return rn - rd;
}

std::vector<std::vector<Rational>> nullspace_basis(const SparseMatrix& m) {
  const int rows = m.rows(), cols = m.cols();
  if (cols > 64) throw Error("nullspace_basis: dense routine, cols > 64");
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols, 0));
  for (const auto& [rc, v] : m.entries()) a[rc.first][rc.second] = v;

  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    const Rational inv = Rational(1) / a[r][c];
    for (int j = 0; j < cols; ++j) a[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (int j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rational> v(cols, 0);
    v[c] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qhr
