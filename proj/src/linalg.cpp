#include "regrade/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "regrade/error.hpp"

namespace regrade {

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::size_t rref(Mat& m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  for (const auto& row : m)
    if (row.size() != cols) throw ShapeError("ragged matrix");
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < m.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.size() && m[sel][col].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[pivot_row], m[sel]);
    Cyclotomic inv = m[pivot_row][col].inverse();
    for (std::size_t j = col; j < cols; ++j) m[pivot_row][j] = m[pivot_row][j] * inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == pivot_row || m[i][col].is_zero()) continue;
      Cyclotomic f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - f * m[pivot_row][j];
    }
    ++pivot_row;
  }
  m.resize(pivot_row);
  return pivot_row;
}

std::size_t rank_of(Mat m) { return rref(m); }

Cyclotomic det(Mat m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw ShapeError("determinant of a non-square matrix");
  if (n == 0) return Cyclotomic(1);
  bool negate = false;
  Cyclotomic result(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m[sel][col].is_zero()) ++sel;
    if (sel == n) return Cyclotomic(0);
    if (sel != col) {
      std::swap(m[sel], m[col]);
      negate = !negate;
    }
    const Cyclotomic& pivot = m[col][col];
    Cyclotomic inv = pivot.inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m[i][col].is_zero()) continue;
      Cyclotomic f = m[i][col] * inv;
      for (std::size_t j = col; j < n; ++j) m[i][j] = m[i][j] - f * m[col][j];
    }
    result *= pivot;
  }
  return negate ? -result : result;
}

Mat nullspace(const Mat& m, std::size_t cols) {
  Mat a = m;
  for (const auto& row : a)
    if (row.size() != cols) throw ShapeError("nullspace column count mismatch");
  rref(a);
  std::vector<long> pivot_of_col(cols, -1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t c = 0;
    while (c < cols && a[i][c].is_zero()) ++c;
    pivot_of_col[c] = static_cast<long>(i);
  }
  Mat basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (pivot_of_col[free_col] >= 0) continue;
    Vec v(cols, Cyclotomic(0));
    v[free_col] = Cyclotomic(1);
    for (std::size_t c = 0; c < cols; ++c) {
      if (pivot_of_col[c] < 0) continue;
      v[c] = -a[static_cast<std::size_t>(pivot_of_col[c])][free_col];
    }
    basis.push_back(std::move(v));
  }
  rref(basis);
  return basis;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  if (a.size() != b.size()) throw ShapeError("solve: rhs length mismatch");
  if (a.empty()) return Vec{};
  const std::size_t cols = a[0].size();
  Mat aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  rref(aug);
  Vec x(cols, Cyclotomic(0));
  for (const auto& row : aug) {
    std::size_t c = 0;
    while (c < row.size() && row[c].is_zero()) ++c;
    if (c == cols) return std::nullopt;  // 0 = nonzero
    x[c] = row[cols];
  }
  return x;
}

bool in_span(const Mat& rref_basis, Vec v) {
  for (const auto& row : rref_basis) {
    std::size_t c = 0;
    while (c < row.size() && row[c].is_zero()) ++c;
    if (c == row.size()) continue;
    if (!v[c].is_zero()) {
      Cyclotomic f = v[c];
      for (std::size_t j = c; j < v.size(); ++j) v[j] = v[j] - f * row[j];
    }
  }
  return vec_is_zero(v);
}

Mat span_rref(Mat rows) {
  rref(rows);
  return rows;
}

bool same_subspace(const Mat& a_rref, const Mat& b_rref) {
  if (a_rref.size() != b_rref.size()) return false;
  for (std::size_t i = 0; i < a_rref.size(); ++i) {
    if (a_rref[i].size() != b_rref[i].size()) return false;
    for (std::size_t j = 0; j < a_rref[i].size(); ++j)
      if (a_rref[i][j] != b_rref[i][j]) return false;
  }
  return true;
}

std::string mat_key(const Mat& m, long conductor, std::size_t cols) {
  std::ostringstream os;
  os << m.size() << 'x' << cols << ';';
  for (const auto& row : m)
    for (const auto& e : row) os << e.embedded(conductor).key() << ';';
  return os.str();
}

bool IncrementalRank::insert(Vec v) {
  if (v.size() != dim_) throw ShapeError("rank accumulator dimension mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (v[p].is_zero()) continue;
    Cyclotomic f = v[p];
    for (std::size_t j = p; j < dim_; ++j) v[j] = v[j] - f * rows_[i][j];
  }
  std::size_t c = 0;
  while (c < dim_ && v[c].is_zero()) ++c;
  if (c == dim_) return false;
  Cyclotomic inv = v[c].inverse();
  for (std::size_t j = c; j < dim_; ++j) v[j] = v[j] * inv;
  // keep rows ordered by pivot column
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < c) ++pos;
  pivots_.insert(pivots_.begin() + static_cast<long>(pos), c);
  rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(v));
  return true;
}

}  // namespace regrade
