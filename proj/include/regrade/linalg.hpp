#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regrade/cyclotomic.hpp"

namespace regrade {

using Vec = std::vector<Cyclotomic>;
using Mat = std::vector<Vec>;

bool vec_is_zero(const Vec& v);

// In-place reduced row echelon form with the fixed pivot order (leftmost
// column, topmost row). Zero rows are dropped, so the result is the unique
// canonical basis of the row space. Returns the rank.
std::size_t rref(Mat& m);

std::size_t rank_of(Mat m);

// Exact determinant of a square matrix by field Gaussian elimination.
Cyclotomic det(Mat m);

// Canonical (rref) basis of {x : m x^T = 0}, rows of length cols.
Mat nullspace(const Mat& m, std::size_t cols);

// One solution of A x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Mat& a, const Vec& b);

// Membership of v in the row space of an rref basis.
bool in_span(const Mat& rref_basis, Vec v);

Mat span_rref(Mat rows);
bool same_subspace(const Mat& a_rref, const Mat& b_rref);

// Serialization of an rref matrix with every entry embedded into the given
// conductor, so value-equal subspaces map to identical keys.
std::string mat_key(const Mat& m, long conductor, std::size_t cols);

// Incremental rank accumulator: inserts vectors one at a time, keeping a row
// echelon basis. Insertion order does not affect the final rank.
class IncrementalRank {
 public:
  explicit IncrementalRank(std::size_t dim) : dim_(dim) {}
  // Returns true when v enlarged the span.
  bool insert(Vec v);
  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t dim_;
  std::vector<std::size_t> pivots_;  // pivot column per stored row
  Mat rows_;
};

}  // namespace regrade
