#pragma once
#include "afc/exactlin/matrix.hpp"

#include <optional>
#include <vector>

namespace afc::exactlin {

struct RrefResult {
  Mat r;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row, ascending
};

// Reduced row echelon form with the first-nonzero-column pivot rule. The
// result depends only on the row span, which makes every basis produced
// from it canonical and reproducible.
RrefResult rref(const Mat& m);

std::size_t rank(const Mat& m);

// Basis of { x : m x = 0 }, one vector per free column in ascending column
// order, each with a 1 in its free coordinate.
std::vector<Vec> kernel_basis(const Mat& m);

// One solution of m x = b with all free coordinates 0, or nullopt.
std::optional<Vec> solve(const Mat& m, const Vec& b);

// Incremental row span kept in reduced echelon form. basis() is the RREF
// basis of everything inserted so far, independent of insertion order.
// Optionally each key row carries a payload row of fixed width; payloads
// receive exactly the row operations applied to their keys, so when a key
// comes out dependent the returned payload residual is the obstruction to
// extending a linear map from the span.
class RowSpan {
 public:
  explicit RowSpan(std::size_t ncols, std::size_t payload_cols = 0)
      : ncols_(ncols), payload_cols_(payload_cols) {}

  // True if the vector enlarged the span.
  bool insert(const Vec& v);
  // Insert with payload. Returns nullopt when v was independent (now part of
  // the basis); otherwise returns the payload residual left after
  // eliminating v to zero. A zero residual means the payload is consistent
  // with the payloads already stored.
  std::optional<Vec> insert_tracked(const Vec& v, const Vec& payload);

  // Residual of v after elimination against the basis. Zero iff v is in the span.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  // Coordinates of v in basis(); nullopt if v is outside the span.
  std::optional<Vec> coordinates(const Vec& v) const;

  std::size_t dim() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<Vec>& payloads() const { return payloads_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t ncols_, payload_cols_;
  std::vector<Vec> rows_;      // RREF rows, pivots strictly ascending
  std::vector<Vec> payloads_;  // same length as rows_ when payload_cols_ > 0
  std::vector<std::size_t> pivots_;
};

// Canonical RREF basis of the span of the given rows.
std::vector<Vec> canonical_row_span(const std::vector<Vec>& rows, std::size_t ncols);
bool same_row_span(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t ncols);

// Span helpers for sets of equally sized matrices, via row-major
// vectorization.
std::vector<Mat> canonical_mat_span(const std::vector<Mat>& mats, std::size_t rows, std::size_t cols);
bool same_mat_span(const std::vector<Mat>& a, const std::vector<Mat>& b, std::size_t rows, std::size_t cols);

// Determinant by fraction-free style Gaussian elimination (exact).
Rat det(const Mat& m);

// Inverse; nullopt when singular.
std::optional<Mat> inverse(const Mat& m);

}  // namespace afc::exactlin
