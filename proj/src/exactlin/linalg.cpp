#include "afc/exactlin/linalg.hpp"

#include <stdexcept>

namespace afc::exactlin {

RrefResult rref(const Mat& m) {
  Mat r = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t sel = row;
    while (sel < r.rows() && r.at(sel, col) == 0) ++sel;
    if (sel == r.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(sel, j), r.at(row, j));
    Rat inv = Rat(1) / r.at(row, col);
    for (std::size_t j = 0; j < r.cols(); ++j) r.at(row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r.at(i, col) == 0) continue;
      Rat c = r.at(i, col);
      for (std::size_t j = 0; j < r.cols(); ++j) r.at(i, j) -= c * r.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {r, pivots};
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

std::vector<Vec> kernel_basis(const Mat& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols(), Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.r.at(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
  Mat aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  RrefResult rr = rref(aug);
  for (std::size_t p : rr.pivots)
    if (p == m.cols()) return std::nullopt;  // inconsistent
  Vec x(m.cols(), Rat(0));
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) x[rr.pivots[i]] = rr.r.at(i, m.cols());
  return x;
}

bool RowSpan::insert(const Vec& v) {
  if (payload_cols_ != 0) throw std::logic_error("RowSpan: payload required");
  if (v.size() != ncols_) throw std::invalid_argument("RowSpan: width mismatch");
  Vec w = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rat c = w[pivots_[i]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < ncols_; ++j) w[j] -= c * rows_[i][j];
  }
  std::size_t p = 0;
  while (p < ncols_ && w[p] == 0) ++p;
  if (p == ncols_) return false;
  Rat inv = Rat(1) / w[p];
  for (std::size_t j = 0; j < ncols_; ++j) w[j] *= inv;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rat c = rows_[i][p];
    if (c == 0) continue;
    for (std::size_t j = 0; j < ncols_; ++j) rows_[i][j] -= c * w[j];
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(w));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

std::optional<Vec> RowSpan::insert_tracked(const Vec& v, const Vec& payload) {
  if (v.size() != ncols_ || payload.size() != payload_cols_)
    throw std::invalid_argument("RowSpan: width mismatch");
  Vec w = v, pw = payload;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rat c = w[pivots_[i]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < ncols_; ++j) w[j] -= c * rows_[i][j];
    for (std::size_t j = 0; j < payload_cols_; ++j) pw[j] -= c * payloads_[i][j];
  }
  std::size_t p = 0;
  while (p < ncols_ && w[p] == 0) ++p;
  if (p == ncols_) return pw;
  Rat inv = Rat(1) / w[p];
  for (std::size_t j = 0; j < ncols_; ++j) w[j] *= inv;
  for (std::size_t j = 0; j < payload_cols_; ++j) pw[j] *= inv;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rat c = rows_[i][p];
    if (c == 0) continue;
    for (std::size_t j = 0; j < ncols_; ++j) rows_[i][j] -= c * w[j];
    for (std::size_t j = 0; j < payload_cols_; ++j) payloads_[i][j] -= c * pw[j];
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(w));
  payloads_.insert(payloads_.begin() + pos, std::move(pw));
  pivots_.insert(pivots_.begin() + pos, p);
  return std::nullopt;
}

Vec RowSpan::reduce(const Vec& v) const {
  if (v.size() != ncols_) throw std::invalid_argument("RowSpan: width mismatch");
  Vec w = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rat c = w[pivots_[i]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < ncols_; ++j) w[j] -= c * rows_[i][j];
  }
  return w;
}

bool RowSpan::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

std::optional<Vec> RowSpan::coordinates(const Vec& v) const {
  // RREF rows have unit pivots and zeros in each other's pivot columns, so
  // the coordinate over row i is just v[pivot_i].
  Vec c(rows_.size());
  Vec check(ncols_, Rat(0));
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    c[i] = v[pivots_[i]];
    for (std::size_t j = 0; j < ncols_; ++j) check[j] += c[i] * rows_[i][j];
  }
  if (check != v) return std::nullopt;
  return c;
}

std::vector<Vec> canonical_row_span(const std::vector<Vec>& rows, std::size_t ncols) {
  RowSpan s(ncols);
  for (const Vec& r : rows) s.insert(r);
  return s.basis();
}

bool same_row_span(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t ncols) {
  return canonical_row_span(a, ncols) == canonical_row_span(b, ncols);
}

namespace {
std::vector<Vec> vectorized(const std::vector<Mat>& mats, std::size_t rows, std::size_t cols) {
  std::vector<Vec> out;
  for (const Mat& m : mats) {
    if (m.rows() != rows || m.cols() != cols)
      throw std::invalid_argument("matrix span: shape mismatch");
    out.push_back(m.vectorize());
  }
  return out;
}
}  // namespace

std::vector<Mat> canonical_mat_span(const std::vector<Mat>& mats, std::size_t rows, std::size_t cols) {
  std::vector<Mat> out;
  for (const Vec& v : canonical_row_span(vectorized(mats, rows, cols), rows * cols))
    out.push_back(Mat::unvectorize(v, rows, cols));
  return out;
}

bool same_mat_span(const std::vector<Mat>& a, const std::vector<Mat>& b, std::size_t rows, std::size_t cols) {
  return same_row_span(vectorized(a, rows, cols), vectorized(b, rows, cols), rows * cols);
}

Rat det(const Mat& m) {
  if (!m.is_square()) throw std::invalid_argument("det of non-square matrix");
  Mat a = m;
  Rat d = 1;
  std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a.at(sel, col) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(sel, j), a.at(col, j));
      d = -d;
    }
    d *= a.at(col, col);
    Rat inv = Rat(1) / a.at(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      Rat c = a.at(i, col) * inv;
      if (c == 0) continue;
      for (std::size_t j = col; j < n; ++j) a.at(i, j) -= c * a.at(col, j);
    }
  }
  return d;
}

std::optional<Mat> inverse(const Mat& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  std::size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  RrefResult rr = rref(aug);
  if (rr.pivots.size() != n || rr.pivots.back() != n - 1) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rr.r.at(i, n + j);
  return inv;
}

}  // namespace afc::exactlin
