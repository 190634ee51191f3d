#include "afc/exactlin/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace afc::exactlin {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::parse(const std::string& text) {
  std::vector<Vec> rows;
  std::string chunk;
  std::istringstream all(text);
  while (std::getline(all, chunk, ';')) rows.push_back(parse_vec(chunk));
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  if (rows.empty()) throw std::invalid_argument("empty matrix literal");
  return from_rows(rows);
}

Mat Mat::row_vector(const Vec& v) {
  Mat m(1, v.size());
  for (std::size_t j = 0; j < v.size(); ++j) m.at(0, j) = v[j];
  return m;
}

Mat Mat::col_vector(const Vec& v) {
  Mat m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Mat();
  Mat m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
    m.set_row(i, rows[i]);
  }
  return m;
}

Mat Mat::diag(const Vec& d) {
  Mat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::operator-() const {
  Mat m = *this;
  for (Rat& x : m.e_) x = -x;
  return m;
}

Mat& Mat::operator+=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix add: shape mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sub: shape mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

Mat& Mat::operator*=(const Rat& c) {
  for (Rat& x : e_) x *= c;
  return *this;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix mul: shape mismatch");
  Mat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

Vec Mat::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix apply: shape mismatch");
  Vec r(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[i] += at(i, j) * v[j];
  return r;
}

Rat Mat::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  Rat t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool Mat::is_zero() const {
  for (const Rat& x : e_)
    if (x != 0) return false;
  return true;
}

Mat Mat::pow(unsigned k) const {
  if (!is_square()) throw std::invalid_argument("pow of non-square matrix");
  Mat r = identity(rows_);
  Mat b = *this;
  while (k) {
    if (k & 1u) r = r * b;
    b = b * b;
    k >>= 1u;
  }
  return r;
}

Mat Mat::kron(const Mat& o) const {
  Mat r(rows_ * o.rows_, cols_ * o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j) == 0) continue;
      for (std::size_t p = 0; p < o.rows_; ++p)
        for (std::size_t q = 0; q < o.cols_; ++q)
          r.at(i * o.rows_ + p, j * o.cols_ + q) = at(i, j) * o.at(p, q);
    }
  return r;
}

Vec Mat::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec Mat::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void Mat::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) throw std::invalid_argument("set_row: shape mismatch");
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

Vec Mat::vectorize() const { return e_; }

Mat Mat::unvectorize(const Vec& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw std::invalid_argument("unvectorize: shape mismatch");
  Mat m(rows, cols);
  m.e_ = v;
  return m;
}

std::string Mat::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << " ; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << rat_str(at(i, j));
    }
  }
  return os.str();
}

Mat commutator(const Mat& a, const Mat& b) {
  if (!a.is_square() || a.rows() != b.rows() || !b.is_square())
    throw std::invalid_argument("commutator: need equal square matrices");
  return a * b - b * a;
}

}  // namespace afc::exactlin
