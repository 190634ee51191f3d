#pragma once
#include "afc/exactlin/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace afc::exactlin {

// Dense rational matrix, row-major. Everything is exact; there is no
// floating point anywhere in this library.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, Rat(0)) {}

  static Mat identity(std::size_t n);
  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  // Entry text: rows separated by ';', entries by whitespace, rational
  // literals as accepted by parse_rat. "1 0 ; 0 -1/2" is a 2x2 matrix.
  static Mat parse(const std::string& text);
  static Mat row_vector(const Vec& v);
  static Mat col_vector(const Vec& v);
  static Mat from_rows(const std::vector<Vec>& rows);
  static Mat diag(const Vec& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool is_square() const { return rows_ == cols_; }

  Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Mat transpose() const;
  Mat operator-() const;
  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Rat& c);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(const Rat& c, Mat a) { return a *= c; }
  Mat operator*(const Mat& o) const;
  bool operator==(const Mat& o) const = default;

  Vec apply(const Vec& v) const;  // this * v
  Rat trace() const;
  bool is_zero() const;
  Mat pow(unsigned k) const;
  // Kronecker product; block (i,j) of the result is at(i,j) * o.
  Mat kron(const Mat& o) const;

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);
  // Row-major flattening, the coordinate convention used for spans of
  // matrices throughout.
  Vec vectorize() const;
  static Mat unvectorize(const Vec& v, std::size_t rows, std::size_t cols);

  // Inverse of Mat::parse on its own output.
  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> e_;
};

// [a,b] = ab - ba. Throws std::invalid_argument unless both are square of
// equal size.
Mat commutator(const Mat& a, const Mat& b);

}  // namespace afc::exactlin
