#pragma once
#include "afc/exactlin/matrix.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace afc::exactlin {

// Univariate polynomial over the rationals, dense, constant term first.
// The zero polynomial has an empty coefficient vector and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(Vec coeffs) : c_(std::move(coeffs)) { trim(); }
  static UniPoly constant(const Rat& a);
  static UniPoly x();

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
  Rat leading() const;
  const Vec& coeffs() const { return c_; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly scaled(const Rat& a) const;
  bool operator==(const UniPoly& o) const = default;

  UniPoly derivative() const;
  UniPoly monic() const;

  // Quotient and remainder with deg(rem) < deg(divisor). Throws on zero divisor.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
  // Monic gcd; gcd(0, 0) = 0.
  static UniPoly gcd(const UniPoly& a, const UniPoly& b);
  // p / gcd(p, p'), monic: same roots, all simple. Over a field of
  // characteristic zero this is the squarefree part.
  UniPoly squarefree_part() const;

  Rat eval(const Rat& x) const;
  Mat eval(const Mat& m) const;

  // Residue mod a nonconstant polynomial.
  static UniPoly mod(const UniPoly& a, const UniPoly& modulus);
  static UniPoly mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& modulus);
  // Inverse in Q[x]/(modulus) via extended Euclid; nullopt when
  // gcd(a, modulus) is nonconstant.
  static std::optional<UniPoly> invmod(const UniPoly& a, const UniPoly& modulus);

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  Vec c_;
};

}  // namespace afc::exactlin
