#include "afc/exactlin/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace afc::exactlin {

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rat& a) { return UniPoly(Vec{a}); }

UniPoly UniPoly::x() { return UniPoly(Vec{Rat(0), Rat(1)}); }

Rat UniPoly::leading() const {
  if (c_.empty()) throw std::invalid_argument("leading coefficient of zero polynomial");
  return c_.back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  Vec r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  Vec r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  Vec r(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return UniPoly(std::move(r));
}

UniPoly UniPoly::scaled(const Rat& a) const {
  Vec r = c_;
  for (Rat& x : r) x *= a;
  return UniPoly(std::move(r));
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  Vec r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rat(static_cast<long>(i)) * c_[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(Rat(1) / c_.back());
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  Vec rem = a.c_;
  Vec quot(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0, Rat(0));
  Rat lead_inv = Rat(1) / b.c_.back();
  while (rem.size() >= b.c_.size()) {
    if (rem.back() == 0) {
      rem.pop_back();
      continue;
    }
    std::size_t shift = rem.size() - b.c_.size();
    Rat q = rem.back() * lead_inv;
    quot[shift] = q;
    for (std::size_t i = 0; i < b.c_.size(); ++i) rem[shift + i] -= q * b.c_[i];
    rem.pop_back();  // leading term cancels exactly
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly u = a, v = b;
  while (!v.is_zero()) {
    UniPoly r = divmod(u, v).second;
    u = std::move(v);
    v = std::move(r);
  }
  return u.is_zero() ? u : u.monic();
}

UniPoly UniPoly::squarefree_part() const {
  if (is_zero()) return *this;
  if (degree() == 0) return UniPoly::constant(Rat(1));
  UniPoly g = gcd(*this, derivative());
  return divmod(*this, g).first.monic();
}

Rat UniPoly::eval(const Rat& x) const {
  Rat r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

Mat UniPoly::eval(const Mat& m) const {
  if (!m.is_square()) throw std::invalid_argument("polynomial of non-square matrix");
  Mat r(m.rows(), m.cols());
  for (std::size_t i = c_.size(); i-- > 0;) {
    r = r * m;
    for (std::size_t d = 0; d < m.rows(); ++d) r.at(d, d) += c_[i];
  }
  return r;
}

UniPoly UniPoly::mod(const UniPoly& a, const UniPoly& modulus) {
  if (modulus.degree() < 1) throw std::invalid_argument("modulus must be nonconstant");
  return divmod(a, modulus).second;
}

UniPoly UniPoly::mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& modulus) {
  return mod(a * b, modulus);
}

std::optional<UniPoly> UniPoly::invmod(const UniPoly& a, const UniPoly& modulus) {
  // Extended Euclid on (modulus, a mod modulus), tracking only the
  // coefficient of a.
  UniPoly r0 = modulus, r1 = mod(a, modulus);
  UniPoly t0, t1 = constant(Rat(1));
  while (!r1.is_zero()) {
    auto [q, r2] = divmod(r0, r1);
    UniPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.degree() != 0) return std::nullopt;
  return mod(t0.scaled(Rat(1) / r0.coeff(0)), modulus);
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    Rat a = c_[i];
    if (first) {
      if (a < 0) {
        os << '-';
        a = -a;
      }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (i == 0 || a != 1) os << rat_str(a);
    if (i > 0) {
      if (a != 1) os << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

}  // namespace afc::exactlin
