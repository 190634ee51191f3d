#include "afc/exactlin/matfun.hpp"

#include <stdexcept>

namespace afc::exactlin {

UniPoly minimal_polynomial(const Mat& m) {
  if (!m.is_square()) throw std::invalid_argument("minimal polynomial of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return UniPoly(Vec{Rat(1)});  // empty matrix: min poly 1
  // Track each power's coordinates in the power basis as payload; the
  // residual payload at the first dependency is the minimal polynomial.
  RowSpan span(n * n, n + 1);
  Mat p = Mat::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Vec unit(n + 1, Rat(0));
    unit[k] = 1;
    auto residual = span.insert_tracked(p.vectorize(), unit);
    if (residual) return UniPoly(std::move(*residual));
    p = p * m;
  }
  throw std::logic_error("minimal polynomial: no dependency up to dimension");
}

bool is_semisimple(const Mat& m) {
  UniPoly mu = minimal_polynomial(m);
  return UniPoly::gcd(mu, mu.derivative()).degree() == 0;
}

bool is_nilpotent(const Mat& m) {
  UniPoly mu = minimal_polynomial(m);
  for (int k = 0; k < mu.degree(); ++k)
    if (mu.coeff(static_cast<std::size_t>(k)) != 0) return false;
  return true;
}

JordanChevalley jordan_chevalley(const Mat& m) {
  UniPoly mu = minimal_polynomial(m);
  UniPoly p = mu.squarefree_part();
  std::size_t n = m.rows();
  if (p == mu.monic()) {
    // Already semisimple.
    return {m, Mat(n, n), UniPoly::x()};
  }
  // Newton iteration in Q[x]/(mu): a <- a - p(a)/p'(a), starting at x.
  // Converges quadratically to the unique root congruent to x modulo the
  // nilradical; p'(a) stays invertible throughout.
  auto compose_mod = [&mu](const UniPoly& outer, const UniPoly& a) {
    UniPoly r;
    for (std::size_t i = outer.coeffs().size(); i-- > 0;) {
      r = UniPoly::mulmod(r, a, mu);
      r = r + UniPoly::constant(outer.coeff(i));
    }
    return UniPoly::mod(r, mu);
  };
  UniPoly pd = p.derivative();
  UniPoly a = UniPoly::mod(UniPoly::x(), mu);
  for (int iter = 0; iter < 64; ++iter) {
    UniPoly pa = compose_mod(p, a);
    if (pa.is_zero()) {
      Mat s = a.eval(m);
      Mat nmat = m - s;
      if (!is_semisimple(s) || !is_nilpotent(nmat))
        throw std::logic_error("jordan_chevalley: postcondition failure");
      return {std::move(s), std::move(nmat), std::move(a)};
    }
    auto inv = UniPoly::invmod(compose_mod(pd, a), mu);
    if (!inv) throw std::logic_error("jordan_chevalley: derivative not invertible");
    a = UniPoly::mod(a - UniPoly::mulmod(pa, *inv, mu), mu);
  }
  throw std::logic_error("jordan_chevalley: iteration did not converge");
}

}  // namespace afc::exactlin
