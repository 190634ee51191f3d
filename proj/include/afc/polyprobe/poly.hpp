#pragma once
#include "afc/exactlin/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace afc::polyprobe {

using exactlin::Mat;
using exactlin::Rat;
using exactlin::Vec;

using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

// Graded lexicographic: total degree first, then lexicographic on the
// exponent vector. Fixes the monomial enumeration everywhere.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial over Q. No zero coefficients are stored;
// the zero polynomial has an empty term map.
class Poly {
 public:
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}
  static Poly constant(std::size_t nvars, const Rat& c);
  static Poly variable(std::size_t nvars, std::size_t i);
  static Poly monomial(const Exponents& e, const Rat& c);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // total degree; -1 for the zero polynomial
  const std::map<Exponents, Rat, GrlexLess>& terms() const { return terms_; }
  Rat coeff(const Exponents& e) const;
  void add_term(const Exponents& e, const Rat& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rat& c) const;
  bool operator==(const Poly& o) const = default;

  Poly partial(std::size_t var) const;

 private:
  std::size_t nvars_;
  std::map<Exponents, Rat, GrlexLess> terms_;
};

// Variable names plus parsing and printing. The grammar is sums of terms,
// a term being an optional rational literal followed by variable powers,
// e.g. "x^2 y - 3/2 y^3 + 1". '*' between factors is accepted and not
// required. str() output parses back to the same polynomial.
class PolyRing {
 public:
  explicit PolyRing(std::vector<std::string> names);
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  Poly parse(const std::string& text) const;
  std::string str(const Poly& p) const;

 private:
  std::vector<std::string> names_;
};

// All monomials of total degree <= cap in grlex order, with coordinate
// conversion. The coordinate convention for every span in this module.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t nvars, int cap);
  std::size_t size() const { return monos_.size(); }
  int cap() const { return cap_; }
  const std::vector<Exponents>& monomials() const { return monos_; }
  std::size_t index_of(const Exponents& e) const;
  Vec to_vec(const Poly& p) const;  // throws std::invalid_argument past the cap
  Poly from_vec(const Vec& v) const;

 private:
  std::size_t nvars_;
  int cap_;
  std::vector<Exponents> monos_;
  std::map<Exponents, std::size_t, GrlexLess> index_;
};

// One-parameter unipotent action on the variables: the group element with
// parameter a acts on coordinates by exp(a N), so the infinitesimal
// generator is the derivation D(x_i) = sum_j N(i, j) x_j. N must be
// nilpotent; then D preserves total degree and is locally nilpotent.
class LinearAction {
 public:
  LinearAction(std::size_t nvars, Mat nilpotent);
  std::size_t nvars() const { return nvars_; }
  const Mat& generator() const { return n_; }
  Poly derivation(const Poly& f) const;
  // Taylor coefficients of a |-> f(exp(a N) x): the list D^k f / k!
  // until it vanishes. Their span is the span of the orbit of f.
  std::vector<Poly> orbit_span(const Poly& f) const;

 private:
  std::size_t nvars_;
  Mat n_;
};

// Basis of the invariants of the action, degree by degree through total
// degree d, solving D(f) = 0 on each graded piece.
std::vector<Poly> invariants_up_to_degree(const LinearAction& act, int d);

}  // namespace afc::polyprobe
