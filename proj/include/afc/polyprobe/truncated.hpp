#pragma once
#include "afc/polyprobe/poly.hpp"

namespace afc::polyprobe {

// The degree-filtered pieces of the unital algebra generated by a set of
// polynomials, kept exactly: span_at(d) is a canonical basis of all
// products of generators of total degree <= d (constants included). Built
// once at construction; immutable afterwards.
class TruncatedSubalgebra {
 public:
  // Throws std::invalid_argument when a generator exceeds the cap or the
  // cap is < 1.
  TruncatedSubalgebra(std::vector<Poly> generators, int degree_cap);

  std::size_t nvars() const { return mb_.monomials().empty() ? 0 : mb_.monomials()[0].size(); }
  int degree_cap() const { return cap_; }
  const std::vector<Poly>& generators() const { return gens_; }
  const MonomialBasis& monomial_basis() const { return mb_; }

  std::size_t dim_at(int d) const;
  std::vector<Poly> basis_at(int d) const;
  const exactlin::RowSpan& span_at(int d) const;

  // Exact membership in the degree-filtered algebra. Throws
  // std::invalid_argument when deg f exceeds the cap.
  bool membership(const Poly& f) const;

 private:
  int cap_;
  std::vector<Poly> gens_;
  MonomialBasis mb_;
  std::vector<exactlin::RowSpan> spans_;  // spans_[d] = basis of degree-<=d part
};

bool membership(const TruncatedSubalgebra& ts, const Poly& f);

// Truncation of (constants + the degree-bounded slice of the ideal of Y),
// the functions constant on Y, with generating set {1} plus a canonical
// basis of the ideal slice. The slice is spanned by monomial multiples of
// the given generators up to the cap.
TruncatedSubalgebra build_axy(const std::vector<Poly>& ideal_gens, int d);

// For each degree d <= cap: how many independent degree-d elements are not
// products of elements of lower degree. Index 0 is always 0. A strictly
// positive tail is the desk-scale signal of non-finite-generation.
std::vector<long> fg_probe(const TruncatedSubalgebra& ts);

// New-generator stream of fg_probe, as polynomials in discovery order
// (degree by degree, canonical basis order within a degree).
std::vector<Poly> fg_probe_generators(const TruncatedSubalgebra& ts, std::size_t count);

// A strictly increasing chain of truncated subalgebras inside the algebra
// of build_axy, member i generated by the first i+1 elements of the
// new-generator stream. witnesses[i] lies in members[i+1] but not in
// members[i], certifying strictness.
struct ChainDemo {
  std::vector<TruncatedSubalgebra> members;
  std::vector<Poly> adjoined;   // adjoined[i] is the generator added at step i
  std::vector<Poly> witnesses;  // size members.size() - 1
};

// Throws std::invalid_argument when the probe stream is exhausted before
// `steps` generators are found (cap too small).
ChainDemo chain_demo(const std::vector<Poly>& ideal_gens, int steps, int cap);

}  // namespace afc::polyprobe
