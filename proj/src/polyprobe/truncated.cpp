#include "afc/polyprobe/truncated.hpp"

#include <stdexcept>

namespace afc::polyprobe {

using exactlin::RowSpan;

TruncatedSubalgebra::TruncatedSubalgebra(std::vector<Poly> generators, int degree_cap)
    : cap_(degree_cap),
      gens_(std::move(generators)),
      mb_(gens_.empty() ? 0 : gens_[0].nvars(), degree_cap) {
  if (cap_ < 1) throw std::invalid_argument("degree cap must be positive");
  if (gens_.empty()) throw std::invalid_argument("generator list must be nonempty");
  std::size_t nv = gens_[0].nvars();
  for (const Poly& g : gens_) {
    if (g.nvars() != nv) throw std::invalid_argument("generators over different variable sets");
    if (g.degree() > cap_) throw std::invalid_argument("generator degree exceeds the cap");
  }

  // Filtration by total degree of the product decomposition: each degree
  // step multiplies the generators against the elements first reached at
  // the complementary degree. Every product of generators of total degree
  // <= d is linearly reachable this way.
  RowSpan cur(mb_.size());
  std::vector<std::vector<Poly>> fresh(cap_ + 1);
  Poly one = Poly::constant(nv, Rat(1));
  cur.insert(mb_.to_vec(one));
  fresh[0].push_back(one);
  spans_.push_back(cur);
  for (int d = 1; d <= cap_; ++d) {
    for (const Poly& g : gens_) {
      int e = g.degree();
      if (e < 1 || e > d) continue;
      for (const Poly& p : fresh[d - e]) {
        Poly w = g * p;
        if (cur.insert(mb_.to_vec(w))) fresh[d].push_back(w);
      }
    }
    spans_.push_back(cur);
  }
}

std::size_t TruncatedSubalgebra::dim_at(int d) const { return span_at(d).dim(); }

const RowSpan& TruncatedSubalgebra::span_at(int d) const {
  if (d < 0 || d > cap_) throw std::invalid_argument("degree outside [0, cap]");
  return spans_[static_cast<std::size_t>(d)];
}

std::vector<Poly> TruncatedSubalgebra::basis_at(int d) const {
  std::vector<Poly> out;
  for (const Vec& row : span_at(d).basis()) out.push_back(mb_.from_vec(row));
  return out;
}

bool TruncatedSubalgebra::membership(const Poly& f) const {
  if (f.degree() > cap_) throw std::invalid_argument("degree overflow: polynomial exceeds the cap");
  return spans_[static_cast<std::size_t>(cap_)].contains(mb_.to_vec(f));
}

bool membership(const TruncatedSubalgebra& ts, const Poly& f) { return ts.membership(f); }

TruncatedSubalgebra build_axy(const std::vector<Poly>& ideal_gens, int d) {
  if (d < 1) throw std::invalid_argument("degree cap must be positive");
  if (ideal_gens.empty())
    throw std::invalid_argument("ideal generator list must be nonempty (use the zero polynomial for the zero ideal)");
  std::size_t nv = ideal_gens[0].nvars();
  for (const Poly& g : ideal_gens)
    if (g.nvars() != nv) throw std::invalid_argument("ideal generators over different variable sets");
  MonomialBasis mb(nv, d);
  // Bounded-degree slice of the ideal: the span of monomial multiples of
  // the generators that stay under the cap.
  RowSpan slice(mb.size());
  for (const Poly& g : ideal_gens) {
    if (g.is_zero() || g.degree() > d) continue;
    int room = d - g.degree();
    for (const Exponents& m : mb.monomials()) {
      if (total_degree(m) > room) continue;
      slice.insert(mb.to_vec(Poly::monomial(m, Rat(1)) * g));
    }
  }
  std::vector<Poly> gens;
  gens.push_back(Poly::constant(nv, Rat(1)));
  for (const Vec& row : slice.basis()) gens.push_back(mb.from_vec(row));
  return TruncatedSubalgebra(std::move(gens), d);
}

namespace {

// Span of products of lower-degree elements reaching exactly degree d,
// on top of the degree-(d-1) part.
RowSpan lower_products_span(const TruncatedSubalgebra& ts, int d) {
  RowSpan c = ts.span_at(d - 1);
  std::vector<Poly> basis = ts.basis_at(d - 1);
  const MonomialBasis& mb = ts.monomial_basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    int di = basis[i].degree();
    if (di < 1) continue;
    for (std::size_t j = i; j < basis.size(); ++j) {
      if (di + basis[j].degree() != d) continue;
      c.insert(mb.to_vec(basis[i] * basis[j]));
    }
  }
  return c;
}

}  // namespace

std::vector<long> fg_probe(const TruncatedSubalgebra& ts) {
  std::vector<long> out(static_cast<std::size_t>(ts.degree_cap()) + 1, 0);
  for (int d = 1; d <= ts.degree_cap(); ++d) {
    RowSpan c = lower_products_span(ts, d);
    out[static_cast<std::size_t>(d)] =
        static_cast<long>(ts.dim_at(d)) - static_cast<long>(c.dim());
  }
  return out;
}

std::vector<Poly> fg_probe_generators(const TruncatedSubalgebra& ts, std::size_t count) {
  std::vector<Poly> out;
  const MonomialBasis& mb = ts.monomial_basis();
  for (int d = 1; d <= ts.degree_cap() && out.size() < count; ++d) {
    RowSpan c = lower_products_span(ts, d);
    for (const Vec& row : ts.span_at(d).basis()) {
      if (out.size() >= count) break;
      if (c.insert(row)) out.push_back(mb.from_vec(row));
    }
  }
  if (out.size() < count)
    throw std::invalid_argument("degree cap too small: the probe stream is exhausted");
  return out;
}

ChainDemo chain_demo(const std::vector<Poly>& ideal_gens, int steps, int cap) {
  if (steps < 1) throw std::invalid_argument("chain needs at least one step");
  TruncatedSubalgebra a = build_axy(ideal_gens, cap);
  std::vector<Poly> stream = fg_probe_generators(a, static_cast<std::size_t>(steps));
  ChainDemo chain;
  chain.adjoined = stream;
  for (int i = 1; i <= steps; ++i)
    chain.members.emplace_back(std::vector<Poly>(stream.begin(), stream.begin() + i), cap);
  for (int i = 0; i + 1 < steps; ++i) {
    const Poly& w = stream[static_cast<std::size_t>(i) + 1];
    if (chain.members[static_cast<std::size_t>(i)].membership(w) ||
        !chain.members[static_cast<std::size_t>(i) + 1].membership(w))
      throw std::logic_error("chain witness failed its membership checks");
    chain.witnesses.push_back(w);
  }
  return chain;
}

}  // namespace afc::polyprobe
