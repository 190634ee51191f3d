#include "afc/liecore/structure.hpp"

#include <random>
#include <stdexcept>

namespace afc::liecore {

using exactlin::kernel_basis;
using exactlin::RowSpan;

Mat killing_form(const LieAlgebra& g) {
  std::size_t d = g.dim();
  std::vector<Mat> ads;
  for (std::size_t i = 0; i < d; ++i) ads.push_back(g.adjoint_basis(i));
  Mat k(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Rat t = (ads[i] * ads[j]).trace();
      k.at(i, j) = t;
      k.at(j, i) = t;
    }
  return k;
}

Mat trace_form(const LieAlgebra& g) {
  std::size_t d = g.dim();
  Mat t(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Rat v = (g.basis()[i] * g.basis()[j]).trace();
      t.at(i, j) = v;
      t.at(j, i) = v;
    }
  return t;
}

SubalgebraHandle derived_subalgebra(const LieAlgebraPtr& g) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < g->dim(); ++i)
    for (std::size_t j = i + 1; j < g->dim(); ++j) rows.push_back(g->structure(i, j));
  return SubalgebraHandle::span_of(g, rows);
}

SubalgebraHandle centre(const LieAlgebraPtr& g) {
  std::size_t d = g->dim();
  // x central iff ad(x) = 0; stack the maps x -> column of ad(x).
  Mat a(d * d, d);
  for (std::size_t k = 0; k < d; ++k) {
    Mat adk = g->adjoint_basis(k);
    Vec v = adk.vectorize();
    for (std::size_t r = 0; r < d * d; ++r) a.at(r, k) = v[r];
  }
  return SubalgebraHandle::span_of(g, kernel_basis(a));
}

bool is_abelian(const SubalgebraHandle& s) {
  const auto& rows = s.coordinate_rows();
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (!exactlin::vec_is_zero(s.parent()->bracket(rows[i], rows[j]))) return false;
  return true;
}

namespace {

// Rows spanning [a, b] inside the parent of a and b.
std::vector<Vec> bracket_span_rows(const LieAlgebraPtr& g, const std::vector<Vec>& a,
                                   const std::vector<Vec>& b) {
  std::vector<Vec> rows;
  for (const Vec& x : a)
    for (const Vec& y : b) rows.push_back(g->bracket(x, y));
  return rows;
}

std::vector<Vec> canonical(const std::vector<Vec>& rows, std::size_t w) {
  return exactlin::canonical_row_span(rows, w);
}

}  // namespace

bool is_solvable(const SubalgebraHandle& s) {
  const LieAlgebraPtr& g = s.parent();
  std::vector<Vec> cur = s.coordinate_rows();
  for (std::size_t step = 0; step <= s.dim(); ++step) {
    if (cur.empty()) return true;
    std::vector<Vec> next = canonical(bracket_span_rows(g, cur, cur), g->dim());
    if (next.size() == cur.size()) return false;  // derived series stabilized nonzero
    cur = std::move(next);
  }
  return cur.empty();
}

SubalgebraHandle solvable_radical(const LieAlgebraPtr& g) {
  // Characteristic zero: rad(g) is the Killing-orthogonal complement of the
  // derived subalgebra.
  Mat k = killing_form(*g);
  SubalgebraHandle der = derived_subalgebra(g);
  std::size_t d = g->dim();
  Mat constraints(der.dim(), d);
  for (std::size_t r = 0; r < der.dim(); ++r) {
    Vec kd = k.apply(der.coordinate_rows()[r]);
    constraints.set_row(r, kd);
  }
  SubalgebraHandle rad = SubalgebraHandle::span_of(g, kernel_basis(constraints));
  if (!is_solvable(rad)) throw std::logic_error("solvable_radical: complement not solvable");
  return rad;
}

namespace {

bool coords_nilpotent(const LieAlgebraPtr& g, const Vec& coords) {
  return exactlin::is_nilpotent(g->element(coords));
}

}  // namespace

SubalgebraHandle unipotent_radical(const LieAlgebraPtr& g) {
  SubalgebraHandle rad = solvable_radical(g);
  // Intersect rad with the radical of the ambient trace form: parametrize
  // x = sum t_i r_i and solve T x = 0 in t.
  Mat t = trace_form(*g);
  std::size_t d = g->dim(), k = rad.dim();
  Mat m(d, k);
  for (std::size_t i = 0; i < k; ++i) {
    Vec col = t.apply(rad.coordinate_rows()[i]);
    for (std::size_t r = 0; r < d; ++r) m.at(r, i) = col[r];
  }
  std::vector<Vec> rows;
  for (const Vec& sol : kernel_basis(m)) {
    Vec x(d, Rat(0));
    for (std::size_t i = 0; i < k; ++i)
      if (sol[i] != 0) x = exactlin::vec_add(x, exactlin::vec_scale(sol[i], rad.coordinate_rows()[i]));
    rows.push_back(std::move(x));
  }
  SubalgebraHandle n = SubalgebraHandle::span_of(g, rows);

  // Runtime validation. This identification of the unipotent radical is a
  // theorem only for algebras of connected algebraic groups, which is the
  // caller's contract; these checks catch inputs that break it.
  for (const Vec& r : n.coordinate_rows())
    if (!coords_nilpotent(g, r))
      throw ValidationError("unipotent radical candidate contains a non-nilpotent element");
  std::mt19937 rng(20259);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 8 && n.dim() > 1; ++trial) {
    Vec x(d, Rat(0));
    for (const Vec& r : n.coordinate_rows())
      x = exactlin::vec_add(x, exactlin::vec_scale(Rat(coef(rng)), r));
    if (!coords_nilpotent(g, x))
      throw ValidationError("unipotent radical candidate is not uniformly nilpotent");
  }
  for (std::size_t i = 0; i < d; ++i) {
    Vec e(d, Rat(0));
    e[i] = 1;
    for (const Vec& r : n.coordinate_rows())
      if (!n.contains_coords(g->bracket(e, r)))
        throw ValidationError("unipotent radical candidate is not an ideal");
  }
  return n;
}

namespace {

QuotientMap build_levi_quotient(const LieAlgebraPtr& g, const SubalgebraHandle& n) {
  std::size_t d = g->dim();
  RowSpan nspan(d);
  for (const Vec& r : n.coordinate_rows()) nspan.insert(r);
  // Quotient coordinates: the non-pivot coordinates of reduce-mod-n.
  std::vector<std::size_t> free_cols;
  {
    std::vector<bool> is_pivot(d, false);
    for (std::size_t p : nspan.pivots()) is_pivot[p] = true;
    for (std::size_t c = 0; c < d; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
  }
  std::size_t q = free_cols.size();
  auto project = [&](const Vec& x) {
    Vec red = nspan.reduce(x);
    Vec out(q);
    for (std::size_t i = 0; i < q; ++i) out[i] = red[free_cols[i]];
    return out;
  };
  auto lift = [&](const Vec& xbar) {
    Vec out(d, Rat(0));
    for (std::size_t i = 0; i < q; ++i) out[free_cols[i]] = xbar[i];
    return out;
  };
  auto qbracket = [&](const Vec& a, const Vec& b) { return project(g->bracket(lift(a), lift(b))); };

  // Derived subalgebra of the quotient, for the abelianization coordinates.
  std::vector<Vec> der_rows;
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = i + 1; j < q; ++j) {
      Vec a(q, Rat(0)), b(q, Rat(0));
      a[i] = 1;
      b[j] = 1;
      der_rows.push_back(qbracket(a, b));
    }
  RowSpan der(q);
  for (const Vec& r : der_rows) der.insert(r);
  std::vector<std::size_t> ab_cols;
  {
    std::vector<bool> is_pivot(q, false);
    for (std::size_t p : der.pivots()) is_pivot[p] = true;
    for (std::size_t c = 0; c < q; ++c)
      if (!is_pivot[c]) ab_cols.push_back(c);
  }
  std::size_t a = ab_cols.size();

  // Faithful realization of the quotient: adjoint action plus the
  // abelianization coordinates on the diagonal. Faithful because a
  // reductive algebra has z meeting [l, l] trivially.
  std::size_t amb = q + a;
  if (amb == 0) amb = 1;  // zero algebra still needs an ambient space
  auto realize = [&](const Vec& xbar) {
    Mat m(amb, amb);
    for (std::size_t j = 0; j < q; ++j) {
      Vec ej(q, Rat(0));
      ej[j] = 1;
      Vec col = qbracket(xbar, ej);
      for (std::size_t i = 0; i < q; ++i) m.at(i, j) = col[i];
    }
    Vec red = der.reduce(xbar);
    for (std::size_t i = 0; i < a; ++i) m.at(q + i, q + i) = red[ab_cols[i]];
    return m;
  };

  std::vector<Mat> images;
  for (std::size_t i = 0; i < q; ++i) {
    Vec e(q, Rat(0));
    e[i] = 1;
    images.push_back(realize(e));
  }
  LieAlgebraPtr quot = LieAlgebra::generate(amb, images);
  if (quot->dim() != q)
    throw ValidationError("quotient by the unipotent radical is not reductive");

  Mat projection(q, d);
  for (std::size_t k = 0; k < d; ++k) {
    Vec e(d, Rat(0));
    e[k] = 1;
    auto c = quot->coordinates(realize(project(e)));
    if (!c) throw std::logic_error("levi quotient: projection image left the span");
    for (std::size_t i = 0; i < q; ++i) projection.at(i, k) = (*c)[i];
  }
  return QuotientMap{g, n, quot, projection};
}

}  // namespace

QuotientMap levi_quotient(const LieAlgebraPtr& g) {
  return build_levi_quotient(g, unipotent_radical(g));
}

QuotientMap levi_quotient_with(const LieAlgebraPtr& g, const SubalgebraHandle& n) {
  SubalgebraHandle computed = unipotent_radical(g);
  SubalgebraHandle given = (n.parent() == g)
                               ? n
                               : SubalgebraHandle::from_matrices(g, n.materialize());
  if (!(given == computed))
    throw ValidationError("declared unipotent radical does not match the computed one");
  return build_levi_quotient(g, computed);
}

SubalgebraHandle centralizer(const LieAlgebraPtr& g, const SubalgebraHandle& s) {
  std::size_t d = g->dim();
  std::size_t k = s.dim();
  Mat constraints(k * d, d);
  for (std::size_t r = 0; r < k; ++r) {
    Mat ad = g->adjoint(s.coordinate_rows()[r]);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) constraints.at(r * d + i, j) = ad.at(i, j);
  }
  return SubalgebraHandle::span_of(g, kernel_basis(constraints));
}

SubalgebraHandle normalizer(const LieAlgebraPtr& g, const SubalgebraHandle& s) {
  std::size_t d = g->dim();
  std::size_t k = s.dim();
  RowSpan sspan(d);
  for (const Vec& r : s.coordinate_rows()) sspan.insert(r);
  // x normalizes s iff ad(s_r) x reduces to zero mod s for every r.
  Mat constraints(k * d, d);
  for (std::size_t r = 0; r < k; ++r) {
    Mat ad = g->adjoint(s.coordinate_rows()[r]);
    for (std::size_t j = 0; j < d; ++j) {
      Vec col = sspan.reduce(ad.col(j));
      for (std::size_t i = 0; i < d; ++i) constraints.at(r * d + i, j) = col[i];
    }
  }
  return SubalgebraHandle::span_of(g, kernel_basis(constraints));
}

bool is_reductive_subalgebra(const LieAlgebraPtr&, const SubalgebraHandle& k) {
  if (k.dim() == 0) return true;
  LieAlgebraPtr a = k.as_algebra();
  SubalgebraHandle rad = solvable_radical(a);
  SubalgebraHandle z = centre(a);
  if (!(rad == z)) return false;
  // The centre must consist of semisimple matrices; commuting semisimple
  // elements have semisimple sums, so checking a basis (plus pairwise sums
  // as a cheap guard) decides the whole centre.
  std::vector<Mat> zmats;
  for (const Vec& r : z.coordinate_rows()) zmats.push_back(a->element(r));
  for (const Mat& m : zmats)
    if (!exactlin::is_semisimple(m)) return false;
  for (std::size_t i = 0; i < zmats.size(); ++i)
    for (std::size_t j = i + 1; j < zmats.size(); ++j)
      if (!exactlin::is_semisimple(zmats[i] + zmats[j])) return false;
  return true;
}

bool is_toral(const LieAlgebraPtr&, const SubalgebraHandle& t) {
  if (!is_abelian(t)) return false;
  for (const Mat& m : t.materialize())
    if (!exactlin::is_semisimple(m)) return false;
  return true;
}

bool is_maximal_toral(const LieAlgebraPtr& g, const SubalgebraHandle& t) {
  if (!is_toral(g, t)) return false;
  // t is maximal toral iff its centralizer c has abelian reductive part
  // equal to the image of t: any semisimple element commuting with t lives
  // in c, survives to the Levi quotient of c, and would enlarge it.
  SubalgebraHandle c = centralizer(g, t);
  LieAlgebraPtr ca = c.as_algebra();
  QuotientMap q = levi_quotient(ca);
  if (!is_abelian(SubalgebraHandle::full(q.quotient))) return false;
  SubalgebraHandle timg = q.push(SubalgebraHandle::from_matrices(ca, t.materialize()));
  return timg.dim() == q.quotient->dim();
}

}  // namespace afc::liecore
