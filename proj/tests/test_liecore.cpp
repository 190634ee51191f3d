#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "afc/errors.hpp"
#include "afc/liecore/lie_algebra.hpp"
#include "afc/liecore/structure.hpp"

#include <vector>

using namespace afc;
using namespace afc::liecore;
using exactlin::Mat;
using exactlin::Rat;
using exactlin::Vec;

namespace {

Mat m(const std::string& s) { return Mat::parse(s); }
Vec v(const std::string& s) { return exactlin::parse_vec(s); }

const Mat H = m("1 0; 0 -1");
const Mat E = m("0 1; 0 0");
const Mat F = m("0 0; 1 0");
const Mat I2 = m("1 0; 0 1");
const Mat E11 = m("1 0; 0 0");
const Mat E22 = m("0 0; 0 1");

LieAlgebraPtr sl2() { return LieAlgebra::generate(2, {E, F}); }
LieAlgebraPtr gl2() { return LieAlgebra::generate(2, {E11, E, F, E22}); }
LieAlgebraPtr borel2() { return LieAlgebra::generate(2, {H, E}); }
LieAlgebraPtr aff1() { return LieAlgebra::generate(2, {E11, E}); }
LieAlgebraPtr heis3() {
  return LieAlgebra::generate(3, {m("0 1 0; 0 0 0; 0 0 0"), m("0 0 0; 0 0 1; 0 0 0")});
}

}  // namespace

TEST_CASE("generate closes under brackets and canonicalizes") {
  LieAlgebraPtr g = sl2();
  CHECK(g->ambient_dim() == 2);
  CHECK(g->dim() == 3);
  // Canonical RREF basis of sl2 in row-major vectorization: H, E, F.
  CHECK(g->basis()[0] == H);
  CHECK(g->basis()[1] == E);
  CHECK(g->basis()[2] == F);

  // Any presentation with the same span yields the identical basis.
  LieAlgebraPtr g2 = LieAlgebra::generate(2, {H + Rat(2) * E, E - F, F});
  LieAlgebraPtr g3 = LieAlgebra::generate(2, {F, E});
  REQUIRE(g2->dim() == 3);
  REQUIRE(g3->dim() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(g2->basis()[i] == g->basis()[i]);
    CHECK(g3->basis()[i] == g->basis()[i]);
  }

  CHECK(g->contains(H + Rat(7) * F));
  CHECK_FALSE(g->contains(E11));
  CHECK(g->element(v("2 -1 5")) == Rat(2) * H - E + Rat(5) * F);
  auto c = g->coordinates(E + F);
  REQUIRE(c.has_value());
  CHECK(*c == v("0 1 1"));
  CHECK_FALSE(g->coordinates(I2).has_value());

  CHECK_THROWS_AS(LieAlgebra::generate(2, {m("1 0 0; 0 0 0; 0 0 0")}), std::invalid_argument);

  LieAlgebraPtr zero = LieAlgebra::generate(2, {});
  CHECK(zero->dim() == 0);
}

TEST_CASE("structure constants, bracket, adjoint") {
  LieAlgebraPtr g = sl2();
  // Basis order H, E, F: [H, E] = 2E, [H, F] = -2F, [E, F] = H.
  CHECK(g->structure(0, 1) == v("0 2 0"));
  CHECK(g->structure(0, 2) == v("0 0 -2"));
  CHECK(g->structure(1, 2) == v("1 0 0"));
  CHECK(g->bracket(v("1 0 0"), v("0 1 0")) == v("0 2 0"));
  CHECK(g->bracket(v("0 1 0"), v("0 0 1")) == v("1 0 0"));

  CHECK(g->adjoint(v("1 0 0")) == m("0 0 0; 0 2 0; 0 0 -2"));
  CHECK(g->adjoint_basis(1) == m("0 0 1; -2 0 0; 0 0 0"));
  CHECK(g->adjoint_basis(2) == m("0 -1 0; 0 0 0; 2 0 0"));

  // ad is a homomorphism: ad([x, y]) = [ad x, ad y].
  Vec x = v("1 2 0"), y = v("0 1 -3");
  CHECK(g->adjoint(g->bracket(x, y)) ==
        exactlin::commutator(g->adjoint(x), g->adjoint(y)));
}

TEST_CASE("generate_with_action keeps actions aligned with the basis") {
  // The identity assignment x -> x is consistent; actions equal the basis.
  auto [g, acts] = LieAlgebra::generate_with_action(2, {E, F}, {E, F}, 2);
  REQUIRE(g->dim() == 3);
  REQUIRE(acts.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(acts[i] == g->basis()[i]);

  // Adjoint matrices of E and F; the bracket H = [E, F] must receive the
  // commutator of the two action matrices, i.e. ad H.
  Mat adE = m("0 0 1; -2 0 0; 0 0 0");
  Mat adF = m("0 -1 0; 0 0 0; 2 0 0");
  auto [g2, acts2] = LieAlgebra::generate_with_action(2, {E, F}, {adE, adF}, 3);
  REQUIRE(g2->dim() == 3);
  CHECK(acts2[0] == m("0 0 0; 0 2 0; 0 0 -2"));
  CHECK(acts2[1] == adE);
  CHECK(acts2[2] == adF);

  // A dependent generator with a conflicting action does not extend to a
  // linear map on the span.
  CHECK_THROWS_AS(LieAlgebra::generate_with_action(2, {E, E}, {E, F}, 2), ValidationError);
  CHECK_THROWS_AS(LieAlgebra::generate_with_action(2, {E}, {E, F}, 2), std::invalid_argument);
}

TEST_CASE("subalgebra handles are canonical spans") {
  LieAlgebraPtr g = sl2();
  SubalgebraHandle t = SubalgebraHandle::span_of(g, {v("1 0 0")});
  CHECK(t.dim() == 1);
  CHECK(t == SubalgebraHandle::from_matrices(g, {Rat(-3) * H}));
  CHECK(t.contains_coords(v("5 0 0")));
  CHECK_FALSE(t.contains_coords(v("0 1 0")));

  SubalgebraHandle b = SubalgebraHandle::from_matrices(g, {H + E, E});
  CHECK(b.dim() == 2);
  CHECK(b.coordinate_rows()[0] == v("1 0 0"));
  CHECK(b.coordinate_rows()[1] == v("0 1 0"));
  CHECK(b.contains(t));
  CHECK_FALSE(t.contains(b));

  // span{E, F} is not bracket-closed ([E, F] = H escapes).
  CHECK_THROWS_AS(SubalgebraHandle::span_of(g, {v("0 1 0"), v("0 0 1")}),
                  std::invalid_argument);
  // E11 is not in sl2.
  CHECK_THROWS_AS(SubalgebraHandle::from_matrices(g, {E11}), std::invalid_argument);

  CHECK(SubalgebraHandle::zero(g).dim() == 0);
  CHECK(SubalgebraHandle::full(g).dim() == 3);
  CHECK(SubalgebraHandle::full(g).materialize() == g->basis());

  LieAlgebraPtr ba = b.as_algebra();
  CHECK(ba->dim() == 2);
  CHECK(ba->basis()[0] == H);
  CHECK(ba->basis()[1] == E);
}

TEST_CASE("killing and trace forms") {
  LieAlgebraPtr g = sl2();
  CHECK(killing_form(*g) == m("8 0 0; 0 0 4; 0 4 0"));
  CHECK(trace_form(*g) == m("2 0 0; 0 0 1; 0 1 0"));

  // Killing form of the borel is degenerate in the nil direction.
  CHECK(killing_form(*borel2()) == m("4 0; 0 0"));

  // Symmetry on gl2.
  Mat kg = killing_form(*gl2());
  CHECK(kg == kg.transpose());
}

TEST_CASE("derived subalgebra, centre, solvability") {
  CHECK(derived_subalgebra(sl2()).dim() == 3);
  SubalgebraHandle db = derived_subalgebra(borel2());
  CHECK(db.dim() == 1);
  CHECK(db.materialize()[0] == E);
  CHECK(derived_subalgebra(heis3()).materialize()[0] == m("0 0 1; 0 0 0; 0 0 0"));

  CHECK(centre(sl2()).dim() == 0);
  SubalgebraHandle zg = centre(gl2());
  CHECK(zg.dim() == 1);
  CHECK(zg.materialize()[0] == I2);
  CHECK(centre(heis3()).materialize()[0] == m("0 0 1; 0 0 0; 0 0 0"));

  LieAlgebraPtr t2 = LieAlgebra::generate(2, {E11, E22});
  CHECK(is_abelian(SubalgebraHandle::full(t2)));
  CHECK_FALSE(is_abelian(SubalgebraHandle::full(sl2())));
  CHECK(is_abelian(SubalgebraHandle::zero(sl2())));

  CHECK(is_solvable(SubalgebraHandle::full(borel2())));
  CHECK(is_solvable(SubalgebraHandle::full(heis3())));
  CHECK(is_solvable(SubalgebraHandle::zero(sl2())));
  CHECK_FALSE(is_solvable(SubalgebraHandle::full(sl2())));
  CHECK_FALSE(is_solvable(SubalgebraHandle::full(gl2())));
}

TEST_CASE("solvable radical") {
  CHECK(solvable_radical(sl2()).dim() == 0);
  CHECK(solvable_radical(borel2()) == SubalgebraHandle::full(borel2()));
  CHECK(solvable_radical(aff1()) == SubalgebraHandle::full(aff1()));

  LieAlgebraPtr g = gl2();
  SubalgebraHandle rad = solvable_radical(g);
  CHECK(rad.dim() == 1);
  CHECK(rad.materialize()[0] == I2);
  CHECK(is_solvable(rad));

  // The radical is an ideal.
  for (std::size_t i = 0; i < g->dim(); ++i) {
    Vec bi(g->dim(), Rat(0));
    bi[i] = 1;
    for (const Vec& r : rad.coordinate_rows()) CHECK(rad.contains_coords(g->bracket(bi, r)));
  }

  // sl2 + a central line in a 3x3 realization.
  LieAlgebraPtr s = LieAlgebra::generate(
      3, {m("0 1 0; 0 0 0; 0 0 0"), m("0 0 0; 1 0 0; 0 0 0"), m("0 0 0; 0 0 0; 0 0 1")});
  REQUIRE(s->dim() == 4);
  SubalgebraHandle rs = solvable_radical(s);
  CHECK(rs.dim() == 1);
  CHECK(rs.materialize()[0] == m("0 0 0; 0 0 0; 0 0 1"));
}

TEST_CASE("unipotent radical") {
  SubalgebraHandle na = unipotent_radical(aff1());
  CHECK(na.dim() == 1);
  CHECK(na.materialize()[0] == E);

  CHECK(unipotent_radical(gl2()).dim() == 0);
  CHECK(unipotent_radical(sl2()).dim() == 0);
  CHECK(unipotent_radical(heis3()).dim() == 3);

  SubalgebraHandle nb = unipotent_radical(borel2());
  CHECK(nb.dim() == 1);
  CHECK(nb.materialize()[0] == E);

  // Everything in the unipotent radical is a nilpotent matrix.
  for (const Mat& x : unipotent_radical(heis3()).materialize()) CHECK(exactlin::is_nilpotent(x));
}

TEST_CASE("levi quotient") {
  LieAlgebraPtr g = aff1();
  QuotientMap q = levi_quotient(g);
  CHECK(q.source == g);
  CHECK(q.ideal == unipotent_radical(g));
  CHECK(q.quotient->dim() == 1);
  CHECK(q.projection.rows() == 1);
  CHECK(q.projection.cols() == 2);
  CHECK(q.push(SubalgebraHandle::full(g)) == SubalgebraHandle::full(q.quotient));
  CHECK(q.push(q.ideal) == SubalgebraHandle::zero(q.quotient));
  for (const Vec& r : q.ideal.coordinate_rows())
    CHECK(q.push_coords(r) == Vec(q.quotient->dim(), Rat(0)));
  CHECK_THROWS_AS(q.push(SubalgebraHandle::full(sl2())), std::invalid_argument);

  // Reductive algebras survive whole.
  QuotientMap qg = levi_quotient(gl2());
  CHECK(qg.ideal.dim() == 0);
  CHECK(qg.quotient->dim() == 4);
  CHECK(is_reductive_subalgebra(qg.quotient, SubalgebraHandle::full(qg.quotient)));
  CHECK(levi_quotient(sl2()).quotient->dim() == 3);

  // The borel collapses to its torus direction.
  CHECK(levi_quotient(borel2()).quotient->dim() == 1);
  // The heisenberg algebra collapses entirely.
  CHECK(levi_quotient(heis3()).quotient->dim() == 0);

  // A declared unipotent radical is validated against the computed one.
  QuotientMap qd = levi_quotient_with(g, unipotent_radical(g));
  CHECK(qd.quotient->dim() == 1);
  CHECK_THROWS_AS(levi_quotient_with(g, SubalgebraHandle::from_matrices(g, {E11})),
                  ValidationError);
  CHECK_THROWS_AS(levi_quotient_with(g, SubalgebraHandle::zero(g)), ValidationError);
}

TEST_CASE("centralizer and normalizer") {
  LieAlgebraPtr g = sl2();
  SubalgebraHandle e = SubalgebraHandle::span_of(g, {v("0 1 0")});
  SubalgebraHandle t = SubalgebraHandle::span_of(g, {v("1 0 0")});

  CHECK(normalizer(g, e) == SubalgebraHandle::from_matrices(g, {H, E}));
  CHECK(centralizer(g, t) == t);
  CHECK(normalizer(g, t) == t);

  LieAlgebraPtr gg = gl2();
  CHECK(centralizer(gg, SubalgebraHandle::full(gg)) == centre(gg));

  LieAlgebraPtr h = heis3();
  SubalgebraHandle z = centre(h);
  CHECK(normalizer(h, z) == SubalgebraHandle::full(h));
  CHECK(centralizer(h, z) == SubalgebraHandle::full(h));

  // s normalizes itself, and the centralizer sits inside the normalizer.
  for (const SubalgebraHandle& s : {e, t, SubalgebraHandle::full(g)}) {
    CHECK(normalizer(g, s).contains(s));
    CHECK(normalizer(g, s).contains(centralizer(g, s)));
  }
}

TEST_CASE("reductive subalgebras") {
  LieAlgebraPtr g = sl2();
  CHECK(is_reductive_subalgebra(g, SubalgebraHandle::span_of(g, {v("1 0 0")})));
  CHECK(is_reductive_subalgebra(g, SubalgebraHandle::full(g)));
  CHECK(is_reductive_subalgebra(g, SubalgebraHandle::zero(g)));
  CHECK_FALSE(is_reductive_subalgebra(g, SubalgebraHandle::from_matrices(g, {H, E})));
  CHECK_FALSE(is_reductive_subalgebra(g, SubalgebraHandle::span_of(g, {v("0 1 0")})));

  LieAlgebraPtr gg = gl2();
  CHECK(is_reductive_subalgebra(gg, SubalgebraHandle::full(gg)));
  CHECK(is_reductive_subalgebra(gg, SubalgebraHandle::from_matrices(gg, {E11, E22})));
  CHECK_FALSE(is_reductive_subalgebra(gg, SubalgebraHandle::from_matrices(gg, {E})));
}

TEST_CASE("toral and maximal toral subalgebras") {
  LieAlgebraPtr g = sl2();
  SubalgebraHandle t = SubalgebraHandle::span_of(g, {v("1 0 0")});
  CHECK(is_toral(g, t));
  CHECK(is_maximal_toral(g, t));

  CHECK(is_toral(g, SubalgebraHandle::zero(g)));
  CHECK_FALSE(is_maximal_toral(g, SubalgebraHandle::zero(g)));
  CHECK_FALSE(is_toral(g, SubalgebraHandle::span_of(g, {v("0 1 0")})));
  CHECK_FALSE(is_toral(g, SubalgebraHandle::from_matrices(g, {H, E})));

  // In a purely nilpotent algebra the zero subalgebra is maximal toral.
  LieAlgebraPtr h = heis3();
  CHECK(is_maximal_toral(h, SubalgebraHandle::zero(h)));

  LieAlgebraPtr gg = gl2();
  CHECK(is_toral(gg, SubalgebraHandle::from_matrices(gg, {I2})));
  CHECK_FALSE(is_maximal_toral(gg, SubalgebraHandle::from_matrices(gg, {I2})));
  CHECK(is_maximal_toral(gg, SubalgebraHandle::from_matrices(gg, {E11, E22})));

  // A nonsplit torus: the rotation generator is semisimple over Q, and
  // together with the identity it centralizes exactly itself.
  Mat R = m("0 1; -1 0");
  CHECK(is_toral(gg, SubalgebraHandle::from_matrices(gg, {R})));
  CHECK_FALSE(is_maximal_toral(gg, SubalgebraHandle::from_matrices(gg, {R})));
  CHECK(is_maximal_toral(gg, SubalgebraHandle::from_matrices(gg, {I2, R})));
}

TEST_CASE("structure data is conjugation equivariant") {
  Mat P = m("1 1; 0 1");
  Mat Pinv = m("1 -1; 0 1");
  LieAlgebraPtr g = aff1();
  std::vector<Mat> conj;
  for (const Mat& b : g->basis()) conj.push_back(P * b * Pinv);
  LieAlgebraPtr gc = LieAlgebra::generate(2, conj);
  REQUIRE(gc->dim() == g->dim());

  CHECK(solvable_radical(gc).dim() == solvable_radical(g).dim());
  SubalgebraHandle n = unipotent_radical(g);
  SubalgebraHandle nc = unipotent_radical(gc);
  std::vector<Mat> nconj;
  for (const Mat& b : n.materialize()) nconj.push_back(P * b * Pinv);
  CHECK(nc == SubalgebraHandle::from_matrices(gc, nconj));
  CHECK(levi_quotient(gc).quotient->dim() == levi_quotient(g).quotient->dim());
}
