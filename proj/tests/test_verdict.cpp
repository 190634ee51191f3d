#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "afc/verdict/certificate.hpp"
#include "afc/verdict/decide.hpp"

#include <string>
#include <vector>

using namespace afc;
using namespace afc::verdict;
using liecore::LieAlgebra;
using liecore::LieAlgebraPtr;
using liecore::SubalgebraHandle;
using repkit::Representation;
using exactlin::Mat;
using exactlin::Rat;
using exactlin::Vec;

namespace {

Mat m(const std::string& s) { return Mat::parse(s); }
Vec v(const std::string& s) { return exactlin::parse_vec(s); }

const Mat H = m("1 0; 0 -1");
const Mat E = m("0 1; 0 0");
const Mat F = m("0 0; 1 0");
const Mat E11 = m("1 0; 0 0");

LieAlgebraPtr sl2() { return LieAlgebra::generate(2, {E, F}); }
LieAlgebraPtr gl2() { return LieAlgebra::generate(2, {E11, E, F, m("0 0; 0 1")}); }
LieAlgebraPtr borel2() { return LieAlgebra::generate(2, {H, E}); }
LieAlgebraPtr aff1() { return LieAlgebra::generate(2, {E11, E}); }

std::vector<std::string> kinds(const Certificate& c) {
  std::vector<std::string> out;
  for (const CertStep& s : c.steps) out.push_back(s.kind);
  return out;
}

}  // namespace

TEST_CASE("reductive-pair test") {
  LieAlgebraPtr l = sl2();
  SubalgebraHandle t = SubalgebraHandle::span_of(l, {v("1 0 0")});

  Verdict ok = luna_test(l, t);
  CHECK(ok.answer == Answer::affinely_closed);
  CHECK(kinds(ok.certificate) ==
        std::vector<std::string>{"radical", "reductivity", "normalizer-dimension"});
  for (const CertStep& s : ok.certificate.steps) CHECK(s.ok);
  CHECK(replay(ok.certificate));

  // A nilpotent line is not reductive; the pair is rejected, not the input.
  LieAlgebraPtr gg = gl2();
  Verdict bad = luna_test(gg, SubalgebraHandle::from_matrices(gg, {E}));
  CHECK(bad.answer == Answer::not_affinely_closed);
  bool saw_failed_reductivity = false;
  for (const CertStep& s : bad.certificate.steps)
    if (s.kind == "reductivity" && !s.ok) saw_failed_reductivity = true;
  CHECK(saw_failed_reductivity);
  CHECK(replay(bad.certificate));

  // The whole algebra in itself: normalizer has the same dimension.
  Verdict full = luna_test(l, SubalgebraHandle::full(l));
  CHECK(full.answer == Answer::affinely_closed);

  // A torus normalized by more than itself: the nil line inside the borel
  // is caught by reductivity before any normalizer count matters.
  LieAlgebraPtr b = borel2();
  Verdict scope = luna_test(b, SubalgebraHandle::from_matrices(b, {H}));
  CHECK(scope.answer == Answer::out_of_scope);
  CHECK(scope.reason == "the ambient algebra is not reductive");
  REQUIRE(!scope.certificate.steps.empty());
  CHECK(scope.certificate.steps[0].kind == "radical");
  CHECK_FALSE(scope.certificate.steps[0].ok);
}

TEST_CASE("full decision through the reduction") {
  LieAlgebraPtr g = sl2();
  SubalgebraHandle t = SubalgebraHandle::span_of(g, {v("1 0 0")});
  Verdict vt = is_affinely_closed({g, t, true});
  CHECK(vt.answer == Answer::affinely_closed);
  CHECK(kinds(vt.certificate) ==
        std::vector<std::string>{"levi-reduction", "radical", "reductivity",
                                 "normalizer-dimension"});
  CHECK(replay(vt.certificate));

  // Torus inside the borel: the quotient identifies both sides.
  LieAlgebraPtr b = borel2();
  Verdict vb = is_affinely_closed({b, SubalgebraHandle::from_matrices(b, {H}), true});
  CHECK(vb.answer == Answer::affinely_closed);
  CHECK(replay(vb.certificate));

  // Trivial subgroup of the translation-carrying group: the quotient keeps
  // a torus, whose normalizer is too big for the trivial subgroup.
  LieAlgebraPtr a = aff1();
  Verdict va = is_affinely_closed({a, SubalgebraHandle::zero(a), true});
  CHECK(va.answer == Answer::not_affinely_closed);
  CHECK(replay(va.certificate));

  // Declared non-connected subgroups are out of scope by contract.
  Verdict vc = is_affinely_closed({g, t, false});
  CHECK(vc.answer == Answer::out_of_scope);
  CHECK(vc.reason == "non-connected subgroup declared: out of scope for the Lie-level test");
  REQUIRE(!vc.certificate.steps.empty());
  CHECK(vc.certificate.steps[0].kind == "scope");
  CHECK_FALSE(vc.certificate.steps[0].ok);

  // Mismatched handle parent.
  Verdict vm = is_affinely_closed({g, SubalgebraHandle::zero(a), true});
  CHECK(vm.answer == Answer::out_of_scope);
}

TEST_CASE("declared unipotent radical") {
  LieAlgebraPtr a = aff1();
  SubalgebraHandle h = SubalgebraHandle::from_matrices(a, {E11});
  SubalgebraHandle n = liecore::unipotent_radical(a);

  Verdict plain = is_affinely_closed({a, h, true});
  Verdict declared = is_affinely_closed({a, h, true}, n);
  CHECK(plain.answer == Answer::affinely_closed);
  CHECK(declared.answer == plain.answer);
  CHECK(declared.certificate == plain.certificate);

  Verdict wrong = is_affinely_closed({a, h, true}, SubalgebraHandle::from_matrices(a, {E11}));
  CHECK(wrong.answer == Answer::out_of_scope);
  CHECK(wrong.reason == "declared unipotent radical does not match the computed one");
}

TEST_CASE("closed-orbit certificates") {
  LieAlgebraPtr g = sl2();
  SubalgebraHandle t = SubalgebraHandle::span_of(g, {v("1 0 0")});
  Representation ad = Representation::adjoint(g);

  auto cert = closed_orbit_certificate({g, t, true}, ad, v("1 0 0"));
  REQUIRE(cert.has_value());
  CHECK(kinds(*cert) ==
        std::vector<std::string>{"fixed-point", "levi-reduction", "radical", "reductivity",
                                 "normalizer-dimension", "conclusion"});
  CHECK(replay(*cert));

  // The subgroup must fix the vector; E is moved by the torus.
  CHECK_THROWS_AS(closed_orbit_certificate({g, t, true}, ad, v("0 1 0")),
                  std::invalid_argument);

  // A vector fixed by everything is closed without any pair decision.
  Representation tr = Representation::trivial(g, 2);
  auto fixed = closed_orbit_certificate({g, t, true}, tr, v("1 1"));
  REQUIRE(fixed.has_value());
  CHECK(kinds(*fixed) == std::vector<std::string>{"fixed-point", "conclusion"});
  CHECK(replay(*fixed));

  // Negative pair decision carries no claim about the orbit.
  LieAlgebraPtr a = aff1();
  auto none = closed_orbit_certificate({a, SubalgebraHandle::zero(a), true},
                                       Representation::standard(a), v("0 1"));
  CHECK_FALSE(none.has_value());

  auto moved = closed_orbit_certificate({g, SubalgebraHandle::span_of(g, {v("0 1 0")}), true},
                                        Representation::standard(g), v("1 0"));
  CHECK_FALSE(moved.has_value());
}

TEST_CASE("torus-fixed certificates") {
  LieAlgebraPtr g = sl2();
  SubalgebraHandle t = SubalgebraHandle::span_of(g, {v("1 0 0")});
  Representation ad = Representation::adjoint(g);

  auto cert = torus_fixed_certificate(g, t, ad, v("1 0 0"));
  REQUIRE(cert.has_value());
  CHECK(cert->steps.size() == 6);
  CHECK(replay(*cert));

  // Non-maximal tori are rejected outright.
  CHECK_THROWS_AS(torus_fixed_certificate(g, SubalgebraHandle::zero(g), ad, v("1 0 0")),
                  std::invalid_argument);
  // So are vectors the torus moves.
  CHECK_THROWS_AS(torus_fixed_certificate(g, t, ad, v("0 1 0")), std::invalid_argument);

  LieAlgebraPtr gg = gl2();
  SubalgebraHandle d = SubalgebraHandle::from_matrices(gg, {E11, m("0 0; 0 1")});
  auto fixed = torus_fixed_certificate(gg, d, Representation::trivial(gg, 1), v("1"));
  REQUIRE(fixed.has_value());
  CHECK(replay(*fixed));
}

TEST_CASE("invariant-subalgebra classification") {
  LieAlgebraPtr b = borel2();
  ClassifyReport yes = classify_g_algebra({b, SubalgebraHandle::from_matrices(b, {H}), true});
  CHECK(yes.verdict.answer == Answer::affinely_closed);
  CHECK(yes.statement == "every invariant subalgebra of the coordinate ring is finitely generated");

  LieAlgebraPtr a = aff1();
  ClassifyReport no = classify_g_algebra({a, SubalgebraHandle::zero(a), true});
  CHECK(no.verdict.answer == Answer::not_affinely_closed);
  CHECK(no.statement ==
        "not every invariant subalgebra of the coordinate ring is finitely generated");

  // The unipotent radical must move something: n inside h is out of scope.
  ClassifyReport sub = classify_g_algebra({a, liecore::unipotent_radical(a), true});
  CHECK(sub.verdict.answer == Answer::out_of_scope);
  CHECK(sub.verdict.reason == "unipotent radical acts trivially");
  CHECK(sub.statement == "out of scope: the invariants of the unipotent radical are the whole ring");

  // Reductive ambient: n = 0 is always inside h.
  LieAlgebraPtr g = sl2();
  ClassifyReport red = classify_g_algebra({g, SubalgebraHandle::span_of(g, {v("1 0 0")}), true});
  CHECK(red.verdict.answer == Answer::out_of_scope);
}

TEST_CASE("certificates survive serialization and detect tampering") {
  LieAlgebraPtr g = sl2();
  SubalgebraHandle t = SubalgebraHandle::span_of(g, {v("1 0 0")});
  Certificate cert = is_affinely_closed({g, t, true}).certificate;
  REQUIRE(replay(cert));

  nlohmann::ordered_json j = to_json(cert);
  Certificate back = from_json(j);
  CHECK(back == cert);
  CHECK(replay(back));
  CHECK(to_json(back) == j);

  // Flipping a recorded outcome breaks the replay.
  Certificate flipped = cert;
  flipped.steps[1].ok = !flipped.steps[1].ok;
  CHECK_FALSE(replay(flipped));

  // So does editing a recorded dimension.
  Certificate dims = cert;
  REQUIRE(!dims.steps[0].dims.empty());
  dims.steps[0].dims[0].second += 1;
  CHECK_FALSE(replay(dims));

  // And so does corrupting a witness matrix.
  Certificate wit = cert;
  bool touched = false;
  for (CertStep& s : wit.steps) {
    if (!s.witness.empty() && !s.witness[0].second.empty()) {
      Mat& w = s.witness[0].second[0];
      w.at(0, 0) += 1;
      touched = true;
      break;
    }
  }
  REQUIRE(touched);
  CHECK_FALSE(replay(wit));
}

TEST_CASE("decision is conjugation invariant") {
  Mat P = m("1 1; 0 1");
  Mat Pinv = m("1 -1; 0 1");
  LieAlgebraPtr a = aff1();
  SubalgebraHandle h = SubalgebraHandle::from_matrices(a, {E11});

  std::vector<Mat> cg, ch;
  for (const Mat& x : a->basis()) cg.push_back(P * x * Pinv);
  for (const Mat& x : h.materialize()) ch.push_back(P * x * Pinv);
  LieAlgebraPtr ac = LieAlgebra::generate(2, cg);
  SubalgebraHandle hc = SubalgebraHandle::from_matrices(ac, ch);

  Verdict v0 = is_affinely_closed({a, h, true});
  Verdict v1 = is_affinely_closed({ac, hc, true});
  CHECK(v0.answer == v1.answer);
  CHECK(replay(v1.certificate));
  CHECK(v0.certificate.steps.size() == v1.certificate.steps.size());
}
