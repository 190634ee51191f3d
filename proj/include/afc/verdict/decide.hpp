#pragma once
#include "afc/repkit/representation.hpp"
#include "afc/verdict/certificate.hpp"

#include <optional>

namespace afc::verdict {

using liecore::LieAlgebraPtr;
using liecore::QuotientMap;
using liecore::SubalgebraHandle;

enum class Answer { affinely_closed, not_affinely_closed, out_of_scope };

const char* answer_str(Answer a);

struct Verdict {
  Answer answer = Answer::out_of_scope;
  Certificate certificate;
  std::string reason;  // set for out_of_scope
};

// The pair (G, H) at Lie level, with the caller's declaration that H is
// connected. The Lie-algebra test is sound only for connected H; the engine
// answers out_of_scope otherwise.
struct PairSpec {
  LieAlgebraPtr g;
  SubalgebraHandle h;
  bool connected = true;
};

// Reductive-group test on (l, k): affinely closed iff k is reductive and
// equals its normalizer in dimension (the connected reading of finite
// index). Requires l reductive; otherwise answers out_of_scope with a
// reason rather than guessing.
Verdict luna_test(const LieAlgebraPtr& l, const SubalgebraHandle& k);

// Full decision: reduce by the unipotent radical, push h through, run
// luna_test on the quotient. The certificate records the reduction step
// followed by the quotient-level checks.
Verdict is_affinely_closed(const PairSpec& p);
// Same, but validates and uses a caller-declared unipotent radical.
Verdict is_affinely_closed(const PairSpec& p, const SubalgebraHandle& declared_radical);

// Certificate that the orbit of x is closed, available when h fixes x and
// the pair decides affinely_closed (or x is fixed by the whole algebra).
// nullopt carries no claim in either direction. Throws
// std::invalid_argument when h does not fix x.
std::optional<Certificate> closed_orbit_certificate(const PairSpec& p,
                                                    const repkit::Representation& r, const Vec& x);

// Corollary for maximal tori: delegates to closed_orbit_certificate with
// h = t after checking maximality. Throws std::invalid_argument when t is
// not maximal toral or does not fix x.
std::optional<Certificate> torus_fixed_certificate(const LieAlgebraPtr& g,
                                                   const SubalgebraHandle& t,
                                                   const repkit::Representation& r, const Vec& x);

// Finite-generation classification of the coordinate ring of G/H as a
// G-algebra: every invariant subalgebra is finitely generated iff G/H is
// affinely closed. Requires the unipotent radical to act nontrivially
// (n not contained in h); otherwise out_of_scope.
struct ClassifyReport {
  Verdict verdict;
  std::string statement;
};
ClassifyReport classify_g_algebra(const PairSpec& p);

}  // namespace afc::verdict
