#include "afc/verdict/decide.hpp"

#include <stdexcept>

namespace afc::verdict {

using liecore::LieAlgebra;

const char* answer_str(Answer a) {
  switch (a) {
    case Answer::affinely_closed: return "affinely_closed";
    case Answer::not_affinely_closed: return "not_affinely_closed";
    case Answer::out_of_scope: return "out_of_scope";
  }
  return "out_of_scope";
}

namespace {

long sl(std::size_t v) { return static_cast<long>(v); }

CertStep radical_step(const LieAlgebraPtr& l, const SubalgebraHandle& n) {
  CertStep s;
  s.kind = "radical";
  s.ok = n.dim() == 0;
  s.dims = {{"ambient", sl(l->ambient_dim())},
            {"dim-l", sl(l->dim())},
            {"dim-unipotent-radical", sl(n.dim())}};
  s.witness = {{"l", l->basis()}};
  s.note = s.ok ? "the algebra is reductive: its unipotent radical is zero"
                : "the algebra is not reductive; the reductive-group test does not apply";
  return s;
}

CertStep reductivity_step(const LieAlgebraPtr& l, const SubalgebraHandle& k, bool ok) {
  CertStep s;
  s.kind = "reductivity";
  s.ok = ok;
  s.dims = {{"ambient", sl(l->ambient_dim())}, {"dim-k", sl(k.dim())}};
  s.witness = {{"l", l->basis()}, {"k", k.materialize()}};
  s.note = ok ? "the subalgebra is reductive (radical equals centre, centre semisimple)"
              : "the subalgebra is not reductive";
  return s;
}

CertStep normalizer_step(const LieAlgebraPtr& l, const SubalgebraHandle& k,
                         const SubalgebraHandle& norm) {
  CertStep s;
  s.kind = "normalizer-dimension";
  s.ok = norm.dim() == k.dim();
  s.dims = {{"ambient", sl(l->ambient_dim())},
            {"dim-k", sl(k.dim())},
            {"dim-normalizer", sl(norm.dim())}};
  s.witness = {{"l", l->basis()}, {"k", k.materialize()}, {"normalizer", norm.materialize()}};
  s.note = s.ok ? "the normalizer has the same dimension: finite index for connected subgroups"
                : "the normalizer is strictly larger than the subalgebra";
  return s;
}

}  // namespace

Verdict luna_test(const LieAlgebraPtr& l, const SubalgebraHandle& k) {
  Verdict v;
  if (k.parent() != l) {
    v.answer = Answer::out_of_scope;
    v.reason = "subalgebra handle does not belong to the given algebra";
    return v;
  }
  SubalgebraHandle n = SubalgebraHandle::zero(l);
  try {
    n = liecore::unipotent_radical(l);
  } catch (const ValidationError& e) {
    v.answer = Answer::out_of_scope;
    v.reason = e.what();
    return v;
  }
  CertStep rad = radical_step(l, n);
  v.certificate.steps.push_back(rad);
  if (!rad.ok) {
    v.answer = Answer::out_of_scope;
    v.reason = "the ambient algebra is not reductive";
    return v;
  }
  bool red = liecore::is_reductive_subalgebra(l, k);
  v.certificate.steps.push_back(reductivity_step(l, k, red));
  SubalgebraHandle norm = liecore::normalizer(l, k);
  v.certificate.steps.push_back(normalizer_step(l, k, norm));
  v.answer = (red && norm.dim() == k.dim()) ? Answer::affinely_closed : Answer::not_affinely_closed;
  return v;
}

namespace {

Verdict decide(const PairSpec& p, const SubalgebraHandle* declared) {
  Verdict v;
  if (!p.connected) {
    CertStep s;
    s.kind = "scope";
    s.ok = false;
    s.dims = {{"connected", 0}};
    s.note = "the subgroup is declared non-connected; the Lie-algebra test is unsound there";
    v.certificate.steps.push_back(std::move(s));
    v.answer = Answer::out_of_scope;
    v.reason = "non-connected subgroup declared: out of scope for the Lie-level test";
    return v;
  }
  if (p.h.parent() != p.g) {
    v.answer = Answer::out_of_scope;
    v.reason = "subalgebra handle does not belong to the given algebra";
    return v;
  }
  CertStep s;
  s.kind = "levi-reduction";
  s.dims = {{"ambient", sl(p.g->ambient_dim())}, {"dim-g", sl(p.g->dim())}};
  s.witness = {{"g", p.g->basis()}, {"h", p.h.materialize()}};
  try {
    SubalgebraHandle rad = liecore::solvable_radical(p.g);
    liecore::QuotientMap q = declared ? liecore::levi_quotient_with(p.g, *declared)
                                      : liecore::levi_quotient(p.g);
    SubalgebraHandle k = q.push(p.h);
    s.ok = true;
    s.dims.emplace_back("dim-radical", sl(rad.dim()));
    s.dims.emplace_back("dim-unipotent-radical", sl(q.ideal.dim()));
    s.dims.emplace_back("dim-levi", sl(q.quotient->dim()));
    s.dims.emplace_back("dim-h", sl(p.h.dim()));
    s.dims.emplace_back("dim-k", sl(k.dim()));
    s.witness.emplace_back("n", q.ideal.materialize());
    s.witness.emplace_back("l", q.quotient->basis());
    s.witness.emplace_back("k", k.materialize());
    s.note = "quotient by the unipotent radical; the verdict transfers along the reduction";
    v.certificate.steps.push_back(std::move(s));

    Verdict inner = luna_test(q.quotient, k);
    for (CertStep& st : inner.certificate.steps) v.certificate.steps.push_back(std::move(st));
    v.answer = inner.answer;
    v.reason = inner.reason;
    return v;
  } catch (const ValidationError& e) {
    s.ok = false;
    s.note = e.what();
    v.certificate.steps.push_back(std::move(s));
    v.answer = Answer::out_of_scope;
    v.reason = e.what();
    return v;
  }
}

}  // namespace

Verdict is_affinely_closed(const PairSpec& p) { return decide(p, nullptr); }

Verdict is_affinely_closed(const PairSpec& p, const SubalgebraHandle& declared_radical) {
  return decide(p, &declared_radical);
}

std::optional<Certificate> closed_orbit_certificate(const PairSpec& p,
                                                    const repkit::Representation& r, const Vec& x) {
  if (r.algebra() != p.g) throw std::invalid_argument("representation is not over the pair's algebra");
  if (x.size() != r.dim()) throw std::invalid_argument("vector length does not match the representation");
  std::vector<Mat> h_action;
  for (const Vec& row : p.h.coordinate_rows()) h_action.push_back(r.act(row));
  for (const Mat& a : h_action)
    if (!exactlin::vec_is_zero(a.apply(x)))
      throw std::invalid_argument("fixed-point precondition violated: the subalgebra moves the vector");

  CertStep fixed;
  fixed.kind = "fixed-point";
  fixed.ok = true;
  fixed.dims = {{"dim-h", sl(p.h.dim())}, {"rep-dim", sl(r.dim())}};
  fixed.witness = {{"action", h_action}, {"x", {Mat::col_vector(x)}}};
  fixed.note = "the subalgebra annihilates the vector";

  bool g_fixes = true;
  for (const Mat& a : r.action()) g_fixes = g_fixes && exactlin::vec_is_zero(a.apply(x));
  if (g_fixes) {
    Certificate cert;
    CertStep all;
    all.kind = "fixed-point";
    all.ok = true;
    all.dims = {{"dim-h", sl(p.g->dim())}, {"rep-dim", sl(r.dim())}};
    all.witness = {{"action", r.action()}, {"x", {Mat::col_vector(x)}}};
    all.note = "the whole algebra annihilates the vector";
    cert.steps.push_back(std::move(all));
    CertStep conc;
    conc.kind = "conclusion";
    conc.ok = true;
    conc.note = "the orbit is the single point itself, hence closed";
    cert.steps.push_back(std::move(conc));
    return cert;
  }

  Verdict v = is_affinely_closed(p);
  if (v.answer != Answer::affinely_closed) return std::nullopt;
  Certificate cert;
  cert.steps.push_back(std::move(fixed));
  for (CertStep& st : v.certificate.steps) cert.steps.push_back(std::move(st));
  CertStep conc;
  conc.kind = "conclusion";
  conc.ok = true;
  conc.note =
      "the coset space is affinely closed and the vector is fixed by the subalgebra, "
      "so the orbit, an image of that space, is closed";
  cert.steps.push_back(std::move(conc));
  return cert;
}

std::optional<Certificate> torus_fixed_certificate(const LieAlgebraPtr& g,
                                                   const SubalgebraHandle& t,
                                                   const repkit::Representation& r, const Vec& x) {
  if (!liecore::is_maximal_toral(g, t))
    throw std::invalid_argument("torus_fixed_certificate: the subalgebra is not maximal toral");
  return closed_orbit_certificate(PairSpec{g, t, true}, r, x);
}

ClassifyReport classify_g_algebra(const PairSpec& p) {
  ClassifyReport rep;
  try {
    SubalgebraHandle n = liecore::unipotent_radical(p.g);
    bool trivial_action = p.h.contains(n);
    if (trivial_action) {
      CertStep s;
      s.kind = "scope";
      s.ok = false;
      s.dims = {{"unipotent-radical-acts", 0}};
      s.note = "the unipotent radical acts trivially on the coset space; the classification "
               "requires a nontrivial action";
      rep.verdict.answer = Answer::out_of_scope;
      rep.verdict.reason = "unipotent radical acts trivially";
      rep.verdict.certificate.steps.push_back(std::move(s));
      rep.statement = "out of scope: the invariants of the unipotent radical are the whole ring";
      return rep;
    }
  } catch (const ValidationError& e) {
    rep.verdict.answer = Answer::out_of_scope;
    rep.verdict.reason = e.what();
    rep.statement = "out of scope: the structure computation failed validation";
    return rep;
  }
  rep.verdict = is_affinely_closed(p);
  switch (rep.verdict.answer) {
    case Answer::affinely_closed:
      rep.statement = "every invariant subalgebra of the coordinate ring is finitely generated";
      break;
    case Answer::not_affinely_closed:
      rep.statement = "not every invariant subalgebra of the coordinate ring is finitely generated";
      break;
    case Answer::out_of_scope:
      rep.statement = "out of scope: " + rep.verdict.reason;
      break;
  }
  return rep;
}

}  // namespace afc::verdict
