#include "afc/cli/report.hpp"

#include "afc/liecore/structure.hpp"
#include "afc/polyprobe/truncated.hpp"
#include "afc/repkit/orbits.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

namespace afc::cli {

using exactlin::rat_str;
using exactlin::vec_is_zero;
using exactlin::vec_str;
using liecore::LieAlgebra;
using liecore::LieAlgebraPtr;
using liecore::SubalgebraHandle;
using nlohmann::ordered_json;
using verdict::Answer;
using verdict::Certificate;
using verdict::Verdict;

namespace {

std::string yesno(bool b) { return b ? "yes" : "no"; }

void put_mats(std::string& out, ordered_json& j, const std::string& label,
              const std::vector<Mat>& mats) {
  out += label + ":\n";
  if (mats.empty()) out += "  (none)\n";
  ordered_json arr = ordered_json::array();
  for (const Mat& m : mats) {
    out += "  " + m.str() + "\n";
    arr.push_back(m.str());
  }
  j[label] = arr;
}

std::string cert_text(const Certificate& cert) {
  std::string out;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const verdict::CertStep& s = cert.steps[i];
    out += "  " + std::to_string(i + 1) + ". " + s.kind + " " + (s.ok ? "ok" : "failed");
    if (!s.dims.empty()) {
      out += " [";
      for (std::size_t k = 0; k < s.dims.size(); ++k) {
        if (k) out += " ";
        out += s.dims[k].first + "=" + std::to_string(s.dims[k].second);
      }
      out += "]";
    }
    out += "\n";
    if (!s.note.empty()) out += "     note: " + s.note + "\n";
  }
  return out;
}

void put_certificate(std::string& out, ordered_json& j, const Certificate& cert) {
  out += "certificate:\n" + cert_text(cert);
  j["certificate"] = verdict::to_json(cert);
}

LieAlgebraPtr build_group(const InputDocument& doc) {
  if (!doc.has_ambient) throw ParseError("missing ambient declaration");
  if (!doc.group) throw ParseError("missing [group] section");
  return LieAlgebra::generate(doc.ambient, *doc.group);
}

// Representation from the block, together with the algebra it acts for.
// Explicit actions are given per [group] generator line and extended to the
// closed algebra; everything else derives from the finished algebra.
std::pair<LieAlgebraPtr, repkit::Representation> build_representation(const InputDocument& doc) {
  const RepresentationBlock& rb = *doc.representation;
  if (rb.kind == "explicit") {
    if (!doc.has_ambient) throw ParseError("missing ambient declaration");
    if (!doc.group) throw ParseError("missing [group] section");
    if (rb.action.size() != doc.group->size())
      throw ParseError("explicit representation needs one action line per [group] line");
    if (rb.action.empty()) throw ParseError("explicit representation needs action lines");
    std::size_t d = rb.action[0].rows();
    for (const Mat& a : rb.action)
      if (a.rows() != d) throw ParseError("action matrices differ in size");
    auto [g, action] = LieAlgebra::generate_with_action(doc.ambient, *doc.group, rb.action, d);
    return {g, repkit::Representation::make(g, action)};
  }
  LieAlgebraPtr g = build_group(doc);
  if (rb.kind == "adjoint") return {g, repkit::Representation::adjoint(g)};
  if (rb.kind == "trivial") return {g, repkit::Representation::trivial(g, rb.dim)};
  return {g, repkit::Representation::standard(g)};
}

}  // namespace

Section cmd_structure(const InputDocument& doc) {
  Section sec;
  LieAlgebraPtr g = build_group(doc);
  SubalgebraHandle rad = liecore::solvable_radical(g);
  liecore::QuotientMap q = doc.unipotent_radical
      ? liecore::levi_quotient_with(g, SubalgebraHandle::from_matrices(g, *doc.unipotent_radical))
      : liecore::levi_quotient(g);

  std::string& t = sec.text;
  ordered_json& j = sec.json;
  j["command"] = "structure";
  t += "[structure]\n";
  t += "ambient " + std::to_string(doc.ambient) + "\n";
  j["ambient"] = doc.ambient;
  t += "dim g = " + std::to_string(g->dim()) + "\n";
  t += "dim radical = " + std::to_string(rad.dim()) + "\n";
  t += "dim unipotent radical = " + std::to_string(q.ideal.dim()) + "\n";
  t += "dim levi quotient = " + std::to_string(q.quotient->dim()) + "\n";
  j["dim g"] = g->dim();
  j["dim radical"] = rad.dim();
  j["dim unipotent radical"] = q.ideal.dim();
  j["dim levi quotient"] = q.quotient->dim();
  put_mats(t, j, "basis of g", g->basis());
  put_mats(t, j, "basis of radical", rad.materialize());
  put_mats(t, j, "basis of unipotent radical", q.ideal.materialize());
  put_mats(t, j, "basis of levi quotient (realized)", q.quotient->basis());
  return sec;
}

Section cmd_decide(const InputDocument& doc, RunContext& ctx) {
  Section sec;
  if (!doc.subgroup) throw ParseError("decide needs a [subgroup] section");
  if (!doc.connected) throw ParseError("decide needs a connected flag");
  LieAlgebraPtr g = build_group(doc);
  SubalgebraHandle h = SubalgebraHandle::from_matrices(g, *doc.subgroup);

  Verdict v;
  if (doc.algebraic && !*doc.algebraic) {
    verdict::CertStep scope;
    scope.kind = "scope";
    scope.ok = false;
    scope.dims = {{"connected", *doc.connected ? 1 : 0}, {"algebraic", 0}};
    scope.note = "the input declares a non-algebraic subgroup";
    v.answer = Answer::out_of_scope;
    v.reason = "the subgroup is declared non-algebraic; the Lie-level test does not apply";
    v.certificate.steps.push_back(scope);
  } else {
    verdict::PairSpec p{g, h, *doc.connected};
    v = doc.unipotent_radical
            ? verdict::is_affinely_closed(p, SubalgebraHandle::from_matrices(g, *doc.unipotent_radical))
            : verdict::is_affinely_closed(p);
  }
  ctx.certificates.push_back(v.certificate);

  std::string& t = sec.text;
  ordered_json& j = sec.json;
  j["command"] = "decide";
  t += "[decide]\n";
  t += "connected " + std::string(*doc.connected ? "true" : "false") + "\n";
  j["connected"] = *doc.connected;
  t += "dim g = " + std::to_string(g->dim()) + ", dim h = " + std::to_string(h.dim()) + "\n";
  j["dim g"] = g->dim();
  j["dim h"] = h.dim();
  t += "answer = " + std::string(verdict::answer_str(v.answer)) + "\n";
  j["answer"] = verdict::answer_str(v.answer);
  if (!v.reason.empty()) {
    t += "reason: " + v.reason + "\n";
    j["reason"] = v.reason;
  }
  put_certificate(t, j, v.certificate);
  sec.status = v.answer == Answer::out_of_scope ? 2 : 0;
  return sec;
}

Section cmd_orbit(const InputDocument& doc, RunContext& ctx) {
  Section sec;
  std::string& t = sec.text;
  ordered_json& j = sec.json;
  j["command"] = "orbit";
  t += "[orbit]\n";

  std::optional<std::pair<LieAlgebraPtr, repkit::Representation>> built;
  if (doc.representation) {
    if (!doc.representation->vector) throw ParseError("orbit needs a vector in [representation]");
    built = build_representation(doc);
    const repkit::Representation& r = built->second;
    const Vec& x = *doc.representation->vector;
    if (x.size() != r.dim())
      throw ParseError("vector length " + std::to_string(x.size()) +
                       " does not match representation dimension " + std::to_string(r.dim()));

    t += "representation " + doc.representation->kind + ", dim " + std::to_string(r.dim()) + "\n";
    j["representation"] = doc.representation->kind;
    j["representation dim"] = r.dim();
    t += "vector: " + vec_str(x) + "\n";
    j["vector"] = vec_str(x);

    SubalgebraHandle stab = repkit::stabilizer_subalgebra(r, x);
    t += "stabilizer dim = " + std::to_string(stab.dim()) + "\n";
    j["stabilizer dim"] = stab.dim();
    put_mats(t, j, "stabilizer basis", stab.materialize());

    ordered_json lams = ordered_json::array();
    for (const std::vector<long>& weights : doc.representation->lambdas) {
      if (weights.size() != r.dim())
        throw ParseError("lambda weight count does not match representation dimension");
      repkit::OneParamSubgroup lam{weights, std::nullopt};
      std::ostringstream head;
      head << "lambda";
      for (long w : weights) head << " " << w;
      t += head.str() + "\n";
      ordered_json lj;
      lj["weights"] = weights;
      repkit::WeightSplit split = repkit::weight_split(lam, x);
      ordered_json comps = ordered_json::array();
      for (const repkit::WeightComponent& c : split.components) {
        t += "  weight " + std::to_string(c.weight) + " component: " + vec_str(c.component) + "\n";
        ordered_json cj;
        cj["weight"] = c.weight;
        cj["component"] = vec_str(c.component);
        comps.push_back(cj);
      }
      lj["components"] = comps;
      std::optional<Vec> lim = repkit::hm_limit(lam, x);
      t += lim ? "  limit at 0: " + vec_str(*lim) + "\n" : "  limit at 0: none\n";
      lj["limit"] = lim ? ordered_json(vec_str(*lim)) : ordered_json(nullptr);
      lams.push_back(lj);
    }
    if (!doc.representation->lambdas.empty()) j["lambdas"] = lams;
  }

  if (doc.torus_orbit) {
    const TorusOrbitBlock& tb = *doc.torus_orbit;
    t += "torus orbit:\n";
    ordered_json tj;
    ordered_json ws = ordered_json::array();
    std::string wtext;
    for (const std::vector<long>& w : tb.weights) {
      std::ostringstream os;
      os << "(";
      for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
      os << ")";
      wtext += (wtext.empty() ? "" : " ") + os.str();
      ws.push_back(w);
    }
    t += "  weights: " + wtext + "\n";
    t += "  vector: " + vec_str(tb.vector) + "\n";
    tj["weights"] = ws;
    tj["vector"] = vec_str(tb.vector);
    if (vec_is_zero(tb.vector)) {
      t += "  closed: yes (zero vector, trivially closed)\n";
      tj["closed"] = true;
      tj["note"] = "zero vector, trivially closed";
    } else {
      bool closed = repkit::torus_orbit_closed(tb.weights, tb.vector);
      t += "  closed: " + yesno(closed) + "\n";
      tj["closed"] = closed;
    }
    j["torus orbit"] = tj;
  }

  if (doc.metabelian) {
    const MetabelianBlock& mb = *doc.metabelian;
    t += "metabelian orbit (p=" + std::to_string(mb.p) + ", q=" + std::to_string(mb.q) + "):\n";
    t += "  vector: " + vec_str(mb.vector) + "\n";
    ordered_json mj;
    mj["p"] = mb.p;
    mj["q"] = mb.q;
    mj["vector"] = vec_str(mb.vector);
    if (vec_is_zero(mb.vector)) {
      t += "  G-orbit closed: yes (zero vector, trivially closed)\n";
      t += "  L-orbit closed: yes (zero vector, trivially closed)\n";
      mj["g orbit closed"] = true;
      mj["l orbit closed"] = true;
      mj["note"] = "zero vector, trivially closed";
    } else {
      bool gclosed = repkit::orbit_closed_metabelian2(mb.p, mb.q, mb.vector);
      bool lclosed = repkit::torus_orbit_closed({{mb.p}, {mb.q}}, mb.vector);
      t += "  G-orbit closed: " + yesno(gclosed) + "\n";
      t += "  L-orbit closed: " + yesno(lclosed) + "\n";
      mj["g orbit closed"] = gclosed;
      mj["l orbit closed"] = lclosed;
    }
    j["metabelian"] = mj;
  }

  if (built && doc.torus) {
    const repkit::Representation& r = built->second;
    const Vec& x = *doc.representation->vector;
    SubalgebraHandle tor = SubalgebraHandle::from_matrices(built->first, *doc.torus);
    std::optional<Certificate> cert = verdict::torus_fixed_certificate(built->first, tor, r, x);
    t += "torus-fixed orbit certificate: ";
    if (cert) {
      t += "issued (orbit closed)\n";
      put_certificate(t, j, *cert);
      ctx.certificates.push_back(*cert);
      j["orbit closed"] = true;
    } else {
      t += "none (closedness not established by this criterion)\n";
      j["orbit closed"] = nullptr;
    }
  } else if (built && doc.subgroup) {
    const repkit::Representation& r = built->second;
    const Vec& x = *doc.representation->vector;
    SubalgebraHandle h = SubalgebraHandle::from_matrices(built->first, *doc.subgroup);
    bool fixes = true;
    for (const Vec& row : h.coordinate_rows())
      if (!vec_is_zero(r.act(row).apply(x))) fixes = false;
    if (fixes) {
      verdict::PairSpec p{built->first, h, doc.connected.value_or(true)};
      std::optional<Certificate> cert = verdict::closed_orbit_certificate(p, r, x);
      t += "fixed-vector orbit certificate: ";
      if (cert) {
        t += "issued (orbit closed)\n";
        put_certificate(t, j, *cert);
        ctx.certificates.push_back(*cert);
        j["orbit closed"] = true;
      } else {
        t += "none (closedness not established by this criterion)\n";
        j["orbit closed"] = nullptr;
      }
    } else {
      t += "subgroup does not fix the vector; no orbit certificate\n";
      j["orbit closed"] = nullptr;
    }
  }

  return sec;
}

Section cmd_polyprobe(const InputDocument& doc, const RunContext& ctx) {
  Section sec;
  if (!doc.polynomial) throw ParseError("polyprobe needs a [polynomial] section");
  const PolynomialBlock& pb = *doc.polynomial;
  if (pb.vars.empty()) throw ParseError("polynomial section needs a vars line");
  if (pb.ideal.empty() && !(pb.nilpotent && pb.invariants > 0))
    throw ParseError("polynomial section needs ideal lines or an invariants request");
  polyprobe::PolyRing ring(pb.vars);
  int cap = ctx.degree_cap.value_or(pb.cap);

  std::string& t = sec.text;
  ordered_json& j = sec.json;
  j["command"] = "polyprobe";
  t += "[polyprobe]\n";
  std::string vars;
  for (const std::string& v : pb.vars) vars += (vars.empty() ? "" : " ") + v;
  t += "variables " + vars + "\n";
  j["variables"] = pb.vars;
  t += "cap " + std::to_string(cap) + "\n";
  j["cap"] = cap;

  if (pb.nilpotent && pb.invariants > 0) {
    polyprobe::LinearAction act(pb.vars.size(), *pb.nilpotent);
    std::vector<polyprobe::Poly> invs = polyprobe::invariants_up_to_degree(act, pb.invariants);
    t += "invariants through degree " + std::to_string(pb.invariants) + ":\n";
    ordered_json arr = ordered_json::array();
    for (const polyprobe::Poly& f : invs) {
      t += "  " + ring.str(f) + "\n";
      arr.push_back(ring.str(f));
    }
    j["invariants"] = arr;
  }

  if (!pb.ideal.empty()) {
    polyprobe::TruncatedSubalgebra ts = polyprobe::build_axy(pb.ideal, cap);
    std::vector<long> probe = polyprobe::fg_probe(ts);
    t += "finite-generation probe (degree: dim, new generators):\n";
    ordered_json rows = ordered_json::array();
    for (int d = 0; d <= cap; ++d) {
      long fresh = probe[static_cast<std::size_t>(d)];
      t += "  " + std::to_string(d) + ": " + std::to_string(ts.dim_at(d)) + " " +
           std::to_string(fresh) + "\n";
      ordered_json row;
      row["degree"] = d;
      row["dim"] = ts.dim_at(d);
      row["new generators"] = fresh;
      rows.push_back(row);
    }
    j["probe"] = rows;

    if (pb.steps > 0) {
      polyprobe::ChainDemo chain = polyprobe::chain_demo(pb.ideal, pb.steps, cap);
      t += "chain of subalgebras (" + std::to_string(pb.steps) + " steps):\n";
      ordered_json cj = ordered_json::array();
      for (std::size_t i = 0; i < chain.members.size(); ++i) {
        t += "  step " + std::to_string(i + 1) + ": adjoin " + ring.str(chain.adjoined[i]) +
             ", dim " + std::to_string(chain.members[i].dim_at(cap)) + "\n";
        ordered_json stepj;
        stepj["adjoin"] = ring.str(chain.adjoined[i]);
        stepj["dim"] = chain.members[i].dim_at(cap);
        cj.push_back(stepj);
      }
      j["chain"] = cj;
      ordered_json wj = ordered_json::array();
      for (std::size_t i = 0; i < chain.witnesses.size(); ++i) {
        t += "  witness " + ring.str(chain.witnesses[i]) + ": in member " + std::to_string(i + 2) +
             ", not in member " + std::to_string(i + 1) + "\n";
        wj.push_back(ring.str(chain.witnesses[i]));
      }
      j["witnesses"] = wj;
    }
  }

  return sec;
}

Section run_command(const std::string& name, const InputDocument& doc, RunContext& ctx) {
  if (name == "structure") return cmd_structure(doc);
  if (name == "decide") return cmd_decide(doc, ctx);
  if (name == "orbit") return cmd_orbit(doc, ctx);
  if (name == "polyprobe") return cmd_polyprobe(doc, ctx);
  throw ParseError("unknown command '" + name + "'");
}

Section run_corpus(const std::string& dir, RunContext& ctx) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw ParseError(dir + ": not a directory");
  std::vector<fs::path> files;
  for (const fs::directory_entry& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".acl") files.push_back(e.path());
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });

  Section sec;
  sec.json["command"] = "corpus";
  ordered_json fixtures = ordered_json::array();
  for (const fs::path& f : files) {
    InputDocument doc = load_document(f.string());
    std::string name = f.filename().string();
    sec.text += "== " + name + " ==\n";
    ordered_json fj;
    fj["fixture"] = name;
    ordered_json sections = ordered_json::array();
    if (doc.run.empty()) sec.text += "(no commands)\n";
    for (const std::string& cmd : doc.run) {
      Section s = run_command(cmd, doc, ctx);
      sec.text += s.text;
      sections.push_back(s.json);
    }
    fj["sections"] = sections;
    fixtures.push_back(fj);
    sec.text += "\n";
  }
  sec.json["fixtures"] = fixtures;
  return sec;
}

std::size_t verify_certificates(const RunContext& ctx) {
  for (std::size_t i = 0; i < ctx.certificates.size(); ++i)
    if (!verdict::replay(ctx.certificates[i]))
      throw ValidationError("certificate " + std::to_string(i + 1) + " failed to replay");
  return ctx.certificates.size();
}

}  // namespace afc::cli
