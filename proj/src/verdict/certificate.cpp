#include "afc/verdict/certificate.hpp"

#include <stdexcept>

namespace afc::verdict {

using liecore::LieAlgebra;
using liecore::LieAlgebraPtr;
using liecore::SubalgebraHandle;

long CertStep::dim(const std::string& name) const {
  for (const auto& [k, v] : dims)
    if (k == name) return v;
  throw std::out_of_range("certificate step has no dimension entry '" + name + "'");
}

const std::vector<Mat>* CertStep::find(const std::string& name) const {
  for (const auto& [k, v] : witness)
    if (k == name) return &v;
  return nullptr;
}

namespace {

LieAlgebraPtr rebuild(const CertStep& s, const std::string& witness_name,
                      const std::string& ambient_name) {
  const auto* mats = s.find(witness_name);
  if (!mats) throw std::invalid_argument("certificate step is missing witness '" + witness_name + "'");
  return LieAlgebra::generate(static_cast<std::size_t>(s.dim(ambient_name)), *mats);
}

bool spans_match(const std::vector<Mat>& a, const std::vector<Mat>& b, std::size_t amb) {
  return exactlin::same_mat_span(a, b, amb, amb);
}

bool replay_scope(const CertStep& s) {
  bool all = true;
  for (const auto& [k, v] : s.dims) all = all && v == 1;
  return s.ok == all;
}

bool replay_radical(const CertStep& s) {
  LieAlgebraPtr l = rebuild(s, "l", "ambient");
  SubalgebraHandle n = liecore::unipotent_radical(l);
  if (static_cast<long>(n.dim()) != s.dim("dim-unipotent-radical")) return false;
  return s.ok == (n.dim() == 0);
}

bool replay_reductivity(const CertStep& s) {
  LieAlgebraPtr l = rebuild(s, "l", "ambient");
  const auto* kmats = s.find("k");
  if (!kmats) return false;
  SubalgebraHandle k = SubalgebraHandle::from_matrices(l, *kmats);
  if (static_cast<long>(k.dim()) != s.dim("dim-k")) return false;
  return s.ok == liecore::is_reductive_subalgebra(l, k);
}

bool replay_normalizer(const CertStep& s) {
  LieAlgebraPtr l = rebuild(s, "l", "ambient");
  const auto* kmats = s.find("k");
  const auto* nmats = s.find("normalizer");
  if (!kmats || !nmats) return false;
  SubalgebraHandle k = SubalgebraHandle::from_matrices(l, *kmats);
  SubalgebraHandle norm = liecore::normalizer(l, k);
  if (static_cast<long>(k.dim()) != s.dim("dim-k")) return false;
  if (static_cast<long>(norm.dim()) != s.dim("dim-normalizer")) return false;
  if (!spans_match(norm.materialize(), *nmats, l->ambient_dim())) return false;
  return s.ok == (norm.dim() == k.dim());
}

bool replay_levi(const CertStep& s) {
  LieAlgebraPtr g = rebuild(s, "g", "ambient");
  const auto* hmats = s.find("h");
  if (!hmats) return false;
  try {
    SubalgebraHandle h = SubalgebraHandle::from_matrices(g, *hmats);
    SubalgebraHandle rad = liecore::solvable_radical(g);
    liecore::QuotientMap q = liecore::levi_quotient(g);
    if (!s.ok) return false;  // a recorded failure should not recompute cleanly
    if (static_cast<long>(g->dim()) != s.dim("dim-g")) return false;
    if (static_cast<long>(rad.dim()) != s.dim("dim-radical")) return false;
    if (static_cast<long>(q.ideal.dim()) != s.dim("dim-unipotent-radical")) return false;
    if (static_cast<long>(q.quotient->dim()) != s.dim("dim-levi")) return false;
    if (static_cast<long>(h.dim()) != s.dim("dim-h")) return false;
    const auto* nmats = s.find("n");
    const auto* lmats = s.find("l");
    const auto* kmats = s.find("k");
    if (!nmats || !lmats || !kmats) return false;
    if (!spans_match(q.ideal.materialize(), *nmats, g->ambient_dim())) return false;
    if (!spans_match(q.quotient->basis(), *lmats, q.quotient->ambient_dim())) return false;
    SubalgebraHandle k = q.push(h);
    if (static_cast<long>(k.dim()) != s.dim("dim-k")) return false;
    if (!spans_match(k.materialize(), *kmats, q.quotient->ambient_dim())) return false;
    return true;
  } catch (const ValidationError&) {
    // Recomputation fails exactly when the step recorded a failure.
    return !s.ok;
  }
}

bool replay_fixed_point(const CertStep& s) {
  const auto* action = s.find("action");
  const auto* xs = s.find("x");
  if (!action || !xs || xs->size() != 1) return false;
  Vec x = (*xs)[0].col(0);
  bool fixed = true;
  for (const Mat& a : *action) fixed = fixed && exactlin::vec_is_zero(a.apply(x));
  return s.ok == fixed;
}

}  // namespace

bool replay_step(const CertStep& step) {
  try {
    if (step.kind == "scope") return replay_scope(step);
    if (step.kind == "radical") return replay_radical(step);
    if (step.kind == "reductivity") return replay_reductivity(step);
    if (step.kind == "normalizer-dimension") return replay_normalizer(step);
    if (step.kind == "levi-reduction") return replay_levi(step);
    if (step.kind == "fixed-point") return replay_fixed_point(step);
    if (step.kind == "conclusion") return step.ok;
  } catch (const std::exception&) {
    return false;
  }
  return false;  // unknown kinds never replay
}

bool replay(const Certificate& cert) {
  for (const CertStep& s : cert.steps)
    if (!replay_step(s)) return false;
  return true;
}

nlohmann::ordered_json step_to_json(const CertStep& step) {
  nlohmann::ordered_json j;
  j["kind"] = step.kind;
  j["ok"] = step.ok;
  nlohmann::ordered_json dims;
  for (const auto& [k, v] : step.dims) dims[k] = v;
  j["dims"] = std::move(dims);
  nlohmann::ordered_json witness;
  for (const auto& [k, mats] : step.witness) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Mat& m : mats) {
      nlohmann::ordered_json mj;
      mj["rows"] = m.rows();
      mj["cols"] = m.cols();
      mj["data"] = m.rows() == 0 || m.cols() == 0 ? "" : m.str();
      arr.push_back(std::move(mj));
    }
    witness[k] = std::move(arr);
  }
  j["witness"] = std::move(witness);
  j["note"] = step.note;
  return j;
}

nlohmann::ordered_json to_json(const Certificate& cert) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CertStep& s : cert.steps) arr.push_back(step_to_json(s));
  nlohmann::ordered_json j;
  j["steps"] = std::move(arr);
  return j;
}

CertStep step_from_json(const nlohmann::ordered_json& j) {
  CertStep s;
  s.kind = j.at("kind").get<std::string>();
  s.ok = j.at("ok").get<bool>();
  for (const auto& [k, v] : j.at("dims").items()) s.dims.emplace_back(k, v.get<long>());
  for (const auto& [k, arr] : j.at("witness").items()) {
    std::vector<Mat> mats;
    for (const auto& mj : arr) {
      std::size_t rows = mj.at("rows").get<std::size_t>();
      std::size_t cols = mj.at("cols").get<std::size_t>();
      std::string data = mj.at("data").get<std::string>();
      mats.push_back(data.empty() ? Mat(rows, cols) : Mat::parse(data));
    }
    s.witness.emplace_back(k, std::move(mats));
  }
  s.note = j.at("note").get<std::string>();
  return s;
}

Certificate from_json(const nlohmann::ordered_json& j) {
  Certificate c;
  for (const auto& sj : j.at("steps")) c.steps.push_back(step_from_json(sj));
  return c;
}

}  // namespace afc::verdict
