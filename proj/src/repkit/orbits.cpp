#include "afc/repkit/orbits.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace afc::repkit {

namespace {

// Eigenbasis coordinates of v, and back.
Vec to_eigen(const OneParamSubgroup& lambda, const Vec& v) {
  if (!lambda.basis_change) return v;
  auto inv = exactlin::inverse(*lambda.basis_change);
  if (!inv) throw std::invalid_argument("one-parameter subgroup: basis change not invertible");
  return inv->apply(v);
}

Vec from_eigen(const OneParamSubgroup& lambda, const Vec& u) {
  if (!lambda.basis_change) return u;
  return lambda.basis_change->apply(u);
}

}  // namespace

WeightSplit weight_split(const OneParamSubgroup& lambda, const Vec& v) {
  if (lambda.weights.size() != v.size())
    throw std::invalid_argument("weight_split: weight count does not match vector length");
  Vec u = to_eigen(lambda, v);
  std::map<long, Vec> parts;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    auto it = parts.try_emplace(lambda.weights[i], Vec(u.size(), Rat(0))).first;
    it->second[i] = u[i];
  }
  WeightSplit split;
  for (auto& [w, part] : parts) split.components.push_back({w, from_eigen(lambda, part)});
  return split;
}

std::optional<Vec> hm_limit(const OneParamSubgroup& lambda, const Vec& v) {
  WeightSplit split = weight_split(lambda, v);
  Vec limit(v.size(), Rat(0));
  for (const auto& comp : split.components) {
    if (comp.weight < 0) return std::nullopt;
    if (comp.weight == 0) limit = exactlin::vec_add(limit, comp.component);
  }
  return limit;
}

namespace {

// One inequality sum(coeffs[i] * x_i) >= rhs.
struct Ineq {
  std::vector<Rat> coeffs;
  Rat rhs;
};

void normalize(Ineq& q) {
  Rat scale = 0;
  for (const Rat& c : q.coeffs)
    if (c != 0) {
      scale = abs(c);
      break;
    }
  if (scale == 0 && q.rhs != 0) scale = abs(q.rhs);
  if (scale == 0) return;
  for (Rat& c : q.coeffs) c /= scale;
  q.rhs /= scale;
}

// Fourier-Motzkin feasibility for a system of >= inequalities.
bool fm_feasible(std::vector<Ineq> rows, std::size_t nvars) {
  for (std::size_t var = 0; var < nvars; ++var) {
    std::vector<Ineq> lower, upper, rest;
    for (Ineq& q : rows) {
      if (q.coeffs[var] > 0)
        lower.push_back(std::move(q));
      else if (q.coeffs[var] < 0)
        upper.push_back(std::move(q));
      else
        rest.push_back(std::move(q));
    }
    std::set<std::pair<std::vector<Rat>, Rat>> seen;
    auto push = [&](Ineq q) {
      normalize(q);
      if (seen.insert({q.coeffs, q.rhs}).second) rest.push_back(std::move(q));
    };
    for (const Ineq& r : rest) seen.insert({r.coeffs, r.rhs});
    for (const Ineq& lo : lower)
      for (const Ineq& up : upper) {
        // -coef(up) * lo + coef(lo) * up cancels the variable; both factors
        // positive, so >= is preserved.
        Rat a = -up.coeffs[var], b = lo.coeffs[var];
        Ineq q;
        q.coeffs.resize(nvars);
        for (std::size_t j = 0; j < nvars; ++j) q.coeffs[j] = a * lo.coeffs[j] + b * up.coeffs[j];
        q.rhs = a * lo.rhs + b * up.rhs;
        push(std::move(q));
      }
    rows = std::move(rest);
    // Early contradiction scan keeps intermediate systems small.
    for (const Ineq& q : rows) {
      bool all_zero = true;
      for (const Rat& c : q.coeffs)
        if (c != 0) {
          all_zero = false;
          break;
        }
      if (all_zero && q.rhs > 0) return false;
    }
  }
  for (const Ineq& q : rows)
    if (q.rhs > 0) return false;
  return true;
}

}  // namespace

bool origin_in_relative_interior(const std::vector<std::vector<Rat>>& points) {
  if (points.empty()) return false;
  std::size_t m = points.size();
  std::size_t rank = points[0].size();
  for (const auto& p : points)
    if (p.size() != rank) throw std::invalid_argument("relative interior: ragged points");
  if (m > 16) throw std::invalid_argument("relative interior: more than 16 support points");
  // 0 in relint conv(points) iff some combination sum(l_i p_i) = 0 has all
  // l_i >= 1 (strict positivity up to scaling).
  std::vector<Ineq> rows;
  for (std::size_t d = 0; d < rank; ++d) {
    Ineq eq;
    eq.coeffs.resize(m);
    for (std::size_t i = 0; i < m; ++i) eq.coeffs[i] = points[i][d];
    eq.rhs = 0;
    Ineq neg = eq;
    for (Rat& c : neg.coeffs) c = -c;
    rows.push_back(std::move(eq));
    rows.push_back(std::move(neg));
  }
  for (std::size_t i = 0; i < m; ++i) {
    Ineq q;
    q.coeffs.assign(m, Rat(0));
    q.coeffs[i] = 1;
    q.rhs = 1;
    rows.push_back(std::move(q));
  }
  return fm_feasible(std::move(rows), m);
}

bool torus_orbit_closed(const std::vector<std::vector<long>>& weights, const Vec& v) {
  if (exactlin::vec_is_zero(v)) throw std::invalid_argument("torus_orbit_closed: zero vector");
  if (weights.size() != v.size())
    throw std::invalid_argument("torus_orbit_closed: one weight vector per coordinate");
  std::size_t rank = weights.empty() ? 0 : weights[0].size();
  std::set<std::vector<Rat>> support;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (weights[i].size() != rank) throw std::invalid_argument("torus_orbit_closed: ragged weights");
    if (v[i] == 0) continue;
    std::vector<Rat> w(rank);
    for (std::size_t d = 0; d < rank; ++d) w[d] = weights[i][d];
    support.insert(std::move(w));
  }
  return origin_in_relative_interior(std::vector<std::vector<Rat>>(support.begin(), support.end()));
}

bool orbit_closed_metabelian2(long p, long q, const Vec& v) {
  if (v.size() != 2) throw std::invalid_argument("orbit_closed_metabelian2: vector length must be 2");
  if (v[0] == 0 && v[1] == 0) throw std::invalid_argument("orbit_closed_metabelian2: zero vector");
  if (v[1] != 0) return q == 0;
  return p == 0;
}

}  // namespace afc::repkit
