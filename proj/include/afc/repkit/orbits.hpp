#pragma once
#include "afc/repkit/representation.hpp"

#include <optional>
#include <vector>

namespace afc::repkit {

// A one-parameter subgroup acting with t^{weights[i]} on the i-th
// coordinate of a declared eigenbasis. basis_change, when present, has the
// eigenbasis as its columns: standard coordinates v relate to eigenbasis
// coordinates u by v = basis_change * u.
struct OneParamSubgroup {
  std::vector<long> weights;
  std::optional<Mat> basis_change;
};

struct WeightComponent {
  long weight;
  Vec component;  // in the original coordinates
};

// Weight decomposition of a vector: strictly increasing weights, every
// component nonzero, components summing to the input.
struct WeightSplit {
  std::vector<WeightComponent> components;
};

WeightSplit weight_split(const OneParamSubgroup& lambda, const Vec& v);

// lim_{t->0} lambda(t) v: the weight-0 component when no negative weight
// carries a nonzero coordinate, nullopt otherwise.
std::optional<Vec> hm_limit(const OneParamSubgroup& lambda, const Vec& v);

// Orbit of v under a torus acting with weights[i] on coordinate i, closed
// iff 0 lies in the relative interior of the convex hull of the support
// weights. Decided exactly over Q by Fourier-Motzkin elimination; supports
// of more than 16 points are rejected (desk scale by design). Throws
// std::invalid_argument on v = 0 or length mismatch.
bool torus_orbit_closed(const std::vector<std::vector<long>>& weights, const Vec& v);

// Orbit of v = (x1, x2) under the metabelian group
// {(t^p, a; 0, t^q)} acting by (x1, x2) -> (t^p x1 + a x2, t^q x2),
// by exact case analysis:
//   x2 != 0, q != 0: orbit = k x k*, not closed;
//   x2 != 0, q  = 0: orbit = the line {(s, x2)}, closed;
//   x2  = 0 (so x1 != 0): torus orbit {(t^p x1, 0)}, closed iff p = 0.
// Throws std::invalid_argument on v = 0.
bool orbit_closed_metabelian2(long p, long q, const Vec& v);

// Exact relative-interior membership of the origin in conv(points); the
// engine behind torus_orbit_closed, exposed for the test oracles.
bool origin_in_relative_interior(const std::vector<std::vector<Rat>>& points);

}  // namespace afc::repkit
