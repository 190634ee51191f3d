#pragma once
#include "afc/liecore/structure.hpp"

namespace afc::repkit {

using exactlin::Mat;
using exactlin::Rat;
using exactlin::Vec;
using liecore::LieAlgebraPtr;
using liecore::SubalgebraHandle;

// A finite-dimensional representation of a matrix Lie algebra: one action
// matrix per basis element of the algebra. make() verifies the homomorphism
// property on all basis pairs.
class Representation {
 public:
  static Representation make(LieAlgebraPtr algebra, std::vector<Mat> action);
  // The ambient realization itself.
  static Representation standard(LieAlgebraPtr algebra);
  static Representation adjoint(LieAlgebraPtr algebra);
  static Representation trivial(LieAlgebraPtr algebra, std::size_t dim);

  const LieAlgebraPtr& algebra() const { return algebra_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Mat>& action() const { return action_; }
  // Action matrix of the element with the given algebra coordinates.
  Mat act(const Vec& coords) const;

 private:
  Representation(LieAlgebraPtr algebra, std::size_t dim, std::vector<Mat> action)
      : algebra_(std::move(algebra)), dim_(dim), action_(std::move(action)) {}
  LieAlgebraPtr algebra_;
  std::size_t dim_;
  std::vector<Mat> action_;
};

// Contragredient: x acts by -transpose.
Representation dual(const Representation& r);
Representation direct_sum(const Representation& a, const Representation& b);
// Kronecker convention: (x.v) tensor w + v tensor (x.w), coordinates grouped
// as in Mat::kron.
Representation tensor(const Representation& a, const Representation& b);

// { x in g : x.v = 0 }.
SubalgebraHandle stabilizer_subalgebra(const Representation& r, const Vec& v);

// The pair (W + W tensor W, w + w tensor w). Any scaling that moves w moves
// w tensor w by the square factor, so the new vector has the same
// stabilizer but no longer admits nontrivial scalings along its line.
// Throws std::invalid_argument on v = 0.
std::pair<Representation, Vec> separate_scaling(const Representation& r, const Vec& v);

}  // namespace afc::repkit
