#pragma once
#include "afc/errors.hpp"
#include "afc/exactlin/linalg.hpp"
#include "afc/exactlin/matfun.hpp"

#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace afc::liecore {

using exactlin::Mat;
using exactlin::Rat;
using exactlin::Vec;

class LieAlgebra;
using LieAlgebraPtr = std::shared_ptr<const LieAlgebra>;

// A matrix Lie algebra, closed under commutator by construction. The basis
// is the canonical RREF basis of the span (row-major vectorization), so two
// algebras with equal span have identical bases, structure constants and
// derived data. Immutable after construction.
class LieAlgebra {
 public:
  // Closes the generators under commutator. Throws std::invalid_argument on
  // shape mismatch with ambient_dim.
  static LieAlgebraPtr generate(std::size_t ambient_dim, const std::vector<Mat>& generators);

  // Same closure, but each generator carries a matrix of an action on a
  // space of dimension action_dim; brackets of generators carry commutators
  // of their action matrices. Returns the algebra together with one action
  // matrix per basis element. Throws ValidationError when the assignment is
  // inconsistent on the span, i.e. does not extend to a linear map.
  static std::pair<LieAlgebraPtr, std::vector<Mat>> generate_with_action(
      std::size_t ambient_dim, const std::vector<Mat>& generators,
      const std::vector<Mat>& action_generators, std::size_t action_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Mat>& basis() const { return basis_; }

  Mat element(const Vec& coords) const;
  std::optional<Vec> coordinates(const Mat& m) const;
  bool contains(const Mat& m) const;

  // [basis_i, basis_j] in coordinates.
  const Vec& structure(std::size_t i, std::size_t j) const { return sc_[i * dim() + j]; }
  Vec bracket(const Vec& x, const Vec& y) const;
  // ad(x) as a dim x dim matrix acting on coordinates.
  Mat adjoint(const Vec& x) const;
  Mat adjoint_basis(std::size_t i) const;

 private:
  LieAlgebra() = default;
  static std::shared_ptr<LieAlgebra> close_span(std::size_t ambient_dim,
                                                const std::vector<Mat>& generators);
  void finalize();  // structure constants + span index

  std::size_t ambient_ = 0;
  std::vector<Mat> basis_;
  std::vector<Vec> sc_;  // dim*dim entries, row-major over (i, j)
  exactlin::RowSpan span_{0};
};

// A subalgebra of a fixed parent, stored as canonical RREF coordinate rows.
// Handles with the same parent compare equal iff they have the same span.
class SubalgebraHandle {
 public:
  // coordinate_rows live in parent coordinates. Checks bracket closure.
  static SubalgebraHandle span_of(LieAlgebraPtr parent, const std::vector<Vec>& coordinate_rows);
  // Spans the given ambient matrices inside the parent. Throws
  // std::invalid_argument if one of them lies outside the parent.
  static SubalgebraHandle from_matrices(LieAlgebraPtr parent, const std::vector<Mat>& mats);
  static SubalgebraHandle zero(LieAlgebraPtr parent);
  static SubalgebraHandle full(LieAlgebraPtr parent);

  const LieAlgebraPtr& parent() const { return parent_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec>& coordinate_rows() const { return rows_; }
  std::vector<Mat> materialize() const;
  bool contains_coords(const Vec& parent_coords) const;
  bool contains(const SubalgebraHandle& other) const;
  bool operator==(const SubalgebraHandle& o) const;

  // The subalgebra as a standalone algebra in the parent's ambient
  // realization. Its basis equals materialize() up to canonicalization.
  LieAlgebraPtr as_algebra() const;

 private:
  SubalgebraHandle(LieAlgebraPtr parent, std::vector<Vec> rows)
      : parent_(std::move(parent)), rows_(std::move(rows)) {}
  LieAlgebraPtr parent_;
  std::vector<Vec> rows_;  // canonical RREF rows in parent coordinates
};

// Projection of an algebra onto its quotient by an ideal, realized again as
// a matrix algebra. projection maps source coordinates onto quotient
// coordinates; sections are not part of the contract.
struct QuotientMap {
  LieAlgebraPtr source;
  SubalgebraHandle ideal;
  LieAlgebraPtr quotient;
  Mat projection;  // quotient->dim() x source->dim()

  Vec push_coords(const Vec& source_coords) const;
  SubalgebraHandle push(const SubalgebraHandle& sub) const;
};

}  // namespace afc::liecore
