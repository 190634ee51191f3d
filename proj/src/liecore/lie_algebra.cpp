#include "afc/liecore/lie_algebra.hpp"

#include <deque>
#include <stdexcept>

namespace afc::liecore {

using exactlin::RowSpan;

std::shared_ptr<LieAlgebra> LieAlgebra::close_span(std::size_t ambient_dim,
                                                   const std::vector<Mat>& generators) {
  for (const Mat& m : generators)
    if (m.rows() != ambient_dim || m.cols() != ambient_dim)
      throw std::invalid_argument("generate: generator shape mismatch");
  std::size_t w = ambient_dim * ambient_dim;
  RowSpan span(w);
  std::vector<Mat> elems;  // independent representatives, insertion order
  auto add = [&](const Mat& m) {
    if (span.insert(m.vectorize())) elems.push_back(m);
  };
  for (const Mat& m : generators) add(m);
  // Worklist closure under commutator; each new element is bracketed
  // against everything already kept.
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (std::size_t i = 0; i < k; ++i) {
      add(commutator(elems[i], elems[k]));
      if (elems.size() > w) throw std::logic_error("bracket closure exceeded ambient bound");
    }
  auto g = std::shared_ptr<LieAlgebra>(new LieAlgebra());
  g->ambient_ = ambient_dim;
  for (const Vec& row : span.basis()) g->basis_.push_back(Mat::unvectorize(row, ambient_dim, ambient_dim));
  return g;
}

void LieAlgebra::finalize() {
  std::size_t w = ambient_ * ambient_;
  span_ = RowSpan(w);
  for (const Mat& b : basis_) span_.insert(b.vectorize());
  std::size_t d = basis_.size();
  sc_.assign(d * d, Vec());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto c = span_.coordinates(commutator(basis_[i], basis_[j]).vectorize());
      if (!c) throw std::logic_error("structure constants: bracket left the span");
      sc_[i * d + j] = std::move(*c);
    }
}

LieAlgebraPtr LieAlgebra::generate(std::size_t ambient_dim, const std::vector<Mat>& generators) {
  auto g = close_span(ambient_dim, generators);
  g->finalize();
  return g;
}

std::pair<LieAlgebraPtr, std::vector<Mat>> LieAlgebra::generate_with_action(
    std::size_t ambient_dim, const std::vector<Mat>& generators,
    const std::vector<Mat>& action_generators, std::size_t action_dim) {
  if (generators.size() != action_generators.size())
    throw std::invalid_argument("generate_with_action: generator count mismatch");
  for (const Mat& m : generators)
    if (m.rows() != ambient_dim || m.cols() != ambient_dim)
      throw std::invalid_argument("generate_with_action: generator shape mismatch");
  for (const Mat& a : action_generators)
    if (a.rows() != action_dim || a.cols() != action_dim)
      throw std::invalid_argument("generate_with_action: action shape mismatch");

  std::size_t w = ambient_dim * ambient_dim;
  std::size_t aw = action_dim * action_dim;
  RowSpan span(w, aw);
  std::vector<std::pair<Mat, Mat>> elems;
  // The payload rows undergo the same eliminations as the keys, so a
  // dependent key must come with a zero payload residual; anything else
  // means the action does not extend linearly (or fails to be a
  // homomorphism on brackets).
  auto add = [&](const Mat& m, const Mat& a) {
    auto residual = span.insert_tracked(m.vectorize(), a.vectorize());
    if (!residual) {
      elems.emplace_back(m, a);
      return;
    }
    if (!exactlin::vec_is_zero(*residual))
      throw ValidationError("action generators are inconsistent on the generated algebra");
  };
  for (std::size_t i = 0; i < generators.size(); ++i) add(generators[i], action_generators[i]);
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (std::size_t i = 0; i < k; ++i) {
      add(commutator(elems[i].first, elems[k].first),
          commutator(elems[i].second, elems[k].second));
      if (elems.size() > w) throw std::logic_error("bracket closure exceeded ambient bound");
    }

  auto g = std::shared_ptr<LieAlgebra>(new LieAlgebra());
  g->ambient_ = ambient_dim;
  std::vector<Mat> action;
  for (std::size_t i = 0; i < span.basis().size(); ++i) {
    g->basis_.push_back(Mat::unvectorize(span.basis()[i], ambient_dim, ambient_dim));
    action.push_back(Mat::unvectorize(span.payloads()[i], action_dim, action_dim));
  }
  g->finalize();
  return {g, std::move(action)};
}

Mat LieAlgebra::element(const Vec& coords) const {
  if (coords.size() != dim()) throw std::invalid_argument("element: coordinate length mismatch");
  Mat m(ambient_, ambient_);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) m += coords[i] * basis_[i];
  return m;
}

std::optional<Vec> LieAlgebra::coordinates(const Mat& m) const {
  if (m.rows() != ambient_ || m.cols() != ambient_) return std::nullopt;
  return span_.coordinates(m.vectorize());
}

bool LieAlgebra::contains(const Mat& m) const { return coordinates(m).has_value(); }

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  std::size_t d = dim();
  if (x.size() != d || y.size() != d) throw std::invalid_argument("bracket: coordinate length mismatch");
  Vec r(d, Rat(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j] == 0) continue;
      Rat c = x[i] * y[j];
      const Vec& s = structure(i, j);
      for (std::size_t k = 0; k < d; ++k) r[k] += c * s[k];
    }
  }
  return r;
}

Mat LieAlgebra::adjoint(const Vec& x) const {
  std::size_t d = dim();
  Mat ad(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Vec ej(d, Rat(0));
    ej[j] = 1;
    Vec col = bracket(x, ej);
    for (std::size_t i = 0; i < d; ++i) ad.at(i, j) = col[i];
  }
  return ad;
}

Mat LieAlgebra::adjoint_basis(std::size_t i) const {
  Vec e(dim(), Rat(0));
  e.at(i) = 1;
  return adjoint(e);
}

SubalgebraHandle SubalgebraHandle::span_of(LieAlgebraPtr parent, const std::vector<Vec>& coordinate_rows) {
  std::size_t d = parent->dim();
  RowSpan span(d);
  for (const Vec& r : coordinate_rows) {
    if (r.size() != d) throw std::invalid_argument("subalgebra: coordinate length mismatch");
    span.insert(r);
  }
  const auto& rows = span.basis();
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i; j < rows.size(); ++j)
      if (!span.contains(parent->bracket(rows[i], rows[j])))
        throw std::invalid_argument("subalgebra: span not closed under bracket");
  return SubalgebraHandle(std::move(parent), rows);
}

SubalgebraHandle SubalgebraHandle::from_matrices(LieAlgebraPtr parent, const std::vector<Mat>& mats) {
  std::vector<Vec> rows;
  for (const Mat& m : mats) {
    auto c = parent->coordinates(m);
    if (!c) throw std::invalid_argument("subalgebra: matrix outside the parent algebra");
    rows.push_back(std::move(*c));
  }
  return span_of(std::move(parent), rows);
}

SubalgebraHandle SubalgebraHandle::zero(LieAlgebraPtr parent) {
  return SubalgebraHandle(std::move(parent), {});
}

SubalgebraHandle SubalgebraHandle::full(LieAlgebraPtr parent) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < parent->dim(); ++i) {
    Vec e(parent->dim(), Rat(0));
    e[i] = 1;
    rows.push_back(std::move(e));
  }
  return SubalgebraHandle(std::move(parent), std::move(rows));
}

std::vector<Mat> SubalgebraHandle::materialize() const {
  std::vector<Mat> out;
  for (const Vec& r : rows_) out.push_back(parent_->element(r));
  return out;
}

bool SubalgebraHandle::contains_coords(const Vec& parent_coords) const {
  RowSpan span(parent_->dim());
  for (const Vec& r : rows_) span.insert(r);
  return span.contains(parent_coords);
}

bool SubalgebraHandle::contains(const SubalgebraHandle& other) const {
  if (other.parent_ == parent_) {
    RowSpan span(parent_->dim());
    for (const Vec& r : rows_) span.insert(r);
    for (const Vec& r : other.rows_) {
      if (!span.contains(r)) return false;
    }
    return true;
  }
  for (const Mat& m : other.materialize()) {
    auto c = parent_->coordinates(m);
    if (!c || !contains_coords(*c)) return false;
  }
  return true;
}

bool SubalgebraHandle::operator==(const SubalgebraHandle& o) const {
  if (parent_ == o.parent_) return rows_ == o.rows_;
  if (parent_->ambient_dim() != o.parent_->ambient_dim()) return false;
  return exactlin::same_mat_span(materialize(), o.materialize(), parent_->ambient_dim(),
                                 parent_->ambient_dim());
}

LieAlgebraPtr SubalgebraHandle::as_algebra() const {
  return LieAlgebra::generate(parent_->ambient_dim(), materialize());
}

Vec QuotientMap::push_coords(const Vec& source_coords) const {
  return projection.apply(source_coords);
}

SubalgebraHandle QuotientMap::push(const SubalgebraHandle& sub) const {
  if (sub.parent() != source) throw std::invalid_argument("push: subalgebra of a different algebra");
  std::vector<Vec> rows;
  for (const Vec& r : sub.coordinate_rows()) rows.push_back(push_coords(r));
  return SubalgebraHandle::span_of(quotient, rows);
}

}  // namespace afc::liecore
