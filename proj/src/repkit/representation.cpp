#include "afc/repkit/representation.hpp"

#include <stdexcept>

namespace afc::repkit {

Representation Representation::make(LieAlgebraPtr algebra, std::vector<Mat> action) {
  std::size_t d = algebra->dim();
  if (action.size() != d) throw std::invalid_argument("representation: one action matrix per basis element");
  std::size_t n = action.empty() ? 0 : action[0].rows();
  for (const Mat& a : action)
    if (a.rows() != n || a.cols() != n) throw std::invalid_argument("representation: ragged action matrices");
  // Homomorphism property against the structure constants, exactly.
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Mat lhs(n, n);
      const Vec& s = algebra->structure(i, j);
      for (std::size_t k = 0; k < d; ++k)
        if (s[k] != 0) lhs += s[k] * action[k];
      if (!(lhs == commutator(action[i], action[j])))
        throw std::invalid_argument("representation: homomorphism property fails");
    }
  return Representation(std::move(algebra), n, std::move(action));
}

Representation Representation::standard(LieAlgebraPtr algebra) {
  if (algebra->dim() == 0) {
    std::size_t n = algebra->ambient_dim();
    return Representation(std::move(algebra), n, {});
  }
  std::vector<Mat> action = algebra->basis();
  return make(std::move(algebra), std::move(action));
}

Representation Representation::adjoint(LieAlgebraPtr algebra) {
  std::vector<Mat> action;
  for (std::size_t i = 0; i < algebra->dim(); ++i) action.push_back(algebra->adjoint_basis(i));
  return make(std::move(algebra), std::move(action));
}

Representation Representation::trivial(LieAlgebraPtr algebra, std::size_t dim) {
  std::vector<Mat> action(algebra->dim(), Mat(dim, dim));
  return Representation(std::move(algebra), dim, std::move(action));
}

Mat Representation::act(const Vec& coords) const {
  if (coords.size() != algebra_->dim()) throw std::invalid_argument("act: coordinate length mismatch");
  Mat m(dim_, dim_);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) m += coords[i] * action_[i];
  return m;
}

Representation dual(const Representation& r) {
  std::vector<Mat> action;
  for (const Mat& a : r.action()) action.push_back(-a.transpose());
  return Representation::make(r.algebra(), std::move(action));
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (a.algebra() != b.algebra()) throw std::invalid_argument("direct_sum: different algebras");
  std::size_t n = a.dim() + b.dim();
  std::vector<Mat> action;
  for (std::size_t k = 0; k < a.action().size(); ++k) {
    Mat m(n, n);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) m.at(i, j) = a.action()[k].at(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j) m.at(a.dim() + i, a.dim() + j) = b.action()[k].at(i, j);
    action.push_back(std::move(m));
  }
  return Representation::make(a.algebra(), std::move(action));
}

Representation tensor(const Representation& a, const Representation& b) {
  if (a.algebra() != b.algebra()) throw std::invalid_argument("tensor: different algebras");
  Mat ia = Mat::identity(a.dim()), ib = Mat::identity(b.dim());
  std::vector<Mat> action;
  for (std::size_t k = 0; k < a.action().size(); ++k)
    action.push_back(a.action()[k].kron(ib) + ia.kron(b.action()[k]));
  return Representation::make(a.algebra(), std::move(action));
}

SubalgebraHandle stabilizer_subalgebra(const Representation& r, const Vec& v) {
  if (v.size() != r.dim()) throw std::invalid_argument("stabilizer: vector length mismatch");
  std::size_t d = r.algebra()->dim();
  // Columns: coordinate directions of the algebra; rows: the dim(v) linear
  // conditions action(x) v = 0.
  Mat constraints(r.dim(), d);
  for (std::size_t k = 0; k < d; ++k) {
    Vec img = r.action()[k].apply(v);
    for (std::size_t i = 0; i < r.dim(); ++i) constraints.at(i, k) = img[i];
  }
  return SubalgebraHandle::span_of(r.algebra(), exactlin::kernel_basis(constraints));
}

std::pair<Representation, Vec> separate_scaling(const Representation& r, const Vec& v) {
  if (exactlin::vec_is_zero(v)) throw std::invalid_argument("separate_scaling: zero vector");
  Representation big = direct_sum(r, tensor(r, r));
  Vec w(r.dim() + r.dim() * r.dim(), Rat(0));
  for (std::size_t i = 0; i < r.dim(); ++i) w[i] = v[i];
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t j = 0; j < r.dim(); ++j) w[r.dim() + i * r.dim() + j] = v[i] * v[j];
  return {std::move(big), std::move(w)};
}

}  // namespace afc::repkit
