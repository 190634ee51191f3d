#pragma once
#include "afc/liecore/lie_algebra.hpp"

namespace afc::liecore {

// Gram matrix of the Killing form kappa(x, y) = tr(ad x ad y) in the basis.
Mat killing_form(const LieAlgebra& g);
// Gram matrix of the ambient trace form (x, y) -> tr(xy).
Mat trace_form(const LieAlgebra& g);

SubalgebraHandle derived_subalgebra(const LieAlgebraPtr& g);
SubalgebraHandle centre(const LieAlgebraPtr& g);
bool is_abelian(const SubalgebraHandle& s);
bool is_solvable(const SubalgebraHandle& s);

// Largest solvable ideal, via the characteristic-zero criterion: the
// radical is the Killing-orthogonal complement of the derived subalgebra.
SubalgebraHandle solvable_radical(const LieAlgebraPtr& g);

// Nilradical-of-the-radical in the algebraic-group sense: the set of
// elements of the solvable radical that are nilpotent as matrices. Computed
// as rad(g) intersected with the radical of the ambient trace form, then
// validated (every basis element and random small combinations must be
// nilpotent matrices, and the set must be an ideal). Throws ValidationError
// when validation fails; for the Lie algebra of a connected algebraic
// group it never does.
SubalgebraHandle unipotent_radical(const LieAlgebraPtr& g);

// Quotient by the unipotent radical, realized faithfully as matrices:
// adjoint action on the quotient plus the coordinates of the
// abelianization, which is faithful because the quotient is reductive.
QuotientMap levi_quotient(const LieAlgebraPtr& g);
// Same, but trusting a caller-supplied unipotent radical after checking it
// is an ideal of nilpotent matrices containing none too few: it must equal
// rad(g) intersect {trace-form radical}. Throws ValidationError otherwise.
QuotientMap levi_quotient_with(const LieAlgebraPtr& g, const SubalgebraHandle& n);

SubalgebraHandle centralizer(const LieAlgebraPtr& g, const SubalgebraHandle& s);
// { x in g : [x, s] is contained in s }.
SubalgebraHandle normalizer(const LieAlgebraPtr& g, const SubalgebraHandle& s);

// k is reductive in the algebraic sense: its radical equals its centre and
// the centre acts semisimply, checked on a centre basis and on pairwise
// sums (squarefree minimal polynomials over Q).
bool is_reductive_subalgebra(const LieAlgebraPtr& g, const SubalgebraHandle& k);

// Abelian and every element semisimple.
bool is_toral(const LieAlgebraPtr& g, const SubalgebraHandle& t);
// Toral and not properly contained in a toral subalgebra of g; decided via
// the centralizer.
bool is_maximal_toral(const LieAlgebraPtr& g, const SubalgebraHandle& t);

}  // namespace afc::liecore
