#pragma once
#include "afc/exactlin/linalg.hpp"
#include "afc/exactlin/unipoly.hpp"

namespace afc::exactlin {

// Monic minimal polynomial, found as the first linear dependency among
// I, m, m^2, ...
UniPoly minimal_polynomial(const Mat& m);

// Diagonalizable over the algebraic closure, i.e. squarefree minimal
// polynomial. Decided entirely over Q.
bool is_semisimple(const Mat& m);

bool is_nilpotent(const Mat& m);

struct JordanChevalley {
  Mat s;           // semisimple part
  Mat n;           // nilpotent part, m = s + n, [s, n] = 0
  UniPoly s_poly;  // s = s_poly(m); witnesses that s and n are polynomials in m
};

// Additive Jordan decomposition, computed by Newton iteration against the
// squarefree part of the minimal polynomial in Q[x]/(min poly). No field
// extension is ever constructed.
JordanChevalley jordan_chevalley(const Mat& m);

}  // namespace afc::exactlin
