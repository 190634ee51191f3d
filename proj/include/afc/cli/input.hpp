#pragma once
#include "afc/errors.hpp"
#include "afc/exactlin/matrix.hpp"
#include "afc/polyprobe/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace afc::cli {

using exactlin::Mat;
using exactlin::Vec;

// One fixture file in the line-oriented .acl format:
//
//   version 1
//   ambient 2
//   run structure decide
//   [flags]
//   connected true
//   [group]
//   1 0; 0 0        # one matrix per line, rows separated by ';'
//   0 1; 0 0
//   [subgroup]
//   1 0; 0 0
//
// Optional sections: [unipotent-radical], [torus] (matrix lines),
// [representation] (kind standard|adjoint|trivial|explicit, dim N,
// action <matrix>, vector <rationals>, lambda <integers>),
// [torus-orbit] (weight <integers> per coordinate, vector <rationals>),
// [metabelian] (p N, q N, vector <rationals>),
// [polynomial] (vars names..., nilpotent <matrix>, ideal <poly>, cap N,
// steps N, invariants N). '#' starts a comment anywhere.

struct RepresentationBlock {
  std::string kind = "standard";  // standard | adjoint | trivial | explicit
  std::size_t dim = 0;            // trivial only
  std::vector<Mat> action;        // explicit only, one matrix per [group] line
  std::optional<Vec> vector;
  std::vector<std::vector<long>> lambdas;  // diagonal 1-PS weight lists
};

struct TorusOrbitBlock {
  std::vector<std::vector<long>> weights;  // one character tuple per coordinate
  Vec vector;
};

struct MetabelianBlock {
  long p = 0;
  long q = 0;
  Vec vector;
};

struct PolynomialBlock {
  std::vector<std::string> vars;
  std::optional<Mat> nilpotent;
  std::vector<polyprobe::Poly> ideal;
  int cap = 12;
  int steps = 0;       // chain length, 0 = no chain section
  int invariants = 0;  // invariants through this degree, 0 = skip
};

struct InputDocument {
  int version = 1;
  std::size_t ambient = 0;
  bool has_ambient = false;
  std::vector<std::string> run;  // commands the corpus runner applies
  std::optional<bool> connected;
  std::optional<bool> algebraic;
  std::optional<std::vector<Mat>> group;
  std::optional<std::vector<Mat>> subgroup;
  std::optional<std::vector<Mat>> unipotent_radical;
  std::optional<std::vector<Mat>> torus;
  std::optional<RepresentationBlock> representation;
  std::optional<TorusOrbitBlock> torus_orbit;
  std::optional<MetabelianBlock> metabelian;
  std::optional<PolynomialBlock> polynomial;
};

// Throws ParseError with a 1-based line number on malformed input,
// including matrices that are not square of the ambient dimension.
InputDocument parse_document(const std::string& text);

// Reads and parses a file; errors mention the path.
InputDocument load_document(const std::string& path);

}  // namespace afc::cli
