#pragma once

#include <memory>
#include <string>
#include <vector>

#include "stratkit/matrix.hpp"
#include "stratkit/rewrite.hpp"

namespace stratkit {

// Finite-dimensional algebra with a fixed basis, structure constants and an
// idempotent family indexed by the quiver vertices.  The zero algebra
// (dim 0) is a valid table with empty coordinate vectors.
struct AlgebraTable {
  Field field;
  int dim = 0;
  std::vector<std::string> labels;       // basis element names
  std::vector<std::string> vertexNames;  // index set X of the family
  std::vector<Vec> idem;                 // coordinates of e_x per vertex
  Vec unit;                              // coordinates of 1 = sum of idem
  // products[i][j] = coordinates of (basis i) * (basis j)
  std::vector<std::vector<Vec>> products;

  Vec mulVec(const Vec& x, const Vec& y) const;
  Mat leftMult(const Vec& x) const;   // u -> x*u
  Mat rightMult(const Vec& x) const;  // u -> u*x
  int vertexIndex(const std::string& name) const;  // UnknownVertex if absent
};

using AlgebraPtr = std::shared_ptr<const AlgebraTable>;

// Materializes structure constants of the quotient algebra presented by rs.
AlgebraPtr buildAlgebra(const RewriteSystem& rs);

// Orthogonality and unit identities of the idempotent family.
void checkIdempotentFamily(const AlgebraTable& a);
// Exhaustive check of (uv)w = u(vw) over all basis triples.
bool isAssociative(const AlgebraTable& a);

AlgebraPtr opposite(const AlgebraTable& a);

struct PeirceBlock {
  Mat basis;                        // columns: basis of e_x A e_y
  std::vector<std::string> labels;  // rendered names of the columns
};
PeirceBlock peirceBlock(const AlgebraTable& a, int x, int y);

// Two-sided ideal generated by the given columns.
Mat idealClosure(const AlgebraTable& a, const Mat& seed);

struct AlgebraQuotient {
  AlgebraPtr table;
  Mat proj;     // algebra map A -> A/I
  Mat section;  // linear section of proj
  Mat kernel;   // basis of I
};
// Quotient by a two-sided ideal given as a subspace basis (checked).
AlgebraQuotient quotientByIdeal(const AlgebraPtr& a, const Mat& idealBasis);

// Checks that the linear map m (dim b x dim a) is a unital algebra
// isomorphism matching the idempotent families.
bool isAlgebraIso(const AlgebraTable& a, const AlgebraTable& b, const Mat& m);

bool tableEquals(const AlgebraTable& a, const AlgebraTable& b);

}  // namespace stratkit
