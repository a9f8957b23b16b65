#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stratkit/algebra.hpp"

namespace stratkit {

enum class Side { Left, Right };

// Finite-dimensional module given by one action matrix per algebra basis
// element.  The action is always a LEFT action over the stored table; right
// modules are represented as left modules over the opposite table, with the
// side flag recording the intent.
struct Module {
  AlgebraPtr algebra;
  Side side = Side::Left;
  int dim = 0;
  std::vector<Mat> action;
  std::string name;

  Mat act(const Vec& coords) const;  // sum of coords[i] * action[i]
  // Exhaustive homomorphism check: structure constants, unit, idempotent
  // decomposition.  Throws Internal on violation.
  void verify() const;
};

struct ModuleMap {
  Module src, tgt;
  Mat mat;
  bool intertwines() const;
};

Module zeroModule(const AlgebraPtr& a, Side side = Side::Left);
Module regularModule(const AlgebraPtr& a);           // A as left module
Module regularProjective(const AlgebraPtr& a, int x);  // A e_x
// A as a right module over itself: left module over opposite(a).
Module rightRegularModule(const AlgebraPtr& a);
Module directSum(const Module& v, const Module& w);
// Transport along a surjective algebra map proj: A -> B (matrix dim b x
// dim a): a B-module becomes an A-module with unchanged underlying space.
Module inflate(const Module& overB, const AlgebraPtr& a, const Mat& proj);

std::vector<int> support(const Module& v);  // vertices with e_x V != 0

struct SubmoduleResult {
  Module sub;
  Mat inclusion;  // dim V x dim sub
};
SubmoduleResult submoduleGenerated(const Module& v, const std::vector<Vec>& gens);

struct QuotientResult {
  Module quo;
  Mat proj;     // dim quo x dim V
  Mat section;  // dim V x dim quo
};
// S given by basis columns; NotStable when S is not action-stable.
QuotientResult quotientModule(const Module& v, const Mat& s);

Mat radicalSubspace(const Module& v, const Mat& algebraRadical);  // rad(A)·V

// Basis of the intertwining space Hom(V, W); deterministic order.
std::vector<Mat> homSpace(const Module& v, const Module& w);

struct IsoResult {
  bool iso = false;
  bool decided = true;  // false: search was randomized and found nothing
  std::optional<Mat> witness;
  std::string reason;
};
IsoResult isIsomorphic(const Module& v, const Module& w);

// Jacobson radical with a machine-checked certificate: the returned subspace
// is verified to be a nilpotent two-sided ideal with semisimple quotient
// implied by the construction; nilIndex is the least k with J^k = 0.
struct RadicalResult {
  Mat basis;
  int nilIndex = 1;
};
RadicalResult radical(const AlgebraTable& a);

struct SimpleSummand {
  Module mod;  // simple module over A (action through A/rad)
  int multiplicity = 1;
  std::string label;
  int vertex = -1;  // aligned vertex when the K^X verdict holds
};

struct SimpleList {
  Mat radicalBasis;
  int radicalNilIndex = 1;
  std::vector<SimpleSummand> simples;
  bool productOfGroundFields = false;  // A/rad isomorphic to K^X, aligned
  AlgebraPtr semisimpleQuotient;       // A/rad
  Mat quotientProj;
  // Finds the summand labeled (e.g.) "S_e"; -1 when absent.
  int findLabel(const std::string& label) const;
};
SimpleList radicalAndSimples(const AlgebraPtr& a);

// sigma: linear map A -> A with sigma(uv) = sigma(v)sigma(u) (checked by the
// caller); the twisted dual acts by act(u) = act_V(sigma(u))^T.
Module twistedDual(const Module& v, const Mat& sigma);

}  // namespace stratkit
