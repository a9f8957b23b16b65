#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stratkit/algebra.hpp"
#include "stratkit/module.hpp"
#include "stratkit/parse.hpp"
#include "stratkit/poset.hpp"

namespace stratkit {

// Order on the vertex set from the presentation's cover declarations.
Poset posetFromPresentation(const Presentation& p);

// Quotient A(Y) = A / (ideal generated by the idempotents outside Y).
struct TruncationQuotient {
  std::vector<int> segment;  // sorted ascending
  AlgebraPtr table;          // B = A(Y), same vertex list (some idempotents zero)
  Mat proj;                  // A -> B, algebra surjection
  Mat section;               // linear section B -> A
  Mat kernel;                // basis of the ideal
};

// Fails with NotInitialSegment when the subset is not down-closed.
TruncationQuotient truncate(const AlgebraPtr& a, const Poset& p,
                            std::vector<int> segment);

// True iff the kernel ideal of the truncation acts as zero on v; equivalent
// to support(v) being contained in the segment.
bool actionFactorsThrough(const TruncationQuotient& tq, const Module& v);

// Reinterprets an A-module supported on the segment as a module over A(Y).
// Fails with NotTruncatedModule otherwise.
Module restrictToQuotient(const TruncationQuotient& tq, const Module& v);

struct StandardModule {
  int vertex;
  Module mod;     // over A, action factoring through A(down-closure)
  Vec generator;  // coordinates of the image of e_y
};

StandardModule standardModule(const AlgebraPtr& a, const Poset& p, int y);

struct WelldefRow {
  int vertex;
  bool pass;
  int dimStandard;           // dim A(down-closure of y) e_y
  int dimWide;               // dim A({x : not x > y}) e_y
  std::vector<int> outside;  // support hits outside the down-closure
};

// Single widest-segment check per vertex; sufficient for well-definedness.
std::vector<WelldefRow> checkStandardWelldefined(const AlgebraPtr& a, const Poset& p);

// Brute force over every (initial segment, maximal vertex) pair.
bool exhaustiveWelldefined(const AlgebraPtr& a, const Poset& p);

struct FiltrationCertificate {
  std::vector<int> layerVertex;  // bottom to top
  std::vector<Mat> chain;        // chain[i]: basis of V_{i+1} inside V
  std::vector<Mat> witness;      // witness[i]: lift of M_{y_i} -> V_{i+1}/V_i
  bool verified = false;
};

// Greedy descent; NoFiltrationFound / DivisibilityFailure on failure.
FiltrationCertificate standardFiltration(const AlgebraPtr& a, const Poset& p,
                                         const Module& v);

// Recomputes every certificate condition from scratch: stability, strict
// growth, dimension bookkeeping, and each layer isomorphism.
bool verifyFiltration(const AlgebraPtr& a, const Poset& p, const Module& v,
                      const FiltrationCertificate& cert, std::string* why = nullptr);

struct ExhaustiveFiltration {
  bool found;
  bool complete;  // search space fully enumerated (refusals are certified)
  std::vector<int> layerVertex;
};

// Chain search over explicit standard-module embeddings; dim V <= 8.
ExhaustiveFiltration exhaustiveFiltration(const AlgebraPtr& a, const Poset& p,
                                          const Module& v);

struct StratificationReport {
  std::vector<WelldefRow> welldef;
  struct ProjRow {
    int vertex;
    bool pass;
    std::vector<int> layers;  // bottom to top, on success
    std::string error;        // diagnostic, on failure
  };
  std::vector<ProjRow> filtrations;
  bool pass = false;
  std::string firstFailure;
};

StratificationReport checkHypotheses(const AlgebraPtr& a, const Poset& p);

struct HeredityStep {
  int vertex;     // removed maximal vertex
  int idealDim;   // dim of the ideal generated by its idempotent
  int multiplicity;  // n with ideal isomorphic to (Ae_x)^n, as verified
  std::vector<std::pair<int, int>> witnessCounts;  // (vertex y, picks from e_xAe_y)
  AlgebraPtr quotient;
  bool prefixConsistent;  // quotient matches the direct truncation
};

struct HeredityChainCertificate {
  std::vector<HeredityStep> steps;
  bool pass = false;
};

// Fails with HypothesisViolated when check_hypotheses does not pass, and
// WitnessFailure when a projectivity witness cannot be assembled.
HeredityChainCertificate heredityChain(const AlgebraPtr& a, const Poset& p);

// Vertex names -> indices, down-closing the selection; returns the closure
// and whether closing added anything.
std::pair<std::vector<int>, bool> resolveSegment(const AlgebraPtr& a, const Poset& p,
                                                 const std::vector<std::string>& names);

}  // namespace stratkit
