#pragma once

#include <string>
#include <vector>

#include "stratkit/module.hpp"
#include "stratkit/strat.hpp"

namespace stratkit {

// Projective resolution ... -> P_1 -> P_0 -> V -> 0, computed to a bound.
struct Resolution {
  std::vector<Module> terms;               // P_0 .. P_L
  std::vector<std::vector<int>> vertices;  // copies of Ae_x making up each term
  std::vector<Mat> diff;                   // diff[i]: P_{i+1} -> P_i
  std::vector<Mat> kernelIncl;             // syzygy basis inside each term
  Mat aug;                                 // P_0 -> V
  bool minimal = false;
  bool finite = false;  // the syzygy chain reached zero within the bound
};

// Minimal resolutions go through projective covers (tops over the radical);
// non-minimal ones cover by one copy of Ae_x per basis vector of e_x V.
Resolution projectiveResolution(const AlgebraPtr& a, const Module& v, int bound,
                                bool minimal);

struct ExtTable {
  std::vector<int> dims;  // dim Ext^n for 0 <= n <= bound
};

ExtTable extDims(const AlgebraPtr& a, const Module& v, const Module& w, int bound,
                 bool minimal = true);

struct TorTable {
  std::vector<int> dims;  // dim Tor_n for 0 <= n <= bound
};

// r lives over the opposite table of a (a right a-module); w over a.
TorTable torDims(const AlgebraPtr& a, const Module& r, const Module& w, int bound);

// Balanced tensor product r (x)_A w: quotient space with projection from the
// plain Kronecker space, index (i, j) -> i*dim(w)+j.
struct TensorSpace {
  int dim;
  Mat proj;     // full space -> tensor
  Mat section;  // tensor -> full space
};
TensorSpace tensorOver(const AlgebraPtr& a, const Module& r, const Module& w);

// B = A(Y) as a left A-module, and as a right A-module over the opposite table.
Module truncationAsLeftModule(const AlgebraPtr& a, const TruncationQuotient& tq);
Module truncationAsRightModule(const AlgebraPtr& a, const TruncationQuotient& tq);

struct DimensionVerdict {
  int value = 0;
  bool atLeast = false;  // true: report is "; >= value" (bound hit), never exact
};
std::string dimensionVerdictStr(const DimensionVerdict& d);

// Max q <= bound with Tor_q(A(Y), S) != 0 over the simple left A-modules.
DimensionVerdict rightFlatDimension(const AlgebraPtr& a, const Poset& p,
                                    const std::vector<int>& segment, int bound);

// Max projective dimension over the simples, truncated at the bound.
DimensionVerdict globalDimension(const AlgebraPtr& a, int bound);

struct EmbeddingCertificate {
  std::vector<int> segment;
  int bound = 0;
  DimensionVerdict flatDim;
  bool counitRecorded = false;  // only when the flat dimension resolved < bound
  struct UnitRow {
    std::string simple;
    int homDim = 0, dimW = 0;
    bool evalIso = false;
    std::vector<int> ext;  // Ext^q_A(B, W), q = 0..bound
    bool pass = false;
  };
  struct CounitRow {
    std::string simple;
    int tensorDim = 0, dimW = 0;
    bool multIso = false;
    std::vector<int> tor;  // Tor_q(B, W), q = 0..bound
    bool pass = false;
  };
  struct FullnessRow {
    std::string from, to;
    std::vector<int> extB, extA;
    bool pass = false;
  };
  std::vector<UnitRow> unit;
  std::vector<CounitRow> counit;
  std::vector<FullnessRow> fullness;
  bool pass = false;
};

// Requires check_hypotheses to PASS (HypothesisViolated otherwise); a row
// mismatch after that contradicts the certified hypotheses and is surfaced
// loudly as CertificateFailure.
EmbeddingCertificate embeddingCertificate(const AlgebraPtr& a, const Poset& p,
                                          const std::vector<int>& segment, int bound);

struct SpectralReport {
  bool collapse = false;
  std::vector<int> extBW;  // Ext^q_A(B, W) for q = 0..bound
  struct Row {
    int degree;
    int lhs;  // collapse: dim Ext^p_B(V, Hom_A(B,W)); else the corner sum
    int rhs;  // dim Ext^degree_A(V, W)
    bool pass;
  };
  std::vector<Row> rows;
  bool pass = false;
};

// v, w are A-modules that must be supported on the segment
// (NotTruncatedModule otherwise).  Collapse case checks corner equalities;
// otherwise only Euler-characteristic inequalities rhs <= sum are asserted.
SpectralReport spectralCornerCheck(const AlgebraPtr& a, const Poset& p,
                                   const std::vector<int>& segment, const Module& v,
                                   const Module& w, int bound);

}  // namespace stratkit
