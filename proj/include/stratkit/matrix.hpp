#pragma once

#include <optional>
#include <vector>

#include "stratkit/scalar.hpp"

namespace stratkit {

using Vec = std::vector<Scalar>;

// Dense exact matrix over a fixed ground field.  Vectors are columns and maps
// act from the left: y = A*x.
class Mat {
 public:
  Mat() = default;
  Mat(const Field& f, int rows, int cols);
  static Mat identity(const Field& f, int n);
  static Mat fromColumns(const Field& f, int rows, const std::vector<Vec>& cols);

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  Vec col(int j) const;
  Vec row(int i) const;
  void setCol(int j, const Vec& v);

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Scalar& c) const;
  Mat transpose() const;
  Mat hstack(const Mat& o) const;  // [this | o]
  Mat vstack(const Mat& o) const;  // [this ; o]
  bool operator==(const Mat& o) const;
  bool isZero() const;
  bool isIdentity() const;

 private:
  Field field_;
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

Vec operator*(const Mat& m, const Vec& v);
Vec addVec(const Vec& a, const Vec& b);
Vec scaleVec(const Scalar& c, const Vec& v);
bool isZeroVec(const Vec& v);
Vec zeroVec(const Field& f, int n);
Vec unitVec(const Field& f, int n, int i);

struct Rref {
  Mat r;
  std::vector<int> pivots;  // pivot column of each nonzero row
};
Rref rref(const Mat& m);
int rank(const Mat& m);
// Columns form a basis of the right null space; deterministic reduced form.
Mat kernelBasis(const Mat& m);
// X with A*X = B, free variables set to zero; nullopt when inconsistent.
std::optional<Mat> solve(const Mat& a, const Mat& b);
std::optional<Mat> inverse(const Mat& a);

// Incrementally built subspace of K^n in canonical reduced column form.
class Span {
 public:
  Span(const Field& f, int ambient);
  explicit Span(const Mat& columns);

  // Returns true when v enlarged the subspace.
  bool add(const Vec& v);
  void addColumns(const Mat& m);
  bool contains(const Vec& v) const;
  bool containsAll(const Mat& m) const;
  // Coordinates w.r.t. basis() — the reduced canonical columns, NOT the raw
  // vectors handed to add(). Callers keeping their own basis must solve
  // against it directly instead.
  std::optional<Vec> coordinates(const Vec& v) const;
  int dim() const { return static_cast<int>(cols_.size()); }
  int ambient() const { return ambient_; }
  const std::vector<int>& pivots() const { return pivots_; }
  Mat basis() const;  // columns, sorted by pivot row

 private:
  Field field_;
  int ambient_ = 0;
  std::vector<int> pivots_;       // strictly increasing pivot rows
  std::vector<Vec> cols_;         // cols_[k] has pivot 1 at pivots_[k]
};

// Data of the quotient map K^n -> K^n / span(basis): proj*basis == 0,
// proj*section == identity.  freeRows are the coordinates kept as
// representatives, so quotient basis elements lift to standard vectors.
struct Cokernel {
  Mat proj;
  Mat section;
  std::vector<int> freeRows;
};
Cokernel cokernel(const Field& f, int ambient, const Mat& subspaceBasis);

}  // namespace stratkit
