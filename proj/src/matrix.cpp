#include "stratkit/matrix.hpp"

#include <algorithm>

#include "stratkit/error.hpp"

namespace stratkit {

Mat::Mat(const Field& f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols) {
  ensure(rows >= 0 && cols >= 0, "negative matrix shape");
  a_.assign(static_cast<size_t>(rows) * cols, Scalar::zero(f));
}

Mat Mat::identity(const Field& f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Mat Mat::fromColumns(const Field& f, int rows, const std::vector<Vec>& cols) {
  Mat m(f, rows, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    ensure(static_cast<int>(cols[j].size()) == rows, "column length mismatch");
    for (int i = 0; i < rows; ++i) m.at(i, static_cast<int>(j)) = cols[j][i];
  }
  return m;
}

Vec Mat::col(int j) const {
  Vec v;
  v.reserve(rows_);
  for (int i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

Vec Mat::row(int i) const {
  Vec v;
  v.reserve(cols_);
  for (int j = 0; j < cols_; ++j) v.push_back(at(i, j));
  return v;
}

void Mat::setCol(int j, const Vec& v) {
  ensure(static_cast<int>(v.size()) == rows_, "column length mismatch");
  for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Mat Mat::operator*(const Mat& o) const {
  ensure(cols_ == o.rows_, "matrix product shape mismatch");
  Mat r(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.isZero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& bkj = o.at(k, j);
        if (!bkj.isZero()) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  ensure(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shape mismatch");
  Mat r = *this;
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  ensure(rows_ == o.rows_ && cols_ == o.cols_, "matrix diff shape mismatch");
  Mat r = *this;
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
  return r;
}

Mat Mat::scaled(const Scalar& c) const {
  Mat r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

Mat Mat::transpose() const {
  Mat r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::hstack(const Mat& o) const {
  ensure(rows_ == o.rows_, "hstack row mismatch");
  Mat r(field_, rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

Mat Mat::vstack(const Mat& o) const {
  ensure(cols_ == o.cols_, "vstack column mismatch");
  Mat r(field_, rows_ + o.rows_, cols_);
  for (int j = 0; j < cols_; ++j) {
    for (int i = 0; i < rows_; ++i) r.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows_; ++i) r.at(rows_ + i, j) = o.at(i, j);
  }
  return r;
}

bool Mat::operator==(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t k = 0; k < a_.size(); ++k)
    if (a_[k] != o.a_[k]) return false;
  return true;
}

bool Mat::isZero() const {
  for (const auto& x : a_)
    if (!x.isZero()) return false;
  return true;
}

bool Mat::isIdentity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i == j ? !at(i, j).isOne() : !at(i, j).isZero()) return false;
  return true;
}

Vec operator*(const Mat& m, const Vec& v) {
  ensure(static_cast<int>(v.size()) == m.cols(), "apply shape mismatch");
  Vec r = zeroVec(m.field(), m.rows());
  for (int j = 0; j < m.cols(); ++j) {
    if (v[j].isZero()) continue;
    for (int i = 0; i < m.rows(); ++i) {
      const Scalar& a = m.at(i, j);
      if (!a.isZero()) r[i] += a * v[j];
    }
  }
  return r;
}

Vec addVec(const Vec& a, const Vec& b) {
  ensure(a.size() == b.size(), "vector sum length mismatch");
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec scaleVec(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

bool isZeroVec(const Vec& v) {
  for (const auto& x : v)
    if (!x.isZero()) return false;
  return true;
}

Vec zeroVec(const Field& f, int n) { return Vec(n, Scalar::zero(f)); }

Vec unitVec(const Field& f, int n, int i) {
  Vec v = zeroVec(f, n);
  v[i] = Scalar::one(f);
  return v;
}

Rref rref(const Mat& m) {
  Rref out{m, {}};
  Mat& r = out.r;
  int lead = 0;
  for (int col = 0; col < r.cols() && lead < r.rows(); ++col) {
    int piv = -1;
    for (int i = lead; i < r.rows(); ++i)
      if (!r.at(i, col).isZero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = 0; j < r.cols(); ++j) std::swap(r.at(piv, j), r.at(lead, j));
    Scalar inv = r.at(lead, col).inverse();
    for (int j = 0; j < r.cols(); ++j) r.at(lead, j) *= inv;
    for (int i = 0; i < r.rows(); ++i) {
      if (i == lead || r.at(i, col).isZero()) continue;
      Scalar f = r.at(i, col);
      for (int j = 0; j < r.cols(); ++j) r.at(i, j) -= f * r.at(lead, j);
    }
    out.pivots.push_back(col);
    ++lead;
  }
  return out;
}

int rank(const Mat& m) { return static_cast<int>(rref(m).pivots.size()); }

Mat kernelBasis(const Mat& m) {
  Rref e = rref(m);
  std::vector<bool> isPivot(m.cols(), false);
  for (int p : e.pivots) isPivot[p] = true;
  std::vector<Vec> cols;
  for (int freeCol = 0; freeCol < m.cols(); ++freeCol) {
    if (isPivot[freeCol]) continue;
    Vec v = zeroVec(m.field(), m.cols());
    v[freeCol] = Scalar::one(m.field());
    for (size_t row = 0; row < e.pivots.size(); ++row)
      v[e.pivots[row]] = -e.r.at(static_cast<int>(row), freeCol);
    cols.push_back(std::move(v));
  }
  return Mat::fromColumns(m.field(), m.cols(), cols);
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  ensure(a.rows() == b.rows(), "solve shape mismatch");
  Rref e = rref(a.hstack(b));
  for (int p : e.pivots)
    if (p >= a.cols()) return std::nullopt;  // inconsistent system
  Mat x(a.field(), a.cols(), b.cols());
  for (size_t row = 0; row < e.pivots.size(); ++row)
    for (int j = 0; j < b.cols(); ++j)
      x.at(e.pivots[row], j) = e.r.at(static_cast<int>(row), a.cols() + j);
  return x;
}

std::optional<Mat> inverse(const Mat& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  if (rank(a) != a.rows()) return std::nullopt;
  auto x = solve(a, Mat::identity(a.field(), a.rows()));
  ensure(x.has_value(), "full-rank solve failed");
  return x;
}

Span::Span(const Field& f, int ambient) : field_(f), ambient_(ambient) {}

Span::Span(const Mat& columns) : Span(columns.field(), columns.rows()) {
  addColumns(columns);
}

bool Span::add(const Vec& v) {
  ensure(static_cast<int>(v.size()) == ambient_, "span ambient mismatch");
  Vec w = v;
  for (size_t k = 0; k < cols_.size(); ++k) {
    const Scalar& c = w[pivots_[k]];
    if (c.isZero()) continue;
    Scalar f = c;
    for (int i = 0; i < ambient_; ++i) w[i] -= f * cols_[k][i];
  }
  int piv = -1;
  for (int i = 0; i < ambient_; ++i)
    if (!w[i].isZero()) {
      piv = i;
      break;
    }
  if (piv < 0) return false;
  Scalar inv = w[piv].inverse();
  for (int i = 0; i < ambient_; ++i) w[i] *= inv;
  // Re-reduce existing columns so the basis stays fully reduced (canonical).
  for (size_t k = 0; k < cols_.size(); ++k) {
    const Scalar c = cols_[k][piv];
    if (c.isZero()) continue;
    for (int i = 0; i < ambient_; ++i) cols_[k][i] -= c * w[i];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  size_t idx = static_cast<size_t>(pos - pivots_.begin());
  pivots_.insert(pos, piv);
  cols_.insert(cols_.begin() + idx, std::move(w));
  return true;
}

void Span::addColumns(const Mat& m) {
  for (int j = 0; j < m.cols(); ++j) add(m.col(j));
}

std::optional<Vec> Span::coordinates(const Vec& v) const {
  ensure(static_cast<int>(v.size()) == ambient_, "span ambient mismatch");
  Vec coeff;
  coeff.reserve(cols_.size());
  Vec w = v;
  for (size_t k = 0; k < cols_.size(); ++k) {
    Scalar c = w[pivots_[k]];
    coeff.push_back(c);
    if (c.isZero()) continue;
    for (int i = 0; i < ambient_; ++i) w[i] -= c * cols_[k][i];
  }
  if (!isZeroVec(w)) return std::nullopt;
  return coeff;
}

bool Span::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Span::containsAll(const Mat& m) const {
  for (int j = 0; j < m.cols(); ++j)
    if (!contains(m.col(j))) return false;
  return true;
}

Mat Span::basis() const { return Mat::fromColumns(field_, ambient_, cols_); }

Cokernel cokernel(const Field& f, int ambient, const Mat& subspaceBasis) {
  Span span(f, ambient);
  if (subspaceBasis.cols() > 0) {
    ensure(subspaceBasis.rows() == ambient, "cokernel ambient mismatch");
    span.addColumns(subspaceBasis);
  }
  Mat basis = span.basis();
  std::vector<bool> isPivot(ambient, false);
  for (int piv : span.pivots()) isPivot[piv] = true;
  Cokernel out;
  for (int i = 0; i < ambient; ++i)
    if (!isPivot[i]) out.freeRows.push_back(i);
  int q = static_cast<int>(out.freeRows.size());
  out.proj = Mat(f, q, ambient);
  for (int e = 0; e < ambient; ++e) {
    // Reduce the e-th standard vector modulo the subspace, keep free rows.
    Vec v = unitVec(f, ambient, e);
    for (int j = 0; j < basis.cols(); ++j) {
      const Scalar c = v[span.pivots()[j]];
      if (c.isZero()) continue;
      for (int i = 0; i < ambient; ++i) v[i] -= c * basis.at(i, j);
    }
    for (int k = 0; k < q; ++k) out.proj.at(k, e) = v[out.freeRows[k]];
  }
  out.section = Mat(f, ambient, q);
  for (int k = 0; k < q; ++k)
    out.section.at(out.freeRows[k], k) = Scalar::one(f);
  ensure((out.proj * out.section).isIdentity(), "cokernel section failure");
  if (basis.cols() > 0)
    ensure((out.proj * basis).isZero(), "cokernel projection failure");
  return out;
}

}  // namespace stratkit
