#include "stratkit/algebra.hpp"

#include <algorithm>
#include <map>

#include "stratkit/error.hpp"

namespace stratkit {

Vec AlgebraTable::mulVec(const Vec& x, const Vec& y) const {
  ensure(static_cast<int>(x.size()) == dim && static_cast<int>(y.size()) == dim,
         "vector dimension mismatch in product");
  Vec out = zeroVec(field, dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i].isZero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j].isZero()) continue;
      const Scalar c = x[i] * y[j];
      const Vec& p = products[i][j];
      for (int k = 0; k < dim; ++k)
        if (!p[k].isZero()) out[k] += c * p[k];
    }
  }
  return out;
}

Mat AlgebraTable::leftMult(const Vec& x) const {
  Mat m(field, dim, dim);
  for (int j = 0; j < dim; ++j) {
    Vec col = zeroVec(field, dim);
    for (int i = 0; i < dim; ++i) {
      if (x[i].isZero()) continue;
      const Vec& p = products[i][j];
      for (int k = 0; k < dim; ++k)
        if (!p[k].isZero()) col[k] += x[i] * p[k];
    }
    m.setCol(j, col);
  }
  return m;
}

Mat AlgebraTable::rightMult(const Vec& x) const {
  Mat m(field, dim, dim);
  for (int j = 0; j < dim; ++j) {
    Vec col = zeroVec(field, dim);
    for (int i = 0; i < dim; ++i) {
      if (x[i].isZero()) continue;
      const Vec& p = products[j][i];
      for (int k = 0; k < dim; ++k)
        if (!p[k].isZero()) col[k] += x[i] * p[k];
    }
    m.setCol(j, col);
  }
  return m;
}

int AlgebraTable::vertexIndex(const std::string& name) const {
  for (size_t i = 0; i < vertexNames.size(); ++i)
    if (vertexNames[i] == name) return static_cast<int>(i);
  fail(ErrorKind::UnknownVertex, "unknown vertex '" + name + "'");
}

AlgebraPtr buildAlgebra(const RewriteSystem& rs) {
  auto a = std::make_shared<AlgebraTable>();
  a->field = rs.field;
  a->dim = static_cast<int>(rs.normalForms.size());
  for (const auto& w : rs.normalForms) a->labels.push_back(wordName(rs.quiver, w));
  a->vertexNames = rs.quiver.vertices;

  std::map<Word, int, WordLess> index;
  for (int i = 0; i < a->dim; ++i) index.emplace(rs.normalForms[i], i);

  const Scalar one = Scalar::one(rs.field);
  for (size_t v = 0; v < rs.quiver.vertices.size(); ++v) {
    Vec coords = zeroVec(rs.field, a->dim);
    if (auto it = index.find(idempotentWord(static_cast<int>(v))); it != index.end())
      coords[it->second] = one;
    a->idem.push_back(coords);
  }
  a->unit = zeroVec(rs.field, a->dim);
  for (const auto& e : a->idem) a->unit = addVec(a->unit, e);

  a->products.assign(a->dim, std::vector<Vec>(a->dim));
  for (int i = 0; i < a->dim; ++i)
    for (int j = 0; j < a->dim; ++j) {
      Poly prod = Poly::monomial(rs.field, rs.normalForms[i], one)
                      .mul(Poly::monomial(rs.field, rs.normalForms[j], one));
      a->products[i][j] = coordinates(rs, normalForm(rs, prod));
    }
  return a;
}

void checkIdempotentFamily(const AlgebraTable& a) {
  Vec sum = zeroVec(a.field, a.dim);
  for (size_t x = 0; x < a.idem.size(); ++x) {
    for (size_t y = 0; y < a.idem.size(); ++y) {
      Vec p = a.mulVec(a.idem[x], a.idem[y]);
      const Vec want = (x == y) ? a.idem[x] : zeroVec(a.field, a.dim);
      ensure(p == want, "idempotent family is not orthogonal");
    }
    sum = addVec(sum, a.idem[x]);
  }
  ensure(sum == a.unit, "idempotents do not sum to the unit");
  for (int i = 0; i < a.dim; ++i) {
    Vec u = zeroVec(a.field, a.dim);
    u[i] = Scalar::one(a.field);
    ensure(a.mulVec(a.unit, u) == u && a.mulVec(u, a.unit) == u,
           "unit is not neutral");
  }
}

bool isAssociative(const AlgebraTable& a) {
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      const Vec& ij = a.products[i][j];
      for (int k = 0; k < a.dim; ++k) {
        // (u_i u_j) u_k
        Vec lhs = zeroVec(a.field, a.dim);
        for (int l = 0; l < a.dim; ++l)
          if (!ij[l].isZero())
            for (int m = 0; m < a.dim; ++m)
              lhs[m] += ij[l] * a.products[l][k][m];
        // u_i (u_j u_k)
        const Vec& jk = a.products[j][k];
        Vec rhs = zeroVec(a.field, a.dim);
        for (int l = 0; l < a.dim; ++l)
          if (!jk[l].isZero())
            for (int m = 0; m < a.dim; ++m)
              rhs[m] += jk[l] * a.products[i][l][m];
        if (!(lhs == rhs)) return false;
      }
    }
  return true;
}

AlgebraPtr opposite(const AlgebraTable& a) {
  auto o = std::make_shared<AlgebraTable>(a);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) o->products[i][j] = a.products[j][i];
  return o;
}

PeirceBlock peirceBlock(const AlgebraTable& a, int x, int y) {
  if (x < 0 || x >= static_cast<int>(a.idem.size()) || y < 0 ||
      y >= static_cast<int>(a.idem.size()))
    fail(ErrorKind::UnknownVertex, "vertex index out of range");
  Span span(a.field, a.dim);
  for (int i = 0; i < a.dim; ++i) {
    Vec u = zeroVec(a.field, a.dim);
    u[i] = Scalar::one(a.field);
    span.add(a.mulVec(a.idem[x], a.mulVec(u, a.idem[y])));
  }
  PeirceBlock out{span.basis(), {}};
  for (int c = 0; c < out.basis.cols(); ++c) {
    const Vec col = out.basis.col(c);
    // Name the column by its unique basis label when it is a standard
    // vector; otherwise render the combination.
    int hit = -1, nonzero = 0;
    for (int i = 0; i < a.dim; ++i)
      if (!col[i].isZero()) {
        ++nonzero;
        hit = i;
      }
    if (nonzero == 1 && col[hit].isOne()) {
      out.labels.push_back(a.labels[hit]);
    } else {
      std::string s;
      for (int i = 0; i < a.dim; ++i) {
        if (col[i].isZero()) continue;
        if (!s.empty()) s += " + ";
        s += col[i].isOne() ? a.labels[i] : col[i].str() + "*" + a.labels[i];
      }
      out.labels.push_back(s);
    }
  }
  return out;
}

Mat idealClosure(const AlgebraTable& a, const Mat& seed) {
  Span span(a.field, a.dim);
  std::vector<Vec> frontier;
  for (int c = 0; c < seed.cols(); ++c)
    if (span.add(seed.col(c))) frontier.push_back(seed.col(c));
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& v : frontier)
      for (int i = 0; i < a.dim; ++i) {
        Vec u = zeroVec(a.field, a.dim);
        u[i] = Scalar::one(a.field);
        Vec lv = a.mulVec(u, v), rv = a.mulVec(v, u);
        if (span.add(lv)) next.push_back(lv);
        if (span.add(rv)) next.push_back(rv);
      }
    frontier = std::move(next);
  }
  return span.basis();
}

AlgebraQuotient quotientByIdeal(const AlgebraPtr& a, const Mat& idealBasis) {
  Span span(a->field, a->dim);
  for (int c = 0; c < idealBasis.cols(); ++c) span.add(idealBasis.col(c));
  const Mat kernel = span.basis();
  for (int c = 0; c < kernel.cols(); ++c)
    for (int i = 0; i < a->dim; ++i) {
      Vec u = zeroVec(a->field, a->dim);
      u[i] = Scalar::one(a->field);
      ensure(span.contains(a->mulVec(u, kernel.col(c))) &&
                 span.contains(a->mulVec(kernel.col(c), u)),
             "subspace is not a two-sided ideal");
    }

  const Cokernel cok = cokernel(a->field, a->dim, kernel);
  auto q = std::make_shared<AlgebraTable>();
  q->field = a->field;
  q->dim = cok.proj.rows();
  q->vertexNames = a->vertexNames;
  for (int i = 0; i < q->dim; ++i)
    q->labels.push_back("[" + a->labels.at(cok.freeRows.at(i)) + "]");
  for (const auto& e : a->idem) q->idem.push_back(cok.proj * e);
  q->unit = cok.proj * a->unit;
  q->products.assign(q->dim, std::vector<Vec>(q->dim));
  for (int i = 0; i < q->dim; ++i)
    for (int j = 0; j < q->dim; ++j)
      q->products[i][j] =
          cok.proj * a->mulVec(cok.section.col(i), cok.section.col(j));
  return AlgebraQuotient{q, cok.proj, cok.section, kernel};
}

bool isAlgebraIso(const AlgebraTable& a, const AlgebraTable& b, const Mat& m) {
  if (m.rows() != b.dim || m.cols() != a.dim) return false;
  if (a.dim != b.dim || rank(m) != a.dim) return false;
  if (!((m * a.unit) == b.unit)) return false;
  if (a.vertexNames != b.vertexNames) return false;
  for (size_t x = 0; x < a.idem.size(); ++x)
    if (!((m * a.idem[x]) == b.idem[x])) return false;
  for (int i = 0; i < a.dim; ++i) {
    Vec ui = zeroVec(a.field, a.dim);
    ui[i] = Scalar::one(a.field);
    for (int j = 0; j < a.dim; ++j) {
      Vec uj = zeroVec(a.field, a.dim);
      uj[j] = Scalar::one(a.field);
      if (!((m * a.mulVec(ui, uj)) == b.mulVec(m.col(i), m.col(j))))
        return false;
    }
  }
  return true;
}

bool tableEquals(const AlgebraTable& a, const AlgebraTable& b) {
  return a.field == b.field && a.dim == b.dim && a.labels == b.labels &&
         a.vertexNames == b.vertexNames && a.idem == b.idem && a.unit == b.unit &&
         a.products == b.products;
}

}  // namespace stratkit
