#include <doctest.h>

#include <algorithm>
#include <functional>
#include <optional>

#include "stratkit/corpus.hpp"
#include "stratkit/error.hpp"
#include "stratkit/homology.hpp"
#include "stratkit/parse.hpp"

using namespace stratkit;

namespace {

struct Setup {
  AlgebraPtr a;
  Poset p;
  SimpleList sl;
};

Setup load(const std::string& name) {
  const Presentation pres = parsePresentation(corpusFile(name));
  const AlgebraPtr a = buildAlgebra(completeRewriting(pres, 8));
  return {a, posetFromPresentation(pres), radicalAndSimples(a)};
}

std::optional<ErrorKind> kindOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

const Module& simple(const Setup& s, const std::string& label) {
  const int i = s.sl.findLabel(label);
  REQUIRE(i >= 0);
  return s.sl.simples[i].mod;
}

}  // namespace

TEST_CASE("minimal resolution of S_e starts at Ae with syzygy cover Af + Ae") {
  const Setup s = load("sl2_z0");
  const Resolution res = projectiveResolution(s.a, simple(s, "S_e"), 6, true);
  CHECK(res.minimal);
  CHECK_FALSE(res.finite);  // infinite resolution truncated at the bound
  REQUIRE(res.terms.size() == 7);
  CHECK(res.terms[0].dim == 4);
  CHECK(res.vertices[0] == std::vector<int>{0});
  CHECK(res.terms[1].dim == 6);
  std::vector<int> v1 = res.vertices[1];
  std::sort(v1.begin(), v1.end());
  CHECK(v1 == std::vector<int>{0, 1});  // top of rad Ae = S_e + S_f
  CHECK(rank(res.aug) == 1);
  CHECK(rank(res.diff[0]) == 3);  // image = rad Ae
  CHECK((res.aug * res.diff[0]).isZero());
  for (size_t i = 1; i < res.diff.size(); ++i)
    CHECK((res.diff[i - 1] * res.diff[i]).isZero());
}

TEST_CASE("the first syzygy of S_f is the simple S_e") {
  const Setup s = load("sl2_z0");
  const Resolution res = projectiveResolution(s.a, simple(s, "S_f"), 2, true);
  CHECK(res.terms[0].dim == 2);  // Af
  CHECK(res.vertices[0] == std::vector<int>{1});
  // rad Af = span{c} = S_e, so the next cover is Ae
  CHECK(res.vertices[1] == std::vector<int>{0});
  CHECK(res.terms[1].dim == 4);
}

TEST_CASE("frozen self-extension tables of the z = 0 simples") {
  const Setup s = load("sl2_z0");
  const Module& se = simple(s, "S_e");
  const Module& sf = simple(s, "S_f");
  CHECK(extDims(s.a, se, se, 6).dims == std::vector<int>{1, 1, 1, 1, 1, 1, 1});
  CHECK(extDims(s.a, se, sf, 6).dims == std::vector<int>{0, 1, 1, 1, 1, 1, 1});
  CHECK(extDims(s.a, sf, se, 6).dims == std::vector<int>{0, 1, 1, 1, 1, 1, 1});
  CHECK(extDims(s.a, sf, sf, 6).dims == std::vector<int>{1, 0, 1, 1, 1, 1, 1});
}

TEST_CASE("minimal and non-minimal resolutions compute the same Ext") {
  const Setup s = load("sl2_z0");
  const Module mods[] = {simple(s, "S_e"), simple(s, "S_f"),
                         regularProjective(s.a, 0)};
  for (const Module& v : mods)
    for (const Module& w : mods)
      CHECK(extDims(s.a, v, w, 2, true).dims == extDims(s.a, v, w, 2, false).dims);
}

TEST_CASE("Ext is additive in the first argument") {
  const Setup s = load("sl2_z0");
  const Module& se = simple(s, "S_e");
  const Module& sf = simple(s, "S_f");
  const auto sum = extDims(s.a, directSum(se, sf), se, 4).dims;
  const auto lhs = extDims(s.a, se, se, 4).dims;
  const auto rhs = extDims(s.a, sf, se, 4).dims;
  for (size_t i = 0; i < sum.size(); ++i) CHECK(sum[i] == lhs[i] + rhs[i]);
}

TEST_CASE("Ext in degree zero matches the hom space") {
  const Setup s = load("sl2_z0");
  const Module ae = regularProjective(s.a, 0);
  const Module reg = regularModule(s.a);
  const auto row = extDims(s.a, ae, reg, 3).dims;
  CHECK(row[0] == static_cast<int>(homSpace(ae, reg).size()));
  // projectives have no higher Ext
  CHECK(row == std::vector<int>{4, 0, 0, 0});
}

TEST_CASE("Ext tables are symmetric under the anti-involution") {
  const Setup s = load("sl2_z0");
  Mat sigma(s.a->field, 6, 6);
  const int to[6] = {0, 1, 4, 3, 2, 5};
  for (int i = 0; i < 6; ++i) sigma.at(to[i], i) = Scalar::one(s.a->field);
  for (const auto& x : s.sl.simples)
    for (const auto& y : s.sl.simples) {
      const auto direct = extDims(s.a, x.mod, y.mod, 4).dims;
      const auto dual =
          extDims(s.a, twistedDual(y.mod, sigma), twistedDual(x.mod, sigma), 4).dims;
      CHECK(direct == dual);
    }
}

TEST_CASE("the regular bimodule is flat: Tor vanishes in positive degrees") {
  const Setup s = load("sl2_z0");
  const Module rr = rightRegularModule(s.a);
  const TorTable t = torDims(s.a, rr, simple(s, "S_e"), 4);
  CHECK(t.dims == std::vector<int>{1, 0, 0, 0, 0});
  const TensorSpace ts = tensorOver(s.a, rr, simple(s, "S_e"));
  CHECK(ts.dim == 1);  // A (x)_A S = S
  CHECK((ts.proj * ts.section).isIdentity());
}

TEST_CASE("flat dimension of truncations in the z = 0 specialization") {
  const Setup s = load("sl2_z0");
  const DimensionVerdict none = rightFlatDimension(s.a, s.p, {}, 6);
  CHECK(none.value == 0);
  CHECK_FALSE(none.atLeast);
  const DimensionVerdict mid = rightFlatDimension(s.a, s.p, {0}, 6);
  CHECK(mid.value == 1);
  CHECK_FALSE(mid.atLeast);
  const DimensionVerdict full = rightFlatDimension(s.a, s.p, {0, 1}, 6);
  CHECK(full.value == 0);
  CHECK_FALSE(full.atLeast);
  CHECK(dimensionVerdictStr(mid) == "1");
  CHECK(dimensionVerdictStr({3, true}) == ">= 3");
}

TEST_CASE("global dimension across the corpus") {
  CHECK(globalDimension(load("a2_quiver").a, 6).value == 1);
  CHECK_FALSE(globalDimension(load("a2_quiver").a, 6).atLeast);
  CHECK(globalDimension(load("semisimple_pair").a, 6).value == 0);
  CHECK(globalDimension(load("sl2_z1").a, 6).value == 0);
  const DimensionVerdict z0 = globalDimension(load("sl2_z0").a, 6);
  CHECK(z0.atLeast);
  CHECK(z0.value == 6);
  const DimensionVerdict dn = globalDimension(load("loop_dualnumbers").a, 5);
  CHECK(dn.atLeast);
  CHECK(dn.value == 5);
}

TEST_CASE("truncation carried as a module on either side") {
  const Setup s = load("sl2_z0");
  const TruncationQuotient tq = truncate(s.a, s.p, {0});
  const Module left = truncationAsLeftModule(s.a, tq);
  left.verify();
  CHECK(left.dim == 2);
  CHECK(support(left) == std::vector<int>{0});
  const Module right = truncationAsRightModule(s.a, tq);
  right.verify();
  CHECK(right.side == Side::Right);
  CHECK(tableEquals(*right.algebra, *opposite(*s.a)));
}

TEST_CASE("embedding certificate for the z = 0 truncation at {e}") {
  const Setup s = load("sl2_z0");
  const EmbeddingCertificate cert = embeddingCertificate(s.a, s.p, {0}, 6);
  CHECK(cert.pass);
  CHECK(cert.segment == std::vector<int>{0});
  CHECK(cert.flatDim.value == 1);
  CHECK_FALSE(cert.flatDim.atLeast);
  CHECK(cert.counitRecorded);

  REQUIRE(cert.unit.size() == 1);  // B is local: one simple
  const auto& u = cert.unit[0];
  CHECK(u.evalIso);
  CHECK(u.homDim == 1);
  CHECK(u.dimW == 1);
  CHECK(u.ext == std::vector<int>{1, 0, 0, 0, 0, 0, 0});

  REQUIRE(cert.counit.size() == 1);
  CHECK(cert.counit[0].multIso);
  CHECK(cert.counit[0].tor == std::vector<int>{1, 0, 0, 0, 0, 0, 0});

  REQUIRE(cert.fullness.size() == 1);
  CHECK(cert.fullness[0].extB == std::vector<int>{1, 1, 1, 1, 1, 1, 1});
  CHECK(cert.fullness[0].extA == cert.fullness[0].extB);
}

TEST_CASE("embedding certificates on the full and empty segments") {
  const Setup s = load("sl2_z0");
  const EmbeddingCertificate whole = embeddingCertificate(s.a, s.p, {0, 1}, 4);
  CHECK(whole.pass);
  CHECK(whole.flatDim.value == 0);
  CHECK(whole.unit.size() == 2);
  const EmbeddingCertificate empty = embeddingCertificate(s.a, s.p, {}, 4);
  CHECK(empty.pass);
  CHECK(empty.unit.empty());  // the zero algebra has no simples
}

TEST_CASE("certificates refuse to run on violated hypotheses") {
  const Setup s = load("sl2_reversed");
  CHECK(kindOf([&] { embeddingCertificate(s.a, s.p, {1}, 4); }) ==
        ErrorKind::HypothesisViolated);
}

TEST_CASE("spectral corner collapses on the z = 0 truncation at {e}") {
  const Setup s = load("sl2_z0");
  const Module& se = simple(s, "S_e");
  const SpectralReport rep = spectralCornerCheck(s.a, s.p, {0}, se, se, 6);
  CHECK(rep.collapse);
  CHECK(rep.pass);
  CHECK(rep.extBW == std::vector<int>{1, 0, 0, 0, 0, 0, 0});
  REQUIRE(rep.rows.size() == 7);
  for (const auto& r : rep.rows) {
    CHECK(r.pass);
    CHECK(r.lhs == r.rhs);
    CHECK(r.rhs == 1);  // Ext^n(S_e, S_e) = 1 throughout
  }
}

TEST_CASE("spectral corner degrades to Euler bounds without collapse") {
  // Reversed order, segment {f}: B = A({f}) is one-dimensional, and B as an
  // A-module is S_f with higher self-extensions, so the corner cannot
  // collapse and only the inequality rows are certified.
  const Setup s = load("sl2_reversed");
  const Module& sf = simple(s, "S_f");
  const SpectralReport rep = spectralCornerCheck(s.a, s.p, {1}, sf, sf, 4);
  CHECK_FALSE(rep.collapse);
  CHECK(rep.pass);
  CHECK(rep.extBW == std::vector<int>{1, 0, 1, 1, 1});
  for (const auto& r : rep.rows) CHECK(r.lhs >= r.rhs);
}

TEST_CASE("spectral corner rejects modules outside the segment") {
  const Setup s = load("sl2_z0");
  const Module af = regularProjective(s.a, 1);
  CHECK(kindOf([&] { spectralCornerCheck(s.a, s.p, {0}, af, af, 3); }) ==
        ErrorKind::NotTruncatedModule);
}
