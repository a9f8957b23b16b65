#include <doctest.h>

#include <optional>

#include "stratkit/corpus.hpp"
#include "stratkit/error.hpp"
#include "stratkit/parse.hpp"
#include "stratkit/rewrite.hpp"

using namespace stratkit;

namespace {

RewriteSystem sl2(const std::string& z) {
  return completeRewriting(parsePresentation(corpusFile("sl2_z0"), {{"z", z}}), 8);
}

Poly mono(const RewriteSystem& rs, int src, int tgt, std::vector<int> letters,
          long coeff = 1) {
  return Poly::monomial(rs.field, Word{src, tgt, std::move(letters)},
                        Scalar::fromInt(rs.field, coeff));
}

}  // namespace

TEST_CASE("completion of the two-vertex loop algebra yields the 6-element basis") {
  const RewriteSystem rs = sl2("0");
  REQUIRE(rs.normalForms.size() == 6);
  const Quiver& q = rs.quiver;
  std::vector<std::string> names;
  for (const Word& w : rs.normalForms) names.push_back(wordName(q, w));
  CHECK(names == std::vector<std::string>{"e", "f", "a", "b", "c", "b*b"});
  // completion adds the derived rule b*b*b -> z*b on top of the four relations
  REQUIRE(rs.rules.size() == 5);
  CHECK(rs.rules[4].lhs == Word{0, 0, {1, 1, 1}});
}

TEST_CASE("normal forms are sorted and closed under subwords") {
  for (const auto& [name, text] : corpus()) {
    CAPTURE(name);
    const RewriteSystem rs = completeRewriting(parsePresentation(text), 8);
    for (size_t i = 1; i < rs.normalForms.size(); ++i)
      CHECK(compareWords(rs.normalForms[i - 1], rs.normalForms[i]) < 0);
    for (const Word& w : rs.normalForms) {
      for (int len = 0; len < w.length(); ++len)
        for (int at = 0; at + len <= w.length(); ++at) {
          Word sub;
          sub.letters.assign(w.letters.begin() + at, w.letters.begin() + at + len);
          sub.tgt = boundaryVertex(rs.quiver, w, at);
          sub.src = boundaryVertex(rs.quiver, w, at + len);
          const Poly nf = normalForm(rs, Poly::monomial(rs.field, sub,
                                                        Scalar::one(rs.field)));
          REQUIRE(nf.terms().size() == 1);
          CHECK(nf.leading().first == sub);
        }
    }
  }
}

TEST_CASE("frozen normal forms at three parameter values") {
  for (const std::string z : {"0", "1", "5"}) {
    CAPTURE(z);
    const RewriteSystem rs = sl2(z);
    const Scalar zv = Scalar::parse(rs.field, z);

    // c*a -> z*e - b*b
    Poly ca = mono(rs, 0, 0, {2, 0});
    Poly expCA = Poly::monomial(rs.field, Word{0, 0, {1, 1}},
                                -Scalar::one(rs.field));
    expCA.add(idempotentWord(0), zv);
    CHECK(normalForm(rs, ca) == expCA);

    // a*c -> z*f
    Poly ac = mono(rs, 1, 1, {0, 2});
    Poly expAC(rs.field);
    expAC.add(idempotentWord(1), zv);
    CHECK(normalForm(rs, ac) == expAC);

    // b*b*b -> z*b
    Poly bbb = mono(rs, 0, 0, {1, 1, 1});
    Poly expB(rs.field);
    expB.add(Word{0, 0, {1}}, zv);
    CHECK(normalForm(rs, bbb) == expB);

    // a*b and b*c die at every z
    CHECK(normalForm(rs, mono(rs, 1, 0, {0, 1})).isZero());
    CHECK(normalForm(rs, mono(rs, 0, 1, {1, 2})).isZero());
  }
}

TEST_CASE("redex enumeration and single-step application") {
  const RewriteSystem rs = sl2("0");
  const Poly ca = mono(rs, 0, 0, {2, 0});
  const auto redexes = findRedexes(rs, ca);
  REQUIRE(redexes.size() == 1);
  CHECK(redexes[0].pos == 0);
  const Poly once = applyRedex(rs, ca, redexes[0]);
  CHECK(once == normalForm(rs, ca));  // one step suffices here
  CHECK(findRedexes(rs, once).empty());
  CHECK(normalForm(rs, once) == once);  // idempotent on normal forms
}

TEST_CASE("reduction strategies agree on an overlap word") {
  // c*a*b holds two redexes (c*a and a*b); both routes must meet at 0.
  for (const std::string z : {"0", "5"}) {
    const RewriteSystem rs = sl2(z);
    const Poly w = mono(rs, 0, 0, {2, 0, 1});
    CHECK(findRedexes(rs, w).size() == 2);
    CHECK(normalForm(rs, w).isZero());
    const Poly last = normalFormWithStrategy(rs, w, [](size_t n) { return n - 1; });
    CHECK(last.isZero());
  }
}

TEST_CASE("coordinates express reduced polynomials in the normal-form basis") {
  const RewriteSystem rs = sl2("0");
  const Poly red = normalForm(rs, mono(rs, 0, 0, {2, 0}));  // -b*b
  const Vec co = coordinates(rs, red);
  REQUIRE(co.size() == 6);
  for (int i = 0; i < 6; ++i)
    CHECK(co[i] == (i == 5 ? Scalar::fromInt(rs.field, -1) : Scalar::zero(rs.field)));
}

TEST_CASE("a relation-free loop is flagged as not finite at the bound") {
  const Presentation p = parsePresentation("VERTICES v\nARROW x : v -> v\n");
  try {
    completeRewriting(p, 8);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFiniteWithinBound);
  }
}

TEST_CASE("the relation-free two-vertex quiver has the path basis") {
  const RewriteSystem rs = completeRewriting(parsePresentation(corpusFile("a2_quiver")), 8);
  CHECK(rs.normalForms.size() == 3);
  CHECK(rs.rules.empty());
}
