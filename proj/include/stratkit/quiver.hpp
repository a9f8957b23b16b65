#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stratkit/scalar.hpp"

namespace stratkit {

struct Quiver {
  std::vector<std::string> vertices;
  struct Arrow {
    std::string name;
    int src = 0;
    int tgt = 0;
    bool operator==(const Arrow&) const = default;
  };
  std::vector<Arrow> arrows;

  int vertexIndex(const std::string& name) const;  // -1 when absent
  int arrowIndex(const std::string& name) const;
  bool operator==(const Quiver&) const = default;
};

// Path monomial.  letters holds arrow ids in composition order: letters[0]
// is applied last, so [c, a] denotes c*a, the path "a then c".  An empty
// letter list is the idempotent path at src (== tgt).
struct Word {
  int src = 0, tgt = 0;
  std::vector<int> letters;

  int length() const { return static_cast<int>(letters.size()); }
  bool isIdempotent() const { return letters.empty(); }
  bool operator==(const Word&) const = default;
};

// Length-lex: shorter words first; same length compares the letter sequence
// left to right by arrow declaration id; idempotent words compare by vertex.
int compareWords(const Word& a, const Word& b);

struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    return compareWords(a, b) < 0;
  }
};

Word idempotentWord(int vertex);
Word arrowWord(const Quiver& q, int arrow);
// u*v = "u after v": defined when src(u) == tgt(v).
std::optional<Word> concatWords(const Word& u, const Word& v);
// Vertex visited after stripping the first i letters; i ranges 0..length.
int boundaryVertex(const Quiver& q, const Word& w, int i);
std::string wordName(const Quiver& q, const Word& w);

// K-linear combination of path monomials of one quiver.
class Poly {
 public:
  explicit Poly(const Field& f) : field_(f) {}
  static Poly monomial(const Field& f, const Word& w, const Scalar& c);

  const Field& field() const { return field_; }
  bool isZero() const { return terms_.empty(); }
  const std::map<Word, Scalar, WordLess>& terms() const { return terms_; }

  void add(const Word& w, const Scalar& c);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly scaled(const Scalar& c) const;
  // Path algebra product; non-composable monomial pairs contribute zero.
  Poly mul(const Poly& o) const;
  // Largest monomial; only valid on nonzero polynomials.
  const std::pair<const Word, Scalar>& leading() const;
  bool operator==(const Poly& o) const;
  std::string str(const Quiver& q) const;

 private:
  Field field_;
  std::map<Word, Scalar, WordLess> terms_;
};

struct Presentation {
  Field field;
  std::vector<std::pair<std::string, Scalar>> params;  // declaration order
  Quiver quiver;
  std::vector<Poly> relations;
  // Declared covering pairs x < y of the vertex poset.
  std::vector<std::pair<int, int>> orderCovers;

  bool operator==(const Presentation&) const = default;
};

}  // namespace stratkit
