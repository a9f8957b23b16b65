#include "stratkit/quiver.hpp"

#include "stratkit/error.hpp"

namespace stratkit {

int Quiver::vertexIndex(const std::string& name) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return static_cast<int>(i);
  return -1;
}

int Quiver::arrowIndex(const std::string& name) const {
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return static_cast<int>(i);
  return -1;
}

int compareWords(const Word& a, const Word& b) {
  if (a.letters.size() != b.letters.size())
    return a.letters.size() < b.letters.size() ? -1 : 1;
  for (size_t i = 0; i < a.letters.size(); ++i)
    if (a.letters[i] != b.letters[i]) return a.letters[i] < b.letters[i] ? -1 : 1;
  if (a.letters.empty() && a.src != b.src) return a.src < b.src ? -1 : 1;
  return 0;
}

Word idempotentWord(int vertex) { return Word{vertex, vertex, {}}; }

Word arrowWord(const Quiver& q, int arrow) {
  const auto& a = q.arrows.at(arrow);
  return Word{a.src, a.tgt, {arrow}};
}

std::optional<Word> concatWords(const Word& u, const Word& v) {
  if (u.src != v.tgt) return std::nullopt;
  Word w;
  w.src = v.src;
  w.tgt = u.tgt;
  w.letters = u.letters;
  w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
  return w;
}

int boundaryVertex(const Quiver& q, const Word& w, int i) {
  ensure(i >= 0 && i <= w.length(), "boundary index out of range");
  if (i == 0) return w.tgt;
  return q.arrows.at(w.letters[i - 1]).src;
}

std::string wordName(const Quiver& q, const Word& w) {
  if (w.letters.empty()) return q.vertices.at(w.src);
  std::string out;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += "*";
    out += q.arrows.at(w.letters[i]).name;
  }
  return out;
}

Poly Poly::monomial(const Field& f, const Word& w, const Scalar& c) {
  Poly p(f);
  p.add(w, c);
  return p;
}

void Poly::add(const Word& w, const Scalar& c) {
  if (c.isZero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.isZero()) terms_.erase(it);
}

Poly Poly::operator+(const Poly& o) const {
  Poly out = *this;
  for (const auto& [w, c] : o.terms_) out.add(w, c);
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  Poly out = *this;
  for (const auto& [w, c] : o.terms_) out.add(w, -c);
  return out;
}

Poly Poly::scaled(const Scalar& c) const {
  Poly out(field_);
  for (const auto& [w, k] : terms_) out.add(w, k * c);
  return out;
}

Poly Poly::mul(const Poly& o) const {
  Poly out(field_);
  for (const auto& [u, cu] : terms_)
    for (const auto& [v, cv] : o.terms_)
      if (auto w = concatWords(u, v)) out.add(*w, cu * cv);
  return out;
}

const std::pair<const Word, Scalar>& Poly::leading() const {
  ensure(!terms_.empty(), "leading term of zero polynomial");
  return *terms_.rbegin();
}

bool Poly::operator==(const Poly& o) const {
  if (!(field_ == o.field_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [w, c] : terms_) {
    if (!(w == it->first) || c != it->second) return false;
    ++it;
  }
  return true;
}

std::string Poly::str(const Quiver& q) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // Largest monomial first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const std::string cs = it->second.str();
    std::string body = cs;
    bool negated = false;
    if (!body.empty() && body[0] == '-') {
      negated = true;
      body = body.substr(1);
    }
    if (first) {
      out += negated ? "- " : "";
    } else {
      out += negated ? " - " : " + ";
    }
    first = false;
    if (body == "1")
      out += wordName(q, it->first);
    else
      out += body + "*" + wordName(q, it->first);
  }
  return out;
}

}  // namespace stratkit
