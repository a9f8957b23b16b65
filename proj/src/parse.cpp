#include "stratkit/parse.hpp"

#include <gmpxx.h>

#include <cctype>
#include <sstream>

#include "stratkit/error.hpp"

namespace stratkit {
namespace {

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> splitWhitespace(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

bool isIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool isIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Expression tokens: identifiers, numeric literals (with optional /den), and
// the operators + - *.
struct Tok {
  enum Kind { Ident, Number, Plus, Minus, Star } kind;
  std::string text;
};

std::vector<Tok> lexExpr(const std::string& s, int lineNo) {
  std::vector<Tok> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '+') {
      out.push_back({Tok::Plus, "+"});
      ++i;
    } else if (c == '-') {
      out.push_back({Tok::Minus, "-"});
      ++i;
    } else if (c == '*') {
      out.push_back({Tok::Star, "*"});
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && s[j] == '/') {
        ++j;
        if (j >= s.size() || !std::isdigit(static_cast<unsigned char>(s[j])))
          fail(ErrorKind::Syntax,
               "line " + std::to_string(lineNo) + ": malformed fraction");
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      }
      out.push_back({Tok::Number, s.substr(i, j - i)});
      i = j;
    } else if (isIdentStart(c)) {
      size_t j = i;
      while (j < s.size() && isIdentChar(s[j])) ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i)});
      i = j;
    } else {
      fail(ErrorKind::Syntax, "line " + std::to_string(lineNo) +
                                  ": unexpected character '" + std::string(1, c) + "'");
    }
  }
  return out;
}

struct ExprContext {
  const Field& field;
  const Quiver& quiver;
  const std::vector<std::pair<std::string, Scalar>>& params;
  int lineNo;

  [[noreturn]] void err(ErrorKind k, const std::string& msg) const {
    fail(k, "line " + std::to_string(lineNo) + ": " + msg);
  }
};

// term := factor ('*' factor)*, where each factor is a number, a parameter,
// a vertex, or an arrow.  Scalar factors commute; path factors concatenate
// left to right in composition order.
Poly parseTerm(const ExprContext& cx, const std::vector<Tok>& toks, size_t& i) {
  Scalar coeff = Scalar::one(cx.field);
  std::optional<Word> path;
  bool expectFactor = true;
  while (true) {
    if (i >= toks.size()) break;
    const Tok& t = toks[i];
    if (t.kind == Tok::Plus || t.kind == Tok::Minus) break;
    if (t.kind == Tok::Star) {
      if (expectFactor) cx.err(ErrorKind::Syntax, "misplaced '*'");
      expectFactor = true;
      ++i;
      continue;
    }
    if (!expectFactor)
      cx.err(ErrorKind::Syntax, "missing operator before '" + t.text + "'");
    expectFactor = false;
    ++i;
    if (t.kind == Tok::Number) {
      coeff *= Scalar::parse(cx.field, t.text);
      continue;
    }
    // Identifier: parameter, vertex or arrow.
    bool isParam = false;
    for (const auto& [n, v] : cx.params)
      if (n == t.text) {
        coeff *= v;
        isParam = true;
        break;
      }
    if (isParam) continue;
    std::optional<Word> w;
    if (int v = cx.quiver.vertexIndex(t.text); v >= 0)
      w = idempotentWord(v);
    else if (int a = cx.quiver.arrowIndex(t.text); a >= 0)
      w = arrowWord(cx.quiver, a);
    else
      cx.err(ErrorKind::UnknownSymbol, "unknown symbol '" + t.text + "'");
    if (!path) {
      path = *w;
    } else {
      auto joined = concatWords(*path, *w);
      if (!joined)
        cx.err(ErrorKind::NonComposablePath,
               "factor '" + t.text + "' does not compose with the path so far");
      path = *joined;
    }
  }
  if (expectFactor) cx.err(ErrorKind::Syntax, "empty term");
  if (!path)
    cx.err(ErrorKind::Syntax, "term has no path factor");
  return Poly::monomial(cx.field, *path, coeff);
}

Poly parseExpr(const ExprContext& cx, const std::string& text) {
  const std::vector<Tok> toks = lexExpr(text, cx.lineNo);
  if (toks.empty()) cx.err(ErrorKind::Syntax, "empty relation");
  Poly out(cx.field);
  size_t i = 0;
  bool negate = false;
  // Optional leading sign.
  if (toks[i].kind == Tok::Minus) {
    negate = true;
    ++i;
  } else if (toks[i].kind == Tok::Plus) {
    ++i;
  }
  while (true) {
    Poly term = parseTerm(cx, toks, i);
    out = negate ? out - term : out + term;
    if (i >= toks.size()) break;
    if (toks[i].kind == Tok::Plus)
      negate = false;
    else if (toks[i].kind == Tok::Minus)
      negate = true;
    else
      cx.err(ErrorKind::Syntax, "expected '+' or '-'");
    ++i;
  }
  return out;
}

void checkHomogeneous(const ExprContext& cx, const Poly& rel) {
  if (rel.isZero()) return;
  const Word& first = rel.terms().begin()->first;
  for (const auto& [w, c] : rel.terms())
    if (w.src != first.src || w.tgt != first.tgt)
      cx.err(ErrorKind::NonHomogeneousRelation,
             "relation mixes paths with different endpoints");
}

bool isPrimeU64(std::uint64_t p) {
  if (p < 2) return false;
  mpz_class n;
  mpz_import(n.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

}  // namespace

Presentation parsePresentation(const std::string& text,
                               const std::map<std::string, std::string>& overrides) {
  Presentation p;
  p.field = Field{};  // rational unless a FIELD line says otherwise
  bool sawField = false, fieldLocked = false;
  bool sawVertices = false;
  std::map<std::string, bool> overrideUsed;
  for (const auto& [k, v] : overrides) overrideUsed[k] = false;

  std::istringstream in(text);
  std::string rawLine;
  int lineNo = 0;
  // Relation lines are parsed after all declarations so that symbols may be
  // used before their declaring line.  Order of relations is kept.
  std::vector<std::pair<int, std::string>> relLines;
  std::vector<std::pair<int, std::string>> orderLines;

  while (std::getline(in, rawLine)) {
    ++lineNo;
    std::string line = rawLine;
    if (auto pos = line.find('#'); pos != std::string::npos) line = line.substr(0, pos);
    line = trim(line);
    if (line.empty()) continue;

    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    std::string rest = trim(line.substr(kw.size()));
    auto err = [&](ErrorKind k, const std::string& msg) -> void {
      fail(k, "line " + std::to_string(lineNo) + ": " + msg);
    };

    if (kw == "FIELD") {
      if (sawField) err(ErrorKind::Syntax, "duplicate FIELD line");
      if (fieldLocked)
        err(ErrorKind::Syntax, "FIELD must precede PARAM and REL lines");
      sawField = true;
      auto toks = splitWhitespace(rest);
      if (toks.size() == 1 && toks[0] == "rational") {
        p.field = Field{};
      } else if (toks.size() == 2 && toks[0] == "prime") {
        std::uint64_t prime = 0;
        try {
          size_t used = 0;
          prime = std::stoull(toks[1], &used);
          if (used != toks[1].size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          err(ErrorKind::Syntax, "malformed prime '" + toks[1] + "'");
        }
        if (!isPrimeU64(prime))
          err(ErrorKind::Syntax, toks[1] + " is not prime");
        p.field = Field{prime};
      } else {
        err(ErrorKind::Syntax, "expected 'FIELD rational' or 'FIELD prime <p>'");
      }
    } else if (kw == "PARAM") {
      fieldLocked = true;
      auto toks = splitWhitespace(rest);
      if (toks.size() != 3 || toks[1] != "=")
        err(ErrorKind::Syntax, "expected 'PARAM <name> = <value>'");
      const std::string& name = toks[0];
      if (!isIdentStart(name[0]))
        err(ErrorKind::Syntax, "bad parameter name '" + name + "'");
      for (const auto& [n, v] : p.params)
        if (n == name) err(ErrorKind::DuplicateName, "duplicate parameter '" + name + "'");
      std::string literal = toks[2];
      if (auto it = overrides.find(name); it != overrides.end()) {
        literal = it->second;
        overrideUsed[name] = true;
      }
      p.params.emplace_back(name, Scalar::parse(p.field, literal));
    } else if (kw == "VERTICES") {
      if (sawVertices) err(ErrorKind::Syntax, "duplicate VERTICES line");
      sawVertices = true;
      auto toks = splitWhitespace(rest);
      if (toks.empty()) err(ErrorKind::Syntax, "VERTICES line names no vertices");
      for (const auto& v : toks) {
        if (!isIdentStart(v[0]))
          err(ErrorKind::Syntax, "bad vertex name '" + v + "'");
        if (p.quiver.vertexIndex(v) >= 0)
          err(ErrorKind::DuplicateName, "duplicate vertex '" + v + "'");
        for (const auto& [n, val] : p.params)
          if (n == v) err(ErrorKind::DuplicateName, "name '" + v + "' already used");
        p.quiver.vertices.push_back(v);
      }
    } else if (kw == "ARROW") {
      auto toks = splitWhitespace(rest);
      if (toks.size() != 5 || toks[1] != ":" || toks[3] != "->")
        err(ErrorKind::Syntax, "expected 'ARROW <name> : <src> -> <tgt>'");
      const std::string& name = toks[0];
      if (!isIdentStart(name[0]))
        err(ErrorKind::Syntax, "bad arrow name '" + name + "'");
      if (p.quiver.arrowIndex(name) >= 0 || p.quiver.vertexIndex(name) >= 0)
        err(ErrorKind::DuplicateName, "name '" + name + "' already used");
      for (const auto& [n, val] : p.params)
        if (n == name) err(ErrorKind::DuplicateName, "name '" + name + "' already used");
      int src = p.quiver.vertexIndex(toks[2]);
      int tgt = p.quiver.vertexIndex(toks[4]);
      if (src < 0) err(ErrorKind::UnknownSymbol, "unknown vertex '" + toks[2] + "'");
      if (tgt < 0) err(ErrorKind::UnknownSymbol, "unknown vertex '" + toks[4] + "'");
      p.quiver.arrows.push_back({name, src, tgt});
    } else if (kw == "REL") {
      fieldLocked = true;
      relLines.emplace_back(lineNo, rest);
    } else if (kw == "ORDER") {
      orderLines.emplace_back(lineNo, rest);
    } else {
      err(ErrorKind::Syntax, "unknown keyword '" + kw + "'");
    }
  }

  if (p.quiver.vertices.empty())
    fail(ErrorKind::Syntax, "presentation declares no vertices");

  for (const auto& [ln, restText] : relLines) {
    ExprContext cx{p.field, p.quiver, p.params, ln};
    Poly rel = parseExpr(cx, restText);
    checkHomogeneous(cx, rel);
    if (!rel.isZero()) p.relations.push_back(rel);
  }

  for (const auto& [ln, restText] : orderLines) {
    auto toks = splitWhitespace(restText);
    if (toks.size() != 3 || toks[1] != "<")
      fail(ErrorKind::Syntax,
           "line " + std::to_string(ln) + ": expected 'ORDER <x> < <y>'");
    int a = p.quiver.vertexIndex(toks[0]);
    int b = p.quiver.vertexIndex(toks[2]);
    if (a < 0)
      fail(ErrorKind::UnknownSymbol,
           "line " + std::to_string(ln) + ": unknown vertex '" + toks[0] + "'");
    if (b < 0)
      fail(ErrorKind::UnknownSymbol,
           "line " + std::to_string(ln) + ": unknown vertex '" + toks[2] + "'");
    if (a == b)
      fail(ErrorKind::Invalid,
           "line " + std::to_string(ln) + ": vertex ordered below itself");
    p.orderCovers.emplace_back(a, b);
  }

  for (const auto& [k, used] : overrideUsed)
    if (!used) fail(ErrorKind::UnknownSymbol, "override for unknown parameter '" + k + "'");

  return p;
}

std::string renderPresentation(const Presentation& p) {
  std::ostringstream out;
  if (p.field.rational())
    out << "FIELD rational\n";
  else
    out << "FIELD prime " << p.field.p << "\n";
  for (const auto& [n, v] : p.params) out << "PARAM " << n << " = " << v.str() << "\n";
  out << "VERTICES";
  for (const auto& v : p.quiver.vertices) out << " " << v;
  out << "\n";
  for (const auto& a : p.quiver.arrows)
    out << "ARROW " << a.name << " : " << p.quiver.vertices.at(a.src) << " -> "
        << p.quiver.vertices.at(a.tgt) << "\n";
  for (const auto& r : p.relations) out << "REL " << r.str(p.quiver) << "\n";
  for (const auto& [a, b] : p.orderCovers)
    out << "ORDER " << p.quiver.vertices.at(a) << " < " << p.quiver.vertices.at(b) << "\n";
  return out.str();
}

}  // namespace stratkit
