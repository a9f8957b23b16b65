#include "stratkit/rewrite.hpp"

#include <algorithm>
#include <array>
#include <deque>

#include "stratkit/error.hpp"

namespace stratkit {
namespace {

constexpr int kRuleCap = 10000;
constexpr int kBasisCap = 100000;

// Extracts the subword letters[from, from+len) with correct endpoints.
Word subword(const Quiver& q, const Word& w, int from, int len) {
  Word s;
  if (len == 0) {
    s.src = s.tgt = boundaryVertex(q, w, from);
    return s;
  }
  s.letters.assign(w.letters.begin() + from, w.letters.begin() + from + len);
  s.tgt = q.arrows.at(s.letters.front()).tgt;
  s.src = q.arrows.at(s.letters.back()).src;
  return s;
}

struct Completion {
  const Quiver& quiver;
  Field field;
  int bound;

  struct Entry {
    Rule rule;
    bool active = true;
  };
  std::vector<Entry> entries;
  // Ambiguities yet to be checked: ids of two rules plus the offset of the
  // second rule's match inside the ambiguity word.
  std::deque<std::array<int, 3>> pending;
  std::deque<Poly> toAdd;

  int activeCount() const {
    int n = 0;
    for (const auto& e : entries) n += e.active;
    return n;
  }

  // Positions where rule r matches inside w.  For an idempotent lhs these
  // are boundary indices; otherwise letter offsets.
  std::vector<int> matches(const Rule& r, const Word& w) const {
    std::vector<int> out;
    const int n = w.length(), k = r.lhs.length();
    if (k == 0) {
      for (int i = 0; i <= n; ++i)
        if (boundaryVertex(quiver, w, i) == r.lhs.src) out.push_back(i);
      return out;
    }
    for (int i = 0; i + k <= n; ++i)
      if (std::equal(r.lhs.letters.begin(), r.lhs.letters.end(),
                     w.letters.begin() + i))
        out.push_back(i);
    return out;
  }

  bool reducible(const Word& w) const {
    for (const auto& e : entries)
      if (e.active && !matches(e.rule, w).empty()) return true;
    return false;
  }

  // c * (pre * rhs * post) for the match of rule r in w at pos.
  Poly replace(const Rule& r, const Word& w, int pos, const Scalar& c) const {
    Poly out(field);
    const int k = r.lhs.length();
    const Word pre = subword(quiver, w, 0, pos);
    const Word post = subword(quiver, w, pos + k, w.length() - pos - k);
    for (const auto& [m, cm] : r.rhs.terms()) {
      auto left = concatWords(pre, m);
      ensure(left.has_value(), "rule rhs does not compose with prefix");
      auto whole = concatWords(*left, post);
      ensure(whole.has_value(), "rule rhs does not compose with suffix");
      out.add(*whole, c * cm);
    }
    return out;
  }

  Poly reduceFully(Poly p) const {
    while (true) {
      bool changed = false;
      // Rewrite the largest reducible monomial, first rule, leftmost match.
      for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Word w = it->first;
        const Scalar c = it->second;
        for (size_t ri = 0; ri < entries.size() && !changed; ++ri) {
          if (!entries[ri].active) continue;
          auto pos = matches(entries[ri].rule, w);
          if (pos.empty()) continue;
          Poly delta = replace(entries[ri].rule, w, pos.front(), c);
          p.add(w, -c);
          p = p + delta;
          changed = true;
        }
        if (changed) break;
      }
      if (!changed) return p;
    }
  }

  void queueOverlaps(int id) {
    const Word& a = entries[id].rule.lhs;
    for (int j = 0; j < static_cast<int>(entries.size()); ++j) {
      if (!entries[j].active) continue;
      const Word& b = entries[j].rule.lhs;
      if (a.length() == 0 || b.length() == 0) {
        // Idempotent-rule ambiguities inside another lhs are containments and
        // are dissolved by interreduction; nothing to queue.
        continue;
      }
      const int m = a.length(), k = b.length();
      // suffix of a == prefix of b, proper on both sides
      for (int o = 1; o < std::min(m, k); ++o)
        if (std::equal(b.letters.begin(), b.letters.begin() + o,
                       a.letters.begin() + (m - o)))
          pending.push_back({id, j, m - o});
      if (j != id) {
        // suffix of b == prefix of a
        for (int o = 1; o < std::min(m, k); ++o)
          if (std::equal(a.letters.begin(), a.letters.begin() + o,
                         b.letters.begin() + (k - o)))
            pending.push_back({j, id, k - o});
      }
    }
  }

  void insertRule(Rule r) {
    if (static_cast<int>(entries.size()) >= kRuleCap)
      fail(ErrorKind::CompletionOverflow,
           "completion exceeded " + std::to_string(kRuleCap) + " rules");
    const int id = static_cast<int>(entries.size());
    entries.push_back({std::move(r), true});
    // Dissolve any rule whose lhs the new rule rewrites.
    for (int j = 0; j < id; ++j) {
      if (!entries[j].active) continue;
      if (!matches(entries[id].rule, entries[j].rule.lhs).empty()) {
        entries[j].active = false;
        Poly back = Poly::monomial(field, entries[j].rule.lhs, Scalar::one(field));
        toAdd.push_back(back - entries[j].rule.rhs);
      }
    }
    // Keep every rhs fully reduced.
    for (int j = 0; j < id; ++j) {
      if (!entries[j].active) continue;
      entries[j].rule.rhs = reduceFully(entries[j].rule.rhs);
    }
    queueOverlaps(id);
  }

  void addPoly(Poly p) {
    toAdd.push_back(std::move(p));
    while (!toAdd.empty()) {
      Poly q = reduceFully(std::move(toAdd.front()));
      toAdd.pop_front();
      if (q.isZero()) continue;
      const auto& [lead, cLead] = q.leading();
      if (lead.length() > bound)
        fail(ErrorKind::NotFiniteWithinBound,
             "completion produced the rule head '" + wordName(quiver, lead) +
                 "' of length " + std::to_string(lead.length()) +
                 "; finiteness is not established within degree bound " +
                 std::to_string(bound));
      Poly rhs(field);
      const Scalar inv = cLead.inverse();
      for (const auto& [w, c] : q.terms()) {
        if (w == lead) continue;
        rhs.add(w, -(c * inv));
      }
      insertRule(Rule{lead, rhs});
    }
  }

  void run(const std::vector<Poly>& relations) {
    for (const auto& rel : relations) addPoly(rel);
    while (!pending.empty()) {
      auto [i, j, off] = pending.front();
      pending.pop_front();
      if (!entries[i].active || !entries[j].active) continue;
      // Copies: addPoly below may grow entries and invalidate references.
      const Rule a = entries[i].rule;
      const Rule b = entries[j].rule;
      // Ambiguity word: a.lhs followed by the tail of b.lhs past the overlap.
      const int o = a.lhs.length() - off;
      if (o <= 0 || o > b.lhs.length()) continue;  // stale offset
      if (!std::equal(b.lhs.letters.begin(), b.lhs.letters.begin() + o,
                      a.lhs.letters.begin() + off))
        continue;  // stale pair
      Word w = a.lhs;
      w.letters.insert(w.letters.end(), b.lhs.letters.begin() + o,
                       b.lhs.letters.end());
      w.src = b.lhs.src;
      const Scalar one = Scalar::one(field);
      Poly viaA = reduceFully(replace(a, w, 0, one));
      Poly viaB = reduceFully(replace(b, w, off, one));
      addPoly(viaA - viaB);
    }
  }

  std::vector<Word> enumerateBasis() const {
    std::vector<Word> out, frontier;
    for (int v = 0; v < static_cast<int>(quiver.vertices.size()); ++v) {
      Word w = idempotentWord(v);
      if (!reducible(w)) frontier.push_back(w);
    }
    for (int len = 0; len < bound; ++len) {
      std::sort(frontier.begin(), frontier.end(), WordLess{});
      out.insert(out.end(), frontier.begin(), frontier.end());
      if (static_cast<int>(out.size()) > kBasisCap)
        fail(ErrorKind::TooLarge, "basis exceeds " + std::to_string(kBasisCap) +
                                      " elements");
      std::vector<Word> next;
      for (const auto& w : frontier) {
        for (int a = 0; a < static_cast<int>(quiver.arrows.size()); ++a) {
          if (quiver.arrows[a].src != w.tgt) continue;
          Word ext;
          ext.src = w.src;
          ext.tgt = quiver.arrows[a].tgt;
          ext.letters.reserve(w.letters.size() + 1);
          ext.letters.push_back(a);
          ext.letters.insert(ext.letters.end(), w.letters.begin(), w.letters.end());
          // w is irreducible, so only matches touching the new first letter
          // need checking: rule heads that are prefixes of ext, and
          // idempotent rules at the new target.
          bool red = false;
          for (const auto& e : entries) {
            if (!e.active) continue;
            const Word& l = e.rule.lhs;
            if (l.length() == 0) {
              if (l.src == ext.tgt) {
                red = true;
                break;
              }
              continue;
            }
            if (l.length() <= ext.length() &&
                std::equal(l.letters.begin(), l.letters.end(), ext.letters.begin())) {
              red = true;
              break;
            }
          }
          if (!red) next.push_back(ext);
        }
      }
      if (len + 1 == bound && !next.empty()) {
        std::sort(next.begin(), next.end(), WordLess{});
        fail(ErrorKind::NotFiniteWithinBound,
             "the irreducible word '" + wordName(quiver, next.front()) +
                 "' reaches degree bound " + std::to_string(bound) +
                 "; finiteness is not established within the bound");
      }
      frontier = std::move(next);
    }
    return out;
  }
};

}  // namespace

RewriteSystem completeRewriting(const Presentation& p, int degreeBound) {
  if (degreeBound < 1) fail(ErrorKind::Invalid, "degree bound must be positive");
  for (const auto& rel : p.relations)
    if (!rel.isZero() && rel.leading().first.length() > degreeBound)
      fail(ErrorKind::NotFiniteWithinBound,
           "a relation has degree above the degree bound " + std::to_string(degreeBound));

  Completion c{p.quiver, p.field, degreeBound, {}, {}, {}};
  c.run(p.relations);

  RewriteSystem rs;
  rs.quiver = p.quiver;
  rs.field = p.field;
  rs.degreeBound = degreeBound;
  for (const auto& e : c.entries)
    if (e.active) rs.rules.push_back(e.rule);
  std::sort(rs.rules.begin(), rs.rules.end(),
            [](const Rule& a, const Rule& b) { return WordLess{}(a.lhs, b.lhs); });
  rs.normalForms = c.enumerateBasis();
  return rs;
}

std::vector<Redex> findRedexes(const RewriteSystem& rs, const Poly& p) {
  std::vector<Redex> out;
  for (const auto& [w, c] : p.terms()) {
    for (size_t ri = 0; ri < rs.rules.size(); ++ri) {
      const Rule& r = rs.rules[ri];
      const int n = w.length(), k = r.lhs.length();
      if (k == 0) {
        for (int i = 0; i <= n; ++i)
          if (boundaryVertex(rs.quiver, w, i) == r.lhs.src)
            out.push_back({w, static_cast<int>(ri), i});
        continue;
      }
      for (int i = 0; i + k <= n; ++i)
        if (std::equal(r.lhs.letters.begin(), r.lhs.letters.end(),
                       w.letters.begin() + i))
          out.push_back({w, static_cast<int>(ri), i});
    }
  }
  return out;
}

Poly applyRedex(const RewriteSystem& rs, const Poly& p, const Redex& r) {
  const Scalar c = p.terms().at(r.word);
  const Rule& rule = rs.rules.at(r.rule);
  const Quiver& q = rs.quiver;
  const int k = rule.lhs.length();
  const Word pre = subword(q, r.word, 0, r.pos);
  const Word post = subword(q, r.word, r.pos + k, r.word.length() - r.pos - k);
  Poly out = p;
  out.add(r.word, -c);
  for (const auto& [m, cm] : rule.rhs.terms()) {
    auto left = concatWords(pre, m);
    ensure(left.has_value(), "rhs does not compose with prefix");
    auto whole = concatWords(*left, post);
    ensure(whole.has_value(), "rhs does not compose with suffix");
    out.add(*whole, c * cm);
  }
  return out;
}

Poly normalForm(const RewriteSystem& rs, const Poly& p) {
  Poly q = p;
  while (true) {
    auto redexes = findRedexes(rs, q);
    if (redexes.empty()) return q;
    q = applyRedex(rs, q, redexes.front());
  }
}

Poly normalFormWithStrategy(const RewriteSystem& rs, const Poly& p,
                            const std::function<size_t(size_t)>& choose) {
  Poly q = p;
  while (true) {
    auto redexes = findRedexes(rs, q);
    if (redexes.empty()) return q;
    const size_t pick = choose(redexes.size()) % redexes.size();
    q = applyRedex(rs, q, redexes[pick]);
  }
}

Vec coordinates(const RewriteSystem& rs, const Poly& reduced) {
  Vec out(rs.normalForms.size(), Scalar::zero(rs.field));
  for (const auto& [w, c] : reduced.terms()) {
    auto it = std::lower_bound(rs.normalForms.begin(), rs.normalForms.end(), w,
                               WordLess{});
    ensure(it != rs.normalForms.end() && *it == w,
           "monomial is not an irreducible word");
    out[it - rs.normalForms.begin()] = c;
  }
  return out;
}

}  // namespace stratkit
