#pragma once

#include <functional>
#include <vector>

#include "stratkit/matrix.hpp"
#include "stratkit/quiver.hpp"

namespace stratkit {

// Oriented rule lhs -> rhs: every monomial of rhs is strictly smaller than
// lhs in the length-lex order and has the same endpoints.  An idempotent lhs
// (a vertex word) necessarily has rhs 0 and matches any word visiting that
// vertex.
struct Rule {
  Word lhs;
  Poly rhs;
};

// A confluent, interreduced rewriting system for a presented path algebra,
// together with the ordered list of irreducible words.  When construction
// succeeds the irreducible words of length < degreeBound are closed under
// taking subwords and form a basis of the quotient algebra.
struct RewriteSystem {
  Quiver quiver;
  Field field;
  int degreeBound = 8;
  std::vector<Rule> rules;        // sorted by lhs, ascending
  std::vector<Word> normalForms;  // sorted ascending, all of length < degreeBound
};

// Runs completion on the presented relations.  Throws:
//   NotFiniteWithinBound — a derived rule or an irreducible word reaches the
//     degree bound, so finiteness is not established at this bound;
//   CompletionOverflow — the rule count exceeds an internal cap;
//   TooLarge — the basis exceeds an internal size cap.
RewriteSystem completeRewriting(const Presentation& p, int degreeBound);

// Single reduction opportunity inside one monomial of a polynomial.
struct Redex {
  Word word;     // the monomial being rewritten
  int rule = 0;  // index into rules
  int pos = 0;   // match offset in letters (boundary index for vertex rules)
};

// All redexes of all monomials, in deterministic order.
std::vector<Redex> findRedexes(const RewriteSystem& rs, const Poly& p);
// Applies one redex: replaces c*(pre*lhs*post) by c*(pre*rhs*post).
Poly applyRedex(const RewriteSystem& rs, const Poly& p, const Redex& r);
// Reduces to normal form, always taking the first redex.
Poly normalForm(const RewriteSystem& rs, const Poly& p);
// Reduces to normal form picking each step via choose(redexCount); used by
// the confluence tests to exercise arbitrary reduction strategies.
Poly normalFormWithStrategy(const RewriteSystem& rs, const Poly& p,
                            const std::function<size_t(size_t)>& choose);

// Coordinates of a normal-form polynomial in the normalForms basis.
Vec coordinates(const RewriteSystem& rs, const Poly& reduced);

}  // namespace stratkit
