#pragma once

#include <string>
#include <vector>

namespace stratkit {

// Finite poset on named elements, stored as a full <= relation.
struct Poset {
  std::vector<std::string> elems;
  std::vector<std::vector<bool>> leq;  // leq[i][j] means elems[i] <= elems[j]

  int index(const std::string& name) const;  // UnknownVertex if absent
  bool le(int i, int j) const { return leq[i][j]; }
  int size() const { return static_cast<int>(elems.size()); }
};

// Builds the partial order from cover declarations (x < y pairs), taking the
// reflexive-transitive closure.  Fails with Invalid on a cycle.
Poset posetFromCovers(const std::vector<std::string>& elems,
                      const std::vector<std::pair<std::string, std::string>>& covers);

// All x with x <= some member of ys (indices into elems).
std::vector<int> downClosure(const Poset& p, const std::vector<int>& ys);

bool isInitialSegment(const Poset& p, const std::vector<int>& ys);

// Every initial segment (including the empty one), each sorted ascending;
// segments ordered by size then lexicographically.  TooLarge above 20 elems.
std::vector<std::vector<int>> initialSegments(const Poset& p);

// Maximal elements, ascending.
std::vector<int> maximalElements(const Poset& p);

}  // namespace stratkit
