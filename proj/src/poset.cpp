#include "stratkit/poset.hpp"

#include <algorithm>

#include "stratkit/error.hpp"

namespace stratkit {

int Poset::index(const std::string& name) const {
  for (size_t i = 0; i < elems.size(); ++i)
    if (elems[i] == name) return static_cast<int>(i);
  fail(ErrorKind::UnknownVertex, "unknown poset element '" + name + "'");
}

Poset posetFromCovers(const std::vector<std::string>& elems,
                      const std::vector<std::pair<std::string, std::string>>& covers) {
  Poset p;
  p.elems = elems;
  const int n = p.size();
  p.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) p.leq[i][i] = true;
  for (const auto& [lo, hi] : covers) p.leq[p.index(lo)][p.index(hi)] = true;
  // Floyd-Warshall style transitive closure.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (p.leq[i][k])
        for (int j = 0; j < n; ++j)
          if (p.leq[k][j]) p.leq[i][j] = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && p.leq[i][j] && p.leq[j][i])
        fail(ErrorKind::Invalid, "order declarations contain a cycle through '" +
                                     elems[i] + "' and '" + elems[j] + "'");
  return p;
}

std::vector<int> downClosure(const Poset& p, const std::vector<int>& ys) {
  std::vector<int> out;
  for (int x = 0; x < p.size(); ++x)
    for (int y : ys)
      if (p.le(x, y)) {
        out.push_back(x);
        break;
      }
  return out;
}

bool isInitialSegment(const Poset& p, const std::vector<int>& ys) {
  std::vector<bool> in(p.size(), false);
  for (int y : ys) in[y] = true;
  for (int y : ys)
    for (int x = 0; x < p.size(); ++x)
      if (p.le(x, y) && !in[x]) return false;
  return true;
}

std::vector<std::vector<int>> initialSegments(const Poset& p) {
  const int n = p.size();
  if (n > 20)
    fail(ErrorKind::TooLarge, "initial-segment enumeration limited to 20 elements");
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> ys;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) ys.push_back(i);
    if (isInitialSegment(p, ys)) out.push_back(ys);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<int> maximalElements(const Poset& p) {
  std::vector<int> out;
  for (int x = 0; x < p.size(); ++x) {
    bool maximal = true;
    for (int y = 0; y < p.size(); ++y)
      if (y != x && p.le(x, y)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(x);
  }
  return out;
}

}  // namespace stratkit
