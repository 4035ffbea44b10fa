#include "stringy/poset.hpp"

#include <algorithm>
#include <map>

namespace stringy {

GradedPoset::GradedPoset(std::vector<Bits> leq, std::vector<int> rank)
    : leq_(std::move(leq)), rho_(std::move(rank)) {
  const int n = (int)rho_.size();
  if (n == 0 || (int)leq_.size() != n)
    throw StructureError("poset: empty or inconsistent sizes");
  for (int x = 0; x < n; ++x) {
    if ((int)leq_[x].size() != n) throw StructureError("poset: bad bitset size");
    if (!leq_[x][x]) throw StructureError("poset: not reflexive");
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x != y && leq_[x][y] && leq_[y][x])
        throw StructureError("poset: not antisymmetric");
      if (leq_[x][y] && (leq_[y] & ~leq_[x]).any())
        throw StructureError("poset: not transitive");
    }

  int nbottom = 0, ntop = 0;
  for (int x = 0; x < n; ++x) {
    bool minimal = true, maximal = leq_[x].count() == 1;
    for (int y = 0; y < n; ++y)
      if (y != x && leq_[y][x]) minimal = false;
    if (minimal) {
      bottom_ = x;
      ++nbottom;
    }
    if (maximal) {
      top_ = x;
      ++ntop;
    }
  }
  if (nbottom != 1 || ntop != 1)
    throw StructureError("poset: bottom/top not unique");
  d_ = rho_[top_];
  if (rho_[bottom_] != 0) throw StructureError("poset: bottom must have rank 0");

  // Covers must raise rank by exactly one; this makes all maximal chains
  // have length d.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !leq_[x][y]) continue;
      if (rho_[y] <= rho_[x]) throw StructureError("poset: rank not monotone");
      bool cover = true;
      for (int z = 0; z < n && cover; ++z)
        if (z != x && z != y && leq_[x][z] && leq_[z][y]) cover = false;
      if (cover && rho_[y] != rho_[x] + 1)
        throw StructureError("poset: cover does not raise rank by one");
    }
}

std::vector<int> GradedPoset::between(int x, int y) const {
  if (!leq(x, y)) throw StructureError("poset: x is not below y");
  std::vector<int> out;
  for (int z = 0; z < size(); ++z)
    if (leq_[x][z] && leq_[z][y]) out.push_back(z);
  std::sort(out.begin(), out.end(), [this](int a, int b) {
    return rho_[a] != rho_[b] ? rho_[a] < rho_[b] : a < b;
  });
  return out;
}

Int GradedPoset::mobius(int x, int y) const {
  if (!leq(x, y)) throw StructureError("mobius: x is not below y");
  std::vector<int> zs = between(x, y);
  std::map<int, Int> mu;  // keyed by element id, all with lower end x
  for (int z : zs) {
    if (z == x) {
      mu[z] = 1;
      continue;
    }
    Int s = 0;
    for (int w : zs)
      if (leq_[w][z] && w != z) s += mu[w];
    mu[z] = -s;
  }
  return mu[y];
}

bool GradedPoset::is_eulerian() const {
  const int n = size();
  for (int x = 0; x < n; ++x) {
    // One upward sweep computes mu(x, y) for all y >= x.
    std::vector<int> ys = between(x, top_);
    std::map<int, Int> mu;
    for (int y : ys) {
      if (y == x) {
        mu[y] = 1;
      } else {
        Int s = 0;
        for (int w : ys)
          if (leq_[w][y] && w != y) s += mu[w];
        mu[y] = -s;
      }
      Int expect = (rho_[y] - rho_[x]) % 2 == 0 ? 1 : -1;
      if (mu[y] != expect) return false;
    }
    // Elements above x but not below top cannot exist (top is unique maximum),
    // so the sweep above covered every y >= x.
  }
  return true;
}

GradedPoset GradedPoset::interval(int x, int y) const {
  std::vector<int> zs = between(x, y);
  const int m = (int)zs.size();
  std::vector<Bits> leq(m, Bits(m));
  std::vector<int> rank(m);
  for (int i = 0; i < m; ++i) {
    rank[i] = rho_[zs[i]] - rho_[x];
    for (int j = 0; j < m; ++j)
      if (leq_[zs[i]][zs[j]]) leq[i].set(j);
  }
  return GradedPoset(std::move(leq), std::move(rank));
}

GradedPoset GradedPoset::dual() const {
  const int n = size();
  std::vector<Bits> leq(n, Bits(n));
  std::vector<int> rank(n);
  for (int x = 0; x < n; ++x) {
    rank[x] = d_ - rho_[x];
    for (int y = 0; y < n; ++y)
      if (leq_[y][x]) leq[x].set(y);
  }
  return GradedPoset(std::move(leq), std::move(rank));
}

}  // namespace stringy
