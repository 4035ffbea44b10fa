#pragma once

#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "stringy/common.hpp"

namespace stringy {

/// Finite graded poset with unique bottom and top; every maximal chain has
/// the same length (the rank of the poset).  Immutable after construction.
class GradedPoset {
 public:
  using Bits = boost::dynamic_bitset<>;

  /// leq[x] is the up-set of x as a bitset (leq[x][y] <=> x <= y).
  /// Validates reflexivity, antisymmetry, transitivity, unique bottom/top,
  /// and that covering relations raise rank by exactly one.
  GradedPoset(std::vector<Bits> leq, std::vector<int> rank);

  int size() const { return (int)rho_.size(); }
  int rank() const { return d_; }
  int rank_of(int x) const { return rho_[x]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  bool leq(int x, int y) const { return leq_[x][y]; }

  /// Elements z with x <= z <= y, ascending by rank (ties by id).
  std::vector<int> between(int x, int y) const;

  /// Moebius function via the recursion mu(x,x) = 1,
  /// mu(x,y) = -sum_{x <= z < y} mu(x,z).  Throws StructureError if x !<= y.
  Int mobius(int x, int y) const;

  /// True iff mu(x,y) = (-1)^{rho(y)-rho(x)} for all x <= y.
  bool is_eulerian() const;

  /// The subposet [x, y], re-indexed, with rank function rho(z) - rho(x).
  GradedPoset interval(int x, int y) const;

  /// Order reversed, ranks complemented.
  GradedPoset dual() const;

 private:
  std::vector<Bits> leq_;
  std::vector<int> rho_;
  int bottom_ = 0, top_ = 0, d_ = 0;
};

}  // namespace stringy
