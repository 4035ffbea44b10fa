#pragma once

#include <map>
#include <utility>

#include "stringy/poly.hpp"
#include "stringy/poset.hpp"

namespace stringy {

/// Memoized G/H/B polynomials of the intervals of one Eulerian poset.  The
/// recursions revisit intervals heavily; caches are keyed by endpoint pairs.
/// Not thread-safe: confine an instance to one thread.
class PosetPolyCache {
 public:
  explicit PosetPolyCache(const GradedPoset& p) : p_(&p) {}

  const GradedPoset& poset() const { return *p_; }

  /// Stanley's toric g-polynomial of [x, y] (univariate in t).
  Poly g(int x, int y);
  /// Toric h-polynomial of [x, y].
  Poly h(int x, int y);
  /// H_Lef = (G(t) - t^{d-1} G(1/t)) / (1 - t); degree d-2, palindromic.
  Poly h_lef(int x, int y);
  /// Two-variable B-polynomial of [x, y].
  Poly b(int x, int y);

  Poly g() { return g(p_->bottom(), p_->top()); }
  Poly h() { return h(p_->bottom(), p_->top()); }
  Poly h_lef() { return h_lef(p_->bottom(), p_->top()); }
  Poly b() { return b(p_->bottom(), p_->top()); }

 private:
  const GradedPoset* p_;
  std::map<std::pair<int, int>, Poly> g_, b_;
};

Poly g_poly(const GradedPoset& p);
Poly h_poly(const GradedPoset& p);
Poly h_lef_poly(const GradedPoset& p);
Poly b_poly(const GradedPoset& p);

/// Thm: B(P; u,v) = (-u)^d B(P*; 1/u, v), exactly.
bool check_b_duality(const GradedPoset& p);
/// Identity linking B-polynomials of lower and upper intervals.
bool check_interval_relation(const GradedPoset& p);
/// H(P,t) = t^{d-1} H(P, 1/t) for rank >= 1.
bool check_h_symmetry(const GradedPoset& p);
/// t^d G(P, 1/t) = sum_x (t-1)^{rho(x)} G([x, 1hat], t).
bool check_g_inverse_identity(const GradedPoset& p);
/// B(P;u,1) = (1-u)^d, B(P;1,v) = 0 (d > 0), deg_v B < d/2.
bool check_b_degree(const GradedPoset& p);
/// Palindromicity of H_Lef and agreement with H up to degree (d-2)/2.
bool check_h_lef_properties(const GradedPoset& p);

}  // namespace stringy
