#pragma once

#include <map>
#include <string>
#include <utility>

#include "stringy/common.hpp"

namespace stringy {

/// A Laurent monomial with coefficient +1 or -1, used as a substitution
/// target: sign * u^du * v^dv.  Covers u -> 1/u, t -> uv, t -> u/v,
/// t -> 1/(uv), v -> 1, and (-u) style factors.
struct Monomial {
  int sign = 1;
  long du = 0;
  long dv = 0;
};

/// Sparse bivariate Laurent polynomial in (u, v) with arbitrary-precision
/// integer coefficients.  Univariate polynomials in t are embedded on the
/// u-axis (v-exponent 0 everywhere).  Canonical form: no zero coefficients.
class Poly {
 public:
  using Key = std::pair<long, long>;  // (u exponent, v exponent)

  Poly() = default;

  static Poly constant(Int c);
  static Poly monomial(Int c, long a, long b = 0);
  static Poly u() { return monomial(1, 1, 0); }
  static Poly v() { return monomial(1, 0, 1); }
  static Poly t() { return monomial(1, 1, 0); }

  bool is_zero() const { return terms_.empty(); }
  bool is_univariate() const;  // every v-exponent is 0
  bool is_polynomial() const;  // every exponent is >= 0
  bool is_homogeneous(long total_degree) const;

  long u_min() const;
  long u_max() const;
  long v_min() const;
  long v_max() const;
  long total_degree() const;  // max a+b over terms; -1 for zero

  Int coeff(long a, long b = 0) const;
  const std::map<Key, Int>& terms() const { return terms_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return terms_ != o.terms_; }

  Poly pow(long e) const;  // e >= 0

  /// Substitute u -> for_u, v -> for_v (exactly; monomial targets only).
  Poly subst(const Monomial& for_u, const Monomial& for_v) const;

  /// Univariate truncation: keep terms with exponent < r.
  Poly truncate_below(long r) const;
  /// Univariate truncation with a half-integer bound: keep 2*exponent < n.
  Poly truncate_below_half(long n) const;

  /// Exact division in the Laurent ring; throws IntegrityError if q does not
  /// divide p (or q == 0).
  static Poly exact_div(const Poly& p, const Poly& q);

  /// Canonical rendering: terms sorted by ascending total degree, then
  /// descending u-exponent, e.g. "1 - u - v + u*v".
  std::string str(const char* uname = "u", const char* vname = "v") const;
  /// Rendering for univariate polynomials with variable name "t".
  std::string str_t() const { return str("t", "?"); }

 private:
  void add_term(long a, long b, const Int& c);
  void require_univariate(const char* what) const;

  std::map<Key, Int> terms_;
};

}  // namespace stringy
