#include "stringy/stanley.hpp"

namespace stringy {

Poly PosetPolyCache::h(int x, int y) {
  const int d = p_->rank_of(y) - p_->rank_of(x);
  if (d == 0) return Poly::constant(1);
  Poly tm1 = Poly::t() - Poly::constant(1);
  Poly acc;
  for (int z : p_->between(x, y)) {
    if (z == x) continue;
    int rz = p_->rank_of(z) - p_->rank_of(x);
    acc += tm1.pow(rz - 1) * g(z, y);
  }
  return acc;
}

Poly PosetPolyCache::g(int x, int y) {
  auto key = std::make_pair(x, y);
  auto it = g_.find(key);
  if (it != g_.end()) return it->second;
  const int d = p_->rank_of(y) - p_->rank_of(x);
  Poly result;
  if (d == 0) {
    result = Poly::constant(1);
  } else {
    Poly hp = h(x, y);
    result = ((Poly::constant(1) - Poly::t()) * hp).truncate_below_half(d);
  }
  g_.emplace(key, result);
  return result;
}

Poly PosetPolyCache::h_lef(int x, int y) {
  const int d = p_->rank_of(y) - p_->rank_of(x);
  if (d < 1) throw StructureError("h_lef: interval rank must be >= 1");
  Poly gp = g(x, y);
  Poly rev = Poly::monomial(1, d - 1) * gp.subst({1, -1, 0}, {1, 0, 1});
  return Poly::exact_div(gp - rev, Poly::constant(1) - Poly::t());
}

Poly PosetPolyCache::b(int x, int y) {
  auto key = std::make_pair(x, y);
  auto it = b_.find(key);
  if (it != b_.end()) return it->second;
  const int d = p_->rank_of(y) - p_->rank_of(x);
  Poly result;
  if (d == 0) {
    result = Poly::constant(1);
  } else {
    // B(P) = G(P, uv) - sum_{z < 1hat} B([0hat,z]) u^{d-rho(z)} G([z,1hat], v/u)
    result = g(x, y).subst({1, 1, 1}, {1, 0, 0});  // t -> uv
    for (int z : p_->between(x, y)) {
      if (z == y) continue;
      int rz = p_->rank_of(z) - p_->rank_of(x);
      Poly gz = g(z, y).subst({1, -1, 1}, {1, 0, 0});  // t -> v/u
      Poly term = Poly::monomial(1, d - rz, 0) * gz;
      if (!term.is_polynomial())
        throw IntegrityError("b: intermediate u^{d-rho} G(v/u) is not polynomial");
      result -= b(x, z) * term;
    }
    if (!result.is_polynomial())
      throw IntegrityError("b: B-polynomial has a Laurent residue");
  }
  b_.emplace(key, result);
  return result;
}

Poly g_poly(const GradedPoset& p) { return PosetPolyCache(p).g(); }
Poly h_poly(const GradedPoset& p) { return PosetPolyCache(p).h(); }
Poly h_lef_poly(const GradedPoset& p) { return PosetPolyCache(p).h_lef(); }
Poly b_poly(const GradedPoset& p) { return PosetPolyCache(p).b(); }

bool check_b_duality(const GradedPoset& p) {
  GradedPoset dual = p.dual();
  Poly lhs = b_poly(p);
  Poly bd = b_poly(dual);
  Poly rhs = Poly::monomial(p.rank() % 2 == 0 ? 1 : -1, p.rank(), 0) *
             bd.subst({1, -1, 0}, {1, 0, 1});
  return lhs == rhs;
}

bool check_interval_relation(const GradedPoset& p) {
  PosetPolyCache cache(p);
  const int d = p.rank();
  Poly uv = Poly::u() * Poly::v();
  Poly vmu = Poly::v() - Poly::u();
  Poly uvm1 = uv - Poly::constant(1);
  Poly lhs, rhs;
  for (int x : p.between(p.bottom(), p.top())) {
    int rx = p.rank_of(x);
    Poly blo = cache.b(p.bottom(), x).subst({1, -1, 0}, {1, 0, -1});
    lhs += blo * Poly::monomial(1, rx, rx) * vmu.pow(d - rx);
    rhs += cache.b(x, p.top()) * uvm1.pow(rx);
  }
  return lhs == rhs;
}

bool check_h_symmetry(const GradedPoset& p) {
  if (p.rank() < 1) return true;
  Poly hp = h_poly(p);
  Poly rev = Poly::monomial(1, p.rank() - 1) * hp.subst({1, -1, 0}, {1, 0, 1});
  return hp == rev;
}

bool check_g_inverse_identity(const GradedPoset& p) {
  PosetPolyCache cache(p);
  const int d = p.rank();
  Poly lhs = Poly::monomial(1, d) * cache.g().subst({1, -1, 0}, {1, 0, 1});
  Poly tm1 = Poly::t() - Poly::constant(1);
  Poly rhs;
  for (int x : p.between(p.bottom(), p.top()))
    rhs += tm1.pow(p.rank_of(x)) * cache.g(x, p.top());
  return lhs == rhs;
}

bool check_b_degree(const GradedPoset& p) {
  Poly bp = b_poly(p);
  const int d = p.rank();
  Poly at_v1 = bp.subst({1, 1, 0}, {1, 0, 0});
  if (at_v1 != (Poly::constant(1) - Poly::u()).pow(d)) return false;
  if (d > 0) {
    Poly at_u1 = bp.subst({1, 0, 0}, {1, 0, 1});
    if (!at_u1.is_zero()) return false;
  }
  return bp.is_zero() || 2 * bp.v_max() < d;
}

bool check_h_lef_properties(const GradedPoset& p) {
  if (p.rank() < 1) return true;
  const int d = p.rank();
  Poly hl = h_lef_poly(p);
  Poly rev = Poly::monomial(1, d - 2) * hl.subst({1, -1, 0}, {1, 0, 1});
  if (hl != rev) return false;
  Poly hp = h_poly(p);
  return hl.truncate_below_half(d - 1) == hp.truncate_below_half(d - 1);
}

}  // namespace stringy
