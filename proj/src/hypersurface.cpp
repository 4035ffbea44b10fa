#include "stringy/hypersurface.hpp"

namespace stringy {

HypersurfaceContext::HypersurfaceContext(Cone cone) : cone_(std::move(cone)) {
  if (!cone_.is_gorenstein())
    throw StructureError("hypersurface: cone is not Gorenstein");
  lat_ = std::make_unique<FaceLattice>(cone_);
  stan_ = std::make_unique<PosetPolyCache>(lat_->poset());
  ehr_ = std::make_unique<EhrhartCache>(cone_, *lat_);
}

Poly HypersurfaceContext::b_dual_interval(int x, int y) {
  const int d = lat_->poset().rank_of(y) - lat_->poset().rank_of(x);
  Poly b = stan_->b(x, y);
  return Poly::monomial(d % 2 == 0 ? 1 : -1, d, 0) * b.subst({1, -1, 0}, {1, 0, 1});
}

Poly HypersurfaceContext::e_affine(int face) {
  auto it = e_affine_.find(face);
  if (it != e_affine_.end()) return it->second;
  const int rho = lat_->face(face).dim;
  if (rho < 1) throw StructureError("e_affine: face must have dimension >= 1");

  Poly uvm1 = Poly::u() * Poly::v() - Poly::constant(1);
  Poly acc = uvm1.pow(rho - 1);
  Poly sum;
  for (int y : lat_->poset().between(lat_->bottom(), face)) {
    const int ry = lat_->face(y).dim;
    Poly ty = ehr_->t_poly(y).subst({1, 1, -1}, {1, 0, 0});  // t -> u/v
    sum += Poly::monomial(1, 0, ry) * ty * b_dual_interval(y, face);
  }
  if (rho % 2 != 0) sum = -sum;
  Poly e = Poly::monomial(1, -1, -1) * (acc + sum);
  if (!e.is_polynomial())
    throw IntegrityError("e_affine: Laurent residue in E(Z_x)");
  e_affine_.emplace(face, e);
  return e;
}

Poly HypersurfaceContext::e_int_toric() {
  return stan_->h().subst({1, 1, 1}, {1, 0, 0});
}

Poly HypersurfaceContext::e_int_hypersurface() {
  Poly acc;
  for (int x = 0; x < lat_->size(); ++x) {
    if (lat_->face(x).dim < 1) continue;
    Poly g = stan_->g(x, lat_->top()).subst({1, 1, 1}, {1, 0, 0});
    acc += e_affine(x) * g;
  }
  return acc;
}

Poly HypersurfaceContext::e_prim() {
  Poly e = e_int_hypersurface() - stan_->h_lef().subst({1, 1, 1}, {1, 0, 0});
  if (!e.is_zero() && !e.is_homogeneous(cone_.rank() - 2))
    throw IntegrityError("e_prim: not homogeneous of degree d-2");
  return e;
}

bool HypersurfaceContext::verify_recursion() {
  const int d = cone_.rank();
  const int top = lat_->top();
  Poly uv = Poly::u() * Poly::v();
  Poly uvm1 = uv - Poly::constant(1);
  Poly inv_uv = Poly::monomial(1, -1, -1);

  // x = 0hat contributes (E(Z_0) - (uv)^{-1}(uv-1)^{-1}) G(P, uv) with the
  // convention E(Z_0) = (uv-1)^{-1}; the difference collapses exactly to
  // (uv)^{-1} G(P, uv), which keeps everything inside the Laurent ring.
  Poly lhs = inv_uv * stan_->g().subst({1, 1, 1}, {1, 0, 0});
  for (int x = 0; x < lat_->size(); ++x) {
    const int rho = lat_->face(x).dim;
    if (rho < 1) continue;
    Poly g = stan_->g(x, top).subst({1, 1, 1}, {1, 0, 0});
    lhs += (e_affine(x) - inv_uv * uvm1.pow(rho - 1)) * g;
  }

  Poly rhs;
  for (int x = 0; x < lat_->size(); ++x) {
    const int rho = lat_->face(x).dim;
    Poly s = ehr_->s_poly(x).subst({1, 1, -1}, {1, 0, 0});      // t -> u/v
    Poly g = stan_->g(x, top).subst({1, 1, -1}, {1, 0, 0});     // t -> u/v
    Poly term = Poly::monomial(rho % 2 == 0 ? 1 : -1, -1, 1) * s * g;
    rhs += term;
  }
  rhs = Poly::monomial(1, 0, d - 2) * rhs;
  return lhs == rhs;
}

bool HypersurfaceContext::check_specialization(int face) {
  const int rho = lat_->face(face).dim;
  if (rho < 1) throw StructureError("check_specialization: face dim >= 1 required");
  Poly lhs = e_affine(face).subst({1, 1, 0}, {1, 0, 0});  // v -> 1
  Poly tm1 = Poly::t() - Poly::constant(1);
  Poly s = ehr_->s_poly(face);
  Poly num = tm1.pow(rho - 1) + (rho % 2 == 0 ? s : -s);
  Poly rhs = Poly::exact_div(num, Poly::t());
  return lhs == rhs;
}

bool HypersurfaceContext::check_series_regrouping(long K) {
  for (int x = 0; x < lat_->size(); ++x)
    if (!ehr_->check_series_regrouping(x, K)) return false;
  return true;
}

}  // namespace stringy
