#pragma once

#include <map>
#include <memory>

#include "stringy/ehrhart.hpp"
#include "stringy/stanley.hpp"

namespace stringy {

/// A Gorenstein cone together with its face lattice and the polynomial
/// caches needed to evaluate E-polynomials of the associated projective
/// toric variety and its generic ample hypersurface strata.
class HypersurfaceContext {
 public:
  explicit HypersurfaceContext(Cone cone);  // StructureError if not Gorenstein

  const Cone& cone() const { return cone_; }
  const FaceLattice& lattice() const { return *lat_; }
  PosetPolyCache& stanley() { return *stan_; }
  EhrhartCache& ehrhart() { return *ehr_; }

  /// B([x, y]*; u, v) computed from B([x, y]) via the (-u)^d B(1/u, v)
  /// duality, so a single poset cache serves both sides.
  Poly b_dual_interval(int x, int y);

  /// E-polynomial of the affine hypersurface stratum Z_x (dim(x) >= 1),
  /// by the finite face-grouped sum; asserted to be a true polynomial.
  Poly e_affine(int face);
  Poly e_affine() { return e_affine(lat_->top()); }

  /// Intersection-cohomology E-polynomial of the toric variety: H(P, uv).
  Poly e_int_toric();
  /// E_int of the compactified hypersurface: sum of strata E times G.
  Poly e_int_hypersurface();
  /// Primitive part: E_int(Zbar) - H_Lef(P, uv); homogeneous of degree d-2.
  Poly e_prim();

  /// The recursive relation tying E(Z_x), S and G; exact equality.
  bool verify_recursion();
  /// E(Z_x; t, 1) = ((t-1)^{rho-1} + (-1)^rho S(C_x, t)) / t.
  bool check_specialization(int face);
  /// Geometric-series regrouping on every face, to order K.
  bool check_series_regrouping(long K);

 private:
  Cone cone_;
  std::unique_ptr<FaceLattice> lat_;
  std::unique_ptr<PosetPolyCache> stan_;
  std::unique_ptr<EhrhartCache> ehr_;
  std::map<int, Poly> e_affine_;
};

}  // namespace stringy
