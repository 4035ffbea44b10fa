#pragma once

#include <map>
#include <optional>
#include <vector>

#include "stringy/cone.hpp"
#include "stringy/poly.hpp"

namespace stringy {

/// Lattice point counts of one face by degree: all[k] counts points of
/// degree k on the face, interior[k] those in its relative interior.
struct FaceCounts {
  std::vector<Int> all;
  std::vector<Int> interior;
};

/// Counts points of degree k in a re-coordinatized face cone: returns
/// (boundary count, interior count); their sum is the full count.  The two
/// tallies come from disjoint point sets.
std::pair<Int, Int> count_dilate(const RestrictedCone& rc, long k);

/// Per-face lattice point counts and S/T polynomials of a Gorenstein cone.
/// Counts are cached per face and extended on demand.  Not thread-safe.
class EhrhartCache {
 public:
  EhrhartCache(const Cone& cone, const FaceLattice& lat);

  /// Counts for degrees 0..max_degree (at least).
  const FaceCounts& counts(int face, long max_degree);

  /// S(face, t) = (1-t)^rho sum_m t^{deg m}; degree <= rho - 1 (asserted),
  /// nonnegative coefficients, S(0) = 1.  The zero face gives 1.
  Poly s_poly(int face);
  /// T(face, t), computed from the disjoint interior tally; zero face: 1.
  Poly t_poly(int face);

  /// Prop: S(face, t) = t^rho T(face, 1/t), exactly.
  bool check_reciprocity(int face);

  /// Geometric-series regrouping to order K: the truncated interior series
  /// sum_{k<=K} N°_k t^k must equal T(t) / (1-t)^rho expanded to order K.
  bool check_series_regrouping(int face, long K);

 private:
  const Cone* cone_;
  const FaceLattice* lat_;
  std::vector<FaceCounts> counts_;
  std::vector<std::optional<RestrictedCone>> restricted_;
  std::map<int, Poly> s_, t_;
  const RestrictedCone& restricted(int face);
};

}  // namespace stringy
