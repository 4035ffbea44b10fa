#include "stringy/ehrhart.hpp"

#include <algorithm>
#include <limits>

namespace stringy {

namespace {

// Incremental odometer over an integer box, tallying boundary and interior
// points of { x : <x, facet> >= 0 for all facets, <x, deg> = k }.
template <typename I>
std::pair<long long, long long> box_scan(const std::vector<std::vector<I>>& facets,
                                         const std::vector<I>& deg,
                                         const std::vector<long long>& lo,
                                         const std::vector<long long>& hi, long long k) {
  const int dim = (int)lo.size();
  const int nf = (int)facets.size();
  long long boundary = 0, interior = 0;
  // vals[level][c]: partial pairing of constraint c with coordinates < level.
  std::vector<std::vector<I>> vals(dim + 1, std::vector<I>(nf + 1, I(0)));
  std::vector<long long> x(dim);
  int level = 0;
  x[0] = lo[0];
  for (;;) {
    if (x[level] > hi[level]) {
      if (level == 0) break;
      --level;
      ++x[level];
      continue;
    }
    // Extend partial sums with coordinate `level`.
    for (int c = 0; c < nf; ++c)
      vals[level + 1][c] = vals[level][c] + facets[c][level] * I(x[level]);
    vals[level + 1][nf] = vals[level][nf] + deg[level] * I(x[level]);
    if (level + 1 == dim) {
      if (vals[dim][nf] == I(k)) {
        bool inside = true, strict = true;
        for (int c = 0; c < nf && inside; ++c) {
          if (vals[dim][c] < I(0))
            inside = false;
          else if (vals[dim][c] == I(0))
            strict = false;
        }
        if (inside) (strict ? interior : boundary) += 1;
      }
      ++x[level];
    } else {
      ++level;
      x[level] = lo[level];
    }
  }
  return {boundary, interior};
}

}  // namespace

std::pair<Int, Int> count_dilate(const RestrictedCone& rc, long k) {
  if (k == 0) return {Int(1), Int(0)};  // the apex; never interior for dim >= 1
  const int dim = rc.cone.rank();
  const auto& gens = rc.cone.generators();
  std::vector<long long> lo(dim, 0), hi(dim, 0);
  bool small = true;
  for (int j = 0; j < dim; ++j) {
    Int mn = gens[0][j] * k, mx = mn;
    for (const Vec& g : gens) {
      Int val = g[j] * k;
      mn = std::min(mn, val);
      mx = std::max(mx, val);
    }
    if (mn < std::numeric_limits<int32_t>::min() || mx > std::numeric_limits<int32_t>::max())
      small = false;
    else {
      lo[j] = mn.convert_to<long long>();
      hi[j] = mx.convert_to<long long>();
    }
  }

  const auto& normals = rc.cone.facet_normals();
  if (small) {
    // Verify every partial pairing stays well inside int64.
    Int bound = 0;
    auto row_bound = [&](const Vec& f) {
      Int b = 0;
      for (int j = 0; j < dim; ++j)
        b += boost::multiprecision::abs(f[j]) *
             std::max(boost::multiprecision::abs(Int(lo[j])),
                      boost::multiprecision::abs(Int(hi[j])));
      return b;
    };
    for (const Vec& f : normals) bound = std::max(bound, row_bound(f));
    bound = std::max(bound, row_bound(rc.degree_form));
    if (bound < (Int(1) << 62)) {
      std::vector<std::vector<long long>> facets;
      for (const Vec& f : normals) {
        std::vector<long long> row;
        for (const Int& x : f) row.push_back(x.convert_to<long long>());
        facets.push_back(std::move(row));
      }
      std::vector<long long> deg;
      for (const Int& x : rc.degree_form) deg.push_back(x.convert_to<long long>());
      auto [b, i] = box_scan<long long>(facets, deg, lo, hi, k);
      return {Int(b), Int(i)};
    }
  }

  // Arbitrary-precision fallback; box bounds re-derived exactly.
  std::vector<Int> blo(dim), bhi(dim);
  for (int j = 0; j < dim; ++j) {
    blo[j] = gens[0][j] * k;
    bhi[j] = blo[j];
    for (const Vec& g : gens) {
      blo[j] = std::min(blo[j], Int(g[j] * k));
      bhi[j] = std::max(bhi[j], Int(g[j] * k));
    }
    lo[j] = blo[j].convert_to<long long>();
    hi[j] = bhi[j].convert_to<long long>();
  }
  std::vector<std::vector<Int>> facets;
  for (const Vec& f : normals) facets.push_back(f);
  auto [b, i] = box_scan<Int>(facets, rc.degree_form, lo, hi, k);
  return {Int(b), Int(i)};
}

EhrhartCache::EhrhartCache(const Cone& cone, const FaceLattice& lat)
    : cone_(&cone), lat_(&lat), counts_(lat.size()), restricted_(lat.size()) {
  if (!cone.is_gorenstein())
    throw StructureError("ehrhart: cone is not Gorenstein");
}

const RestrictedCone& EhrhartCache::restricted(int face) {
  if (!restricted_[face]) restricted_[face] = restrict_to_span(*cone_, *lat_, face);
  return *restricted_[face];
}

const FaceCounts& EhrhartCache::counts(int face, long max_degree) {
  FaceCounts& fc = counts_[face];
  const int dim = lat_->face(face).dim;
  if (fc.all.empty()) {
    fc.all.push_back(1);
    // relint({0}) = {0}: the zero face is interior to itself.
    fc.interior.push_back(dim == 0 ? 1 : 0);
  }
  while ((long)fc.all.size() <= max_degree) {
    long k = (long)fc.all.size();
    if (dim == 0) {
      fc.all.push_back(0);
      fc.interior.push_back(0);
      continue;
    }
    auto [boundary, inner] = count_dilate(restricted(face), k);
    fc.all.push_back(boundary + inner);
    fc.interior.push_back(inner);
  }
  return fc;
}

Poly EhrhartCache::s_poly(int face) {
  auto it = s_.find(face);
  if (it != s_.end()) return it->second;
  const int rho = lat_->face(face).dim;
  Poly result;
  if (rho == 0) {
    result = Poly::constant(1);
  } else {
    const FaceCounts& fc = counts(face, rho);
    for (long j = 0; j <= rho; ++j) {
      Int c = 0;
      for (long i = 0; i <= j; ++i)
        c += ((j - i) % 2 == 0 ? 1 : -1) * binomial(rho, j - i) * fc.all[i];
      if (j == rho && c != 0)
        throw IntegrityError("s_poly: nonzero coefficient beyond the h* degree");
      if (c < 0) throw IntegrityError("s_poly: negative h* coefficient");
      result += Poly::monomial(c, j);
    }
    if (result.coeff(0) != 1) throw IntegrityError("s_poly: S(0) != 1");
  }
  s_.emplace(face, result);
  return result;
}

Poly EhrhartCache::t_poly(int face) {
  auto it = t_.find(face);
  if (it != t_.end()) return it->second;
  const int rho = lat_->face(face).dim;
  Poly result;
  if (rho == 0) {
    result = Poly::constant(1);
  } else {
    const FaceCounts& fc = counts(face, rho);
    for (long j = 0; j <= rho; ++j) {
      Int c = 0;
      for (long i = 0; i <= j; ++i)
        c += ((j - i) % 2 == 0 ? 1 : -1) * binomial(rho, j - i) * fc.interior[i];
      result += Poly::monomial(c, j);
    }
  }
  t_.emplace(face, result);
  return result;
}

bool EhrhartCache::check_reciprocity(int face) {
  const int rho = lat_->face(face).dim;
  Poly s = s_poly(face);
  Poly reversed = Poly::monomial(1, rho) * t_poly(face).subst({1, -1, 0}, {1, 0, 1});
  return s == reversed;
}

bool EhrhartCache::check_series_regrouping(int face, long K) {
  const int rho = lat_->face(face).dim;
  const FaceCounts& fc = counts(face, K);
  Poly series;
  for (long k = 0; k <= K; ++k) series += Poly::monomial(fc.interior[k], k);
  // (1-t)^{-rho} to order K.
  Poly inv;
  for (long j = 0; j <= K; ++j) inv += Poly::monomial(binomial(rho - 1 + j, j), j);
  Poly rhs = (t_poly(face) * inv).truncate_below(K + 1);
  return series == rhs;
}

}  // namespace stringy
