#include "stringy/cone.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace stringy {

namespace {

using Bits = boost::dynamic_bitset<>;

std::vector<std::vector<Rat>> to_rat(const std::vector<Vec>& rows) {
  std::vector<std::vector<Rat>> m;
  m.reserve(rows.size());
  for (const Vec& r : rows) m.emplace_back(r.begin(), r.end());
  return m;
}

// Greedily pick a row subset of full rank.
std::vector<int> independent_rows(int rank, const std::vector<Vec>& rows) {
  std::vector<int> picked;
  std::vector<Vec> acc;
  for (size_t i = 0; i < rows.size() && (int)picked.size() < rank; ++i) {
    acc.push_back(rows[i]);
    if (rank_of_rows(acc, rank) == (int)acc.size())
      picked.push_back((int)i);
    else
      acc.pop_back();
  }
  return picked;
}

// Solve A x = e_j exactly and scale to a primitive integer vector.
Vec solve_unit(const std::vector<Vec>& a, int rank, int j) {
  std::vector<std::vector<Rat>> m = to_rat(a);
  for (int r = 0; r < rank; ++r) m[r].emplace_back(r == j ? 1 : 0);
  // Gauss-Jordan
  for (int col = 0, row = 0; col < rank; ++col) {
    int pr = row;
    while (pr < rank && m[pr][col] == 0) ++pr;
    if (pr == rank) throw IntegrityError("solve_unit: singular matrix");
    std::swap(m[row], m[pr]);
    Rat inv = Rat(1) / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (int r = 0; r < rank; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int c = 0; c <= rank; ++c) m[r][c] -= f * m[row][c];
    }
    ++row;
  }
  Int lcm = 1;
  for (int r = 0; r < rank; ++r)
    lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(m[r][rank]));
  Vec x(rank);
  for (int r = 0; r < rank; ++r) {
    Rat scaled = m[r][rank] * lcm;
    x[r] = boost::multiprecision::numerator(scaled);
  }
  return make_primitive(std::move(x));
}

}  // namespace

std::vector<Vec> dual_extreme_rays(int rank, const std::vector<Vec>& rows) {
  if (rank <= 0) throw StructureError("dual_extreme_rays: rank must be positive");
  std::vector<int> init = independent_rows(rank, rows);
  if ((int)init.size() != rank)
    throw StructureError("dual_extreme_rays: rows do not span full rank");

  // Initial simplicial cone: rays r_j with <a_i, r_j> = delta_ij * positive.
  std::vector<Vec> basis;
  for (int i : init) basis.push_back(rows[i]);
  struct Ray {
    Vec v;
    Bits zero;  // zero set over all rows
  };
  std::vector<Ray> rays;
  const size_t nrows = rows.size();
  auto zero_set = [&](const Vec& v) {
    Bits z(nrows);
    for (size_t i = 0; i < nrows; ++i)
      if (pair(rows[i], v) == 0) z.set(i);
    return z;
  };
  for (int j = 0; j < rank; ++j) {
    Vec r = solve_unit(basis, rank, j);
    if (pair(rows[init[j]], r) < 0)
      for (Int& x : r) x = -x;
    rays.push_back({r, zero_set(r)});
  }

  Bits processed(nrows);
  for (int i : init) processed.set(i);

  for (size_t i = 0; i < nrows; ++i) {
    if (processed[i]) continue;
    processed.set(i);
    std::vector<int> pos, neg, zero;
    std::vector<Int> val(rays.size());
    for (size_t k = 0; k < rays.size(); ++k) {
      val[k] = pair(rows[i], rays[k].v);
      if (val[k] > 0)
        pos.push_back((int)k);
      else if (val[k] < 0)
        neg.push_back((int)k);
      else
        zero.push_back((int)k);
    }
    if (neg.empty()) continue;
    std::vector<Ray> next;
    for (int k : pos) next.push_back(rays[k]);
    for (int k : zero) next.push_back(rays[k]);
    for (int p : pos) {
      for (int n : neg) {
        // Combinatorial adjacency: no third ray's zero set contains the
        // common zero set of p and n (restricted to processed rows).
        Bits common = rays[p].zero & rays[n].zero & processed;
        bool adjacent = true;
        for (size_t k = 0; k < rays.size() && adjacent; ++k) {
          if ((int)k == p || (int)k == n) continue;
          if (common.is_subset_of(rays[k].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        Vec w(rank);
        for (int c = 0; c < rank; ++c)
          w[c] = val[p] * rays[n].v[c] - val[n] * rays[p].v[c];
        w = make_primitive(std::move(w));
        next.push_back({w, zero_set(w)});
      }
    }
    rays = std::move(next);
  }

  std::set<Vec> dedup;
  for (const Ray& r : rays) dedup.insert(r.v);
  return {dedup.begin(), dedup.end()};
}

Cone Cone::from_generators(int rank, std::vector<Vec> gens) {
  if (rank <= 0) throw StructureError("cone: rank must be positive");
  std::set<Vec> uniq;
  for (Vec& g : gens) {
    if ((int)g.size() != rank) throw DimensionError("cone: generator of wrong length");
    if (is_zero_vector(g)) continue;
    uniq.insert(make_primitive(std::move(g)));
  }
  std::vector<Vec> prim(uniq.begin(), uniq.end());
  if (prim.empty()) throw StructureError("cone: no nonzero generators");
  if (rank_of_rows(prim, rank) != rank)
    throw StructureError("cone: not full-dimensional");

  std::vector<Vec> facets = dual_extreme_rays(rank, prim);
  if (rank_of_rows(facets, rank) != rank)
    throw StructureError("cone: not pointed");

  // Extreme rays: generators whose tight facet set spans a hyperplane.
  std::vector<Vec> extreme;
  for (const Vec& g : prim) {
    std::vector<Vec> tight;
    for (const Vec& f : facets) {
      Int s = pair(g, f);
      if (s < 0) throw IntegrityError("cone: generator violates computed facet");
      if (s == 0) tight.push_back(f);
    }
    if (rank_of_rows(tight, rank) == rank - 1) extreme.push_back(g);
  }
  if (extreme.empty() || rank_of_rows(extreme, rank) != rank)
    throw IntegrityError("cone: extreme ray reduction failed");
  for (const Vec& f : facets) {
    std::vector<Vec> tight;
    for (const Vec& g : extreme)
      if (pair(g, f) == 0) tight.push_back(g);
    if (rank_of_rows(tight, rank) != rank - 1)
      throw IntegrityError("cone: facet not supported by rank-1 worth of rays");
  }

  Cone c;
  c.rank_ = rank;
  c.gens_ = std::move(extreme);
  c.facets_ = std::move(facets);
  c.degree_form_ = solve_degree_form(rank, c.gens_);
  return c;
}

Cone Cone::dual() const {
  Cone c;
  c.rank_ = rank_;
  c.gens_ = facets_;
  c.facets_ = gens_;
  c.degree_form_ = solve_degree_form(rank_, c.gens_);
  return c;
}

std::optional<Polytope> Cone::supporting_polytope() const {
  if (!is_gorenstein()) return std::nullopt;
  Polytope p;
  p.rank_ = rank_;
  p.vertices_ = gens_;
  p.dim_ = rank_ - 1;
  return p;
}

std::optional<Int> Cone::reflexive_index() const {
  if (!is_gorenstein()) return std::nullopt;
  std::optional<Vec> mstar = solve_degree_form(rank_, facets_);
  if (!mstar) return std::nullopt;
  return pair(*mstar, *degree_form_);
}

bool Cone::contains(const Vec& m) const {
  for (const Vec& f : facets_)
    if (pair(m, f) < 0) return false;
  return true;
}

Int Cone::degree_of(const Vec& m) const {
  if (!is_gorenstein()) throw StructureError("degree_of: cone is not Gorenstein");
  return pair(m, *degree_form_);
}

Polytope Polytope::from_points(int rank, std::vector<Vec> points) {
  std::set<Vec> uniq;
  for (Vec& p : points) {
    if ((int)p.size() != rank) throw DimensionError("polytope: point of wrong length");
    uniq.insert(std::move(p));
  }
  if (uniq.empty()) throw StructureError("polytope: no points");
  std::vector<Vec> pts(uniq.begin(), uniq.end());

  Polytope poly;
  poly.rank_ = rank;
  if (pts.size() == 1) {
    poly.dim_ = 0;
    poly.vertices_ = std::move(pts);
    return poly;
  }

  // Work in the affine span: translate by pts[0], re-coordinatize, lift to a
  // cone at height one; its extreme rays are the vertices.
  const Vec& origin = pts[0];
  std::vector<Vec> diffs;
  for (const Vec& p : pts) {
    Vec d(rank);
    for (int i = 0; i < rank; ++i) d[i] = p[i] - origin[i];
    diffs.push_back(std::move(d));
  }
  std::vector<Vec> basis = saturated_span_basis(rank, diffs);
  const int ad = (int)basis.size();
  poly.dim_ = ad;

  std::vector<Vec> lifted;
  for (const Vec& d : diffs) {
    std::optional<Vec> c = integral_coordinates(d, basis);
    if (!c) throw IntegrityError("polytope: point outside saturated span");
    Vec l(ad + 1);
    l[0] = 1;
    for (int i = 0; i < ad; ++i) l[i + 1] = (*c)[i];
    lifted.push_back(std::move(l));
  }
  Cone lift = Cone::from_generators(ad + 1, lifted);
  for (const Vec& g : lift.generators()) {
    if (g[0] != 1) throw IntegrityError("polytope: lifted ray not at height one");
    Vec vert = origin;
    for (int i = 0; i < ad; ++i)
      for (int j = 0; j < rank; ++j) vert[j] += g[i + 1] * basis[i][j];
    poly.vertices_.push_back(std::move(vert));
  }
  std::sort(poly.vertices_.begin(), poly.vertices_.end());
  return poly;
}

FaceLattice::FaceLattice(const Cone& cone) : cone_(&cone), poset_({}, {}) {
  const auto& gens = cone.generators();
  const auto& facets = cone.facet_normals();
  const size_t ng = gens.size(), nf = facets.size();

  // Incidence matrix.
  std::vector<Bits> tight_facets(ng, Bits(nf));
  for (size_t g = 0; g < ng; ++g)
    for (size_t f = 0; f < nf; ++f)
      if (pair(gens[g], facets[f]) == 0) tight_facets[g].set(f);

  auto gens_of = [&](const Bits& fset) {
    Bits gs(ng);
    for (size_t g = 0; g < ng; ++g)
      if ((fset & ~tight_facets[g]).none()) gs.set(g);
    return gs;
  };
  auto facets_of = [&](const Bits& gset) {
    Bits fs(nf);
    fs.set();
    for (size_t g = 0; g < ng; ++g)
      if (gset[g]) fs &= tight_facets[g];
    return fs;
  };

  // Enumerate faces as closures, walking down from the whole cone.
  std::map<Bits, Bits> by_gens;  // gens bitset -> incident facets bitset
  Bits top_gens(ng);
  top_gens.set();
  by_gens.emplace(top_gens, facets_of(top_gens));
  std::vector<Bits> queue = {top_gens};
  while (!queue.empty()) {
    Bits cur = queue.back();
    queue.pop_back();
    Bits curf = by_gens.at(cur);
    for (size_t f = 0; f < nf; ++f) {
      if (curf[f]) continue;
      Bits nf_set = curf;
      nf_set.set(f);
      Bits ng_set = gens_of(nf_set);
      // facets_of(empty) is the full facet set, so the zero face closes
      // correctly here as well.
      Bits closure = facets_of(ng_set);
      if (by_gens.emplace(ng_set, closure).second) queue.push_back(ng_set);
    }
  }

  for (const auto& [gset, fset] : by_gens) {
    FaceInfo info;
    info.gens = gset;
    info.facets = fset;
    std::vector<Vec> sub;
    for (size_t g = 0; g < ng; ++g)
      if (gset[g]) sub.push_back(gens[g]);
    info.dim = sub.empty() ? 0 : rank_of_rows(sub, cone.rank());
    faces_.push_back(std::move(info));
  }
  std::sort(faces_.begin(), faces_.end(), [](const FaceInfo& a, const FaceInfo& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.gens < b.gens;
  });

  const int n = (int)faces_.size();
  std::vector<Bits> leq(n, Bits(n));
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) {
    rank[i] = faces_[i].dim;
    for (int j = 0; j < n; ++j)
      if (faces_[i].gens.is_subset_of(faces_[j].gens)) leq[i].set(j);
  }
  poset_ = GradedPoset(std::move(leq), std::move(rank));
}

std::vector<int> FaceLattice::faces_of_dim(int k) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (faces_[i].dim == k) out.push_back(i);
  return out;
}

int FaceLattice::face_of_point(const Vec& m) const {
  const auto& facets = cone_->facet_normals();
  Bits tight(facets.size());
  for (size_t f = 0; f < facets.size(); ++f) {
    Int s = pair(m, facets[f]);
    if (s < 0) throw StructureError("face_of_point: point outside the cone");
    if (s == 0) tight.set(f);
  }
  // m lies in the relative interior of exactly one face, whose incident
  // facet set is the tight set of m.
  for (int i = 0; i < size(); ++i)
    if (faces_[i].facets == tight) return i;
  throw IntegrityError("face_of_point: no face matches the tight set");
}

int dual_face_index(const FaceLattice& lat, const FaceLattice& dual_lat, int face) {
  const FaceInfo& f = lat.face(face);
  // Generators of the dual face F* are exactly the facet normals incident to
  // F; in the dual lattice those normals are the generators.
  for (int i = 0; i < dual_lat.size(); ++i)
    if (dual_lat.face(i).gens == f.facets) return i;
  throw IntegrityError("dual_face_index: missing dual face");
}

RestrictedCone restrict_to_span(const Cone& cone, const FaceLattice& lat, int face) {
  const FaceInfo& info = lat.face(face);
  if (info.dim < 1) throw StructureError("restrict_to_span: needs dim >= 1");
  if (!cone.is_gorenstein())
    throw StructureError("restrict_to_span: parent cone is not Gorenstein");

  RestrictedCone out;
  if (info.dim == cone.rank()) {
    out.cone = cone;
    out.degree_form = *cone.degree_form();
    out.basis.assign(cone.rank(), Vec(cone.rank(), 0));
    for (int i = 0; i < cone.rank(); ++i) out.basis[i][i] = 1;
    return out;
  }

  // span(face) = kernel of the incident facet normals (saturated).
  std::vector<Vec> normals;
  for (size_t f = 0; f < cone.facet_normals().size(); ++f)
    if (info.facets[f]) normals.push_back(cone.facet_normals()[f]);
  out.basis = integer_kernel(cone.rank(), normals);
  if ((int)out.basis.size() != info.dim)
    throw IntegrityError("restrict_to_span: span dimension mismatch");

  std::vector<Vec> gens;
  for (size_t g = 0; g < cone.generators().size(); ++g) {
    if (!info.gens[g]) continue;
    std::optional<Vec> c = integral_coordinates(cone.generators()[g], out.basis);
    if (!c) throw IntegrityError("restrict_to_span: generator outside span lattice");
    gens.push_back(std::move(*c));
  }
  out.cone = Cone::from_generators(info.dim, std::move(gens));

  out.degree_form.assign(info.dim, 0);
  for (int i = 0; i < info.dim; ++i)
    out.degree_form[i] = pair(out.basis[i], *cone.degree_form());
  return out;
}

}  // namespace stringy
