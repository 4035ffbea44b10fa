#pragma once

#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "stringy/lattice.hpp"
#include "stringy/poset.hpp"

namespace stringy {

/// Lattice polytope given by its vertex set (exactly the extreme points).
class Polytope {
 public:
  /// Convex hull of a point set: deduplicates and keeps extreme points only.
  static Polytope from_points(int rank, std::vector<Vec> points);

  int rank() const { return rank_; }
  int dim() const { return dim_; }
  const std::vector<Vec>& vertices() const { return vertices_; }

 private:
  friend class Cone;
  Polytope() = default;
  int rank_ = 0;
  int dim_ = 0;
  std::vector<Vec> vertices_;  // sorted lexicographically
};

/// Extreme rays of { y : <row, y> >= 0 for all rows } via the double
/// description method.  Requires rank_of_rows(rows) == rank (the result cone
/// is then pointed).  Rays are primitive and sorted lexicographically.
std::vector<Vec> dual_extreme_rays(int rank, const std::vector<Vec>& rows);

/// Full-dimensional pointed rational polyhedral cone with both descriptions.
class Cone {
 public:
  /// Computes the facet normals, reduces the generators to primitive extreme
  /// rays, and validates pointedness and full dimension (StructureError).
  static Cone from_generators(int rank, std::vector<Vec> gens);

  int rank() const { return rank_; }
  const std::vector<Vec>& generators() const { return gens_; }
  const std::vector<Vec>& facet_normals() const { return facets_; }

  /// Roles of generators and facets swapped.
  Cone dual() const;

  bool is_gorenstein() const { return degree_form_.has_value(); }
  /// The unique form pairing to 1 with every primitive extreme ray, if any.
  const std::optional<Vec>& degree_form() const { return degree_form_; }
  /// Supporting polytope at degree 1 (vertices = the primitive generators).
  std::optional<Polytope> supporting_polytope() const;
  /// <m_{C*}, n_C> when both this cone and its dual are Gorenstein.
  std::optional<Int> reflexive_index() const;

  bool contains(const Vec& m) const;
  Int degree_of(const Vec& m) const;  // requires Gorenstein

 private:
  Cone() = default;
  int rank_ = 0;
  std::vector<Vec> gens_;    // primitive extreme rays, sorted
  std::vector<Vec> facets_;  // primitive inward normals, sorted
  std::optional<Vec> degree_form_;
};

/// One face of a cone: identified by its incident facet set; carries the
/// generators lying on it and its dimension.
struct FaceInfo {
  boost::dynamic_bitset<> gens;    // generator indices on the face
  boost::dynamic_bitset<> facets;  // incident facet indices
  int dim = 0;
};

/// The Eulerian poset of faces of a cone, with face geometry attached.
/// Face ids coincide with poset element ids.
class FaceLattice {
 public:
  explicit FaceLattice(const Cone& cone);

  const Cone& cone() const { return *cone_; }
  int size() const { return (int)faces_.size(); }
  const FaceInfo& face(int i) const { return faces_[i]; }
  const GradedPoset& poset() const { return poset_; }
  int bottom() const { return poset_.bottom(); }
  int top() const { return poset_.top(); }
  std::vector<int> faces_of_dim(int k) const;

  /// The face whose relative interior contains m.  Requires m in the cone.
  int face_of_point(const Vec& m) const;

 private:
  const Cone* cone_;
  std::vector<FaceInfo> faces_;
  GradedPoset poset_;
};

/// Index in the dual cone's face lattice of the dual face
/// F* = { z in C* : <z', z> = 0 for all z' in F }.
int dual_face_index(const FaceLattice& lat, const FaceLattice& dual_lat, int face);

/// A face re-coordinatized into its own lattice: `cone` is full-dimensional
/// and pointed of rank = dim(face); `basis` rows span span(face) ∩ Z^d, and
/// `degree_form` is the parent degree form expressed in those coordinates.
struct RestrictedCone {
  Cone cone;
  Vec degree_form;
  std::vector<Vec> basis;
};

/// Requires dim(face) >= 1 and a Gorenstein parent.
RestrictedCone restrict_to_span(const Cone& cone, const FaceLattice& lat, int face);

}  // namespace stringy
