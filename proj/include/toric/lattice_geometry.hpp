#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "toric/numeric.hpp"
#include "toric/ray_set.hpp"

namespace toric {

/// A strongly convex, full-dimensional rational polyhedral cone given by its
/// primitive extremal ray generators in N = Z^d. Only constructible through
/// validate_cone(), so every instance satisfies the standing assumptions.
class Cone {
 public:
  std::size_t rank() const { return rank_; }
  std::size_t ray_count() const { return rays_.size(); }
  const std::vector<IntVector>& rays() const { return rays_; }
  const IntVector& ray(std::size_t i) const { return rays_[i]; }
  RaySet all_rays() const { return RaySet::full(rays_.size()); }

  /// (<m, n(rho)>)_rho for m in M.
  IntVector pairings(const IntVector& m) const;

 private:
  friend Cone validate_cone(std::size_t rank, std::vector<IntVector> rays);
  Cone(std::size_t rank, std::vector<IntVector> rays) : rank_(rank), rays_(std::move(rays)) {}

  std::size_t rank_;
  std::vector<IntVector> rays_;
};

/// Throws Error with NotPrimitive, NotStrictlyConvex, NotFullDimensional,
/// RedundantRay (checked in that order) or InvalidInput.
Cone validate_cone(std::size_t rank, std::vector<IntVector> rays);

struct Face {
  RaySet rays;
  std::size_t dim = 0;

  friend bool operator==(const Face&, const Face&) = default;
};

using FaceSet = std::set<RaySet, GradedOrder>;

struct Facet {
  RaySet rays;
  IntVector normal;  // primitive; 0 on the facet's rays, > 0 on every other ray
};

class FaceLattice {
 public:
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<Facet>& facets() const { return facets_; }
  std::size_t rank() const { return rank_; }
  std::size_t ray_count() const { return ray_count_; }

  bool is_face(RaySet rays) const;
  /// Throws std::out_of_range for a ray set that is not a face.
  const Face& face(RaySet rays) const;
  const Face& zero() const { return faces_.front(); }
  const Face& top() const { return faces_.back(); }

 private:
  friend FaceLattice face_lattice(const class Cone& cone);

  std::size_t rank_ = 0;
  std::size_t ray_count_ = 0;
  std::vector<Face> faces_;  // graded order: zero cone first, the cone itself last
  std::vector<Facet> facets_;
};

FaceLattice face_lattice(const Cone& cone);

/// tau_Pi: the smallest face whose ray set contains pi. The zero cone for pi empty.
Face minimal_face(const FaceLattice& lattice, RaySet pi);

/// All faces having some member of F as a face.
FaceSet star(const FaceLattice& lattice, const FaceSet& faces);

}  // namespace toric
