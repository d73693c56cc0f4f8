#include "toric/lattice_geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "toric/error.hpp"
#include "toric/linear_program.hpp"

namespace toric {

IntVector Cone::pairings(const IntVector& m) const {
  if (m.size() != rank_)
    throw Error(ErrorCode::DimensionMismatch,
                "degree has length " + std::to_string(m.size()) + ", expected " + std::to_string(rank_));
  IntVector out;
  out.reserve(rays_.size());
  for (const auto& r : rays_) out.push_back(dot(m, r));
  return out;
}

namespace {

// Nonnegative lambda, sum 1, with sum_i lambda_i * v_i = target (target may be zero).
// Returns the lambda or an empty vector when infeasible.
RatVector conic_combination(const std::vector<IntVector>& vectors, const IntVector& target, bool normalize) {
  const std::size_t d = target.size();
  const std::size_t k = vectors.size();
  std::vector<RatVector> A(d + (normalize ? 1 : 0), RatVector(k));
  RatVector b(A.size());
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < d; ++i) A[i][j] = vectors[j][i];
  for (std::size_t i = 0; i < d; ++i) b[i] = target[i];
  if (normalize) {
    for (std::size_t j = 0; j < k; ++j) A[d][j] = 1;
    b[d] = 1;
  }
  auto sol = lp::solve_standard(A, b, RatVector(k, Rational(0)));
  if (sol.status == lp::Status::Infeasible) return {};
  return sol.x;
}

std::string ray_text(std::size_t i) { return "ray " + std::to_string(i + 1); }

}  // namespace

Cone validate_cone(std::size_t rank, std::vector<IntVector> rays) {
  if (rank == 0) throw Error(ErrorCode::InvalidInput, "lattice rank must be positive");
  if (rays.empty()) throw Error(ErrorCode::InvalidInput, "at least one ray is required");
  if (rays.size() > RaySet::kMaxRays)
    throw Error(ErrorCode::TooManyRays, "at most " + std::to_string(RaySet::kMaxRays) + " rays are supported");
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (rays[i].size() != rank)
      throw Error(ErrorCode::DimensionMismatch,
                  ray_text(i) + " has length " + std::to_string(rays[i].size()) + ", expected " +
                      std::to_string(rank),
                  i);
    if (content(rays[i]) != 1)
      throw Error(ErrorCode::NotPrimitive, ray_text(i) + " " + to_string(rays[i]) + " is not primitive", i);
  }

  // A nontrivial nonnegative relation sum lambda_i n_i = 0 means the cone contains a line.
  auto relation = conic_combination(rays, IntVector(rank, Integer(0)), true);
  if (!relation.empty()) {
    std::size_t i = 0;
    while (relation[i] == 0) ++i;
    throw Error(ErrorCode::NotStrictlyConvex, ray_text(i) + " lies on a line contained in the cone", i);
  }

  if (toric::rank(rays) < rank)
    throw Error(ErrorCode::NotFullDimensional,
                "rays span a subspace of dimension " + std::to_string(toric::rank(rays)) + " < " +
                    std::to_string(rank),
                0);

  for (std::size_t i = 0; i < rays.size(); ++i) {
    std::vector<IntVector> others;
    for (std::size_t j = 0; j < rays.size(); ++j)
      if (j != i) others.push_back(rays[j]);
    if (others.empty()) break;
    if (!conic_combination(others, rays[i], false).empty())
      throw Error(ErrorCode::RedundantRay, ray_text(i) + " is a nonnegative combination of the others", i);
  }
  return Cone(rank, std::move(rays));
}

namespace {

// Integer normal of the hyperplane spanned by d-1 vectors (generalized cross product).
IntVector cofactor_normal(const std::vector<const IntVector*>& spanning, std::size_t d) {
  IntVector normal(d);
  for (std::size_t skip = 0; skip < d; ++skip) {
    IntMatrix minor;
    minor.reserve(spanning.size());
    for (const auto* v : spanning) {
      IntVector row;
      row.reserve(d - 1);
      for (std::size_t j = 0; j < d; ++j)
        if (j != skip) row.push_back((*v)[j]);
      minor.push_back(std::move(row));
    }
    Integer det = determinant(std::move(minor));
    normal[skip] = (skip % 2 == 0) ? det : Integer(-det);
  }
  Integer g = content(normal);
  if (g > 1)
    for (auto& x : normal) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return normal;
}

// Calls f on every k-subset of {0..n-1}, as a RaySet.
template <typename F>
void for_each_subset_of_size(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(RaySet::of(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

FaceLattice face_lattice(const Cone& cone) {
  const std::size_t d = cone.rank();
  const std::size_t n = cone.ray_count();
  FaceLattice lattice;
  lattice.rank_ = d;
  lattice.ray_count_ = n;

  std::set<RaySet> seen;
  for_each_subset_of_size(n, d - 1, [&](RaySet subset) {
    std::vector<const IntVector*> spanning;
    for (auto i : subset.indices()) spanning.push_back(&cone.ray(i));
    IntVector normal = cofactor_normal(spanning, d);
    if (content(normal) == 0) return;  // subset spans less than d-1 dimensions
    bool pos = false, neg = false;
    RaySet zeros;
    for (std::size_t i = 0; i < n; ++i) {
      int s = sgn(dot(normal, cone.ray(i)));
      if (s > 0) pos = true;
      if (s < 0) neg = true;
      if (s == 0) zeros = zeros.with(i);
    }
    if (pos && neg) return;
    if (neg)
      for (auto& x : normal) x = -x;
    if (!seen.insert(zeros).second) return;
    lattice.facets_.push_back(Facet{zeros, std::move(normal)});
  });
  std::sort(lattice.facets_.begin(), lattice.facets_.end(),
            [](const Facet& a, const Facet& b) { return GradedOrder{}(a.rays, b.rays); });

  // Faces are the intersections of facets; close the facet ray sets under meets.
  FaceSet rays{RaySet(), cone.all_rays()};
  for (const auto& f : lattice.facets_) rays.insert(f.rays);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<RaySet> current(rays.begin(), rays.end());
    for (const auto& f : lattice.facets_)
      for (auto s : current)
        if (rays.insert(s & f.rays).second) grew = true;
  }

  for (auto s : rays) {
    std::vector<IntVector> spanning;
    for (auto i : s.indices()) spanning.push_back(cone.ray(i));
    lattice.faces_.push_back(Face{s, toric::rank(std::move(spanning))});
  }
  return lattice;
}

bool FaceLattice::is_face(RaySet rays) const {
  return std::binary_search(faces_.begin(), faces_.end(), Face{rays, 0},
                            [](const Face& a, const Face& b) { return GradedOrder{}(a.rays, b.rays); });
}

const Face& FaceLattice::face(RaySet rays) const {
  auto it = std::lower_bound(faces_.begin(), faces_.end(), Face{rays, 0},
                             [](const Face& a, const Face& b) { return GradedOrder{}(a.rays, b.rays); });
  if (it == faces_.end() || it->rays != rays) throw std::out_of_range("not a face: " + rays.label());
  return *it;
}

Face minimal_face(const FaceLattice& lattice, RaySet pi) {
  RaySet meet = lattice.top().rays;
  for (const auto& f : lattice.facets())
    if (pi.subset_of(f.rays)) meet = meet & f.rays;
  return lattice.face(meet);
}

FaceSet star(const FaceLattice& lattice, const FaceSet& faces) {
  FaceSet out;
  for (const auto& eta : lattice.faces()) {
    for (auto tau : faces) {
      if (tau.subset_of(eta.rays)) {
        out.insert(eta.rays);
        break;
      }
    }
  }
  return out;
}

}  // namespace toric
