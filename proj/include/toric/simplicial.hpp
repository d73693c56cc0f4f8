#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "toric/ray_set.hpp"

namespace toric {

/// Coefficient field, determined up to isomorphism-invariance of dimension counts
/// by its characteristic: 0 (the rationals) or a prime p < 2^31.
class FieldSpec {
 public:
  FieldSpec() = default;
  /// Throws Error(InvalidField) unless characteristic is 0 or a prime below 2^31.
  explicit FieldSpec(std::uint64_t characteristic);

  std::uint64_t characteristic() const { return characteristic_; }
  friend bool operator==(FieldSpec, FieldSpec) = default;

 private:
  std::uint64_t characteristic_ = 0;
};

/// A downward-closed family of subsets of the ordered vertex universe {0..n-1}.
/// The void complex (no faces at all) is allowed; otherwise the empty face is present.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Validates downward closure; throws Error(InvalidInput) otherwise.
  static SimplicialComplex from_faces(std::size_t vertex_count, std::vector<RaySet> faces);
  /// All subsets of `vertices`.
  static SimplicialComplex full_simplex(std::size_t vertex_count, RaySet vertices);
  static SimplicialComplex void_complex(std::size_t vertex_count);

  std::size_t vertex_count() const { return vertex_count_; }
  /// Faces in graded order (by size, then bit pattern).
  const std::vector<RaySet>& faces() const { return faces_; }
  bool contains(RaySet face) const;
  bool is_void() const { return faces_.empty(); }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<RaySet> faces_;
};

/// A sparse integer matrix with entries +-1, rows indexed by the target basis.
struct CoboundaryMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  struct Entry {
    std::size_t row;
    std::size_t col;
    int value;
  };
  std::vector<Entry> entries;

  std::vector<std::vector<std::int64_t>> dense() const;
};

/// An augmented (or relative) cochain complex with one basis per degree, starting
/// at min_degree; coboundary[k] maps degree (min_degree + k) to the next degree.
struct CochainComplex {
  int min_degree = -1;
  std::vector<std::vector<RaySet>> bases;
  std::vector<CoboundaryMatrix> coboundary;

  std::size_t rank_at(int degree) const;
};

/// Dimensions indexed by degree, from min_degree upward.
struct GradedDims {
  int min_degree = -1;
  std::vector<std::size_t> dims;

  std::size_t at(int degree) const;
  bool all_zero() const;
  friend bool operator==(const GradedDims&, const GradedDims&) = default;
};

/// The augmented cochain complex of the simplex on pi, signs from the global vertex
/// order. For pi empty this is the exact two-term complex Z -> Z in degrees -2, -1.
CochainComplex augmented_cochain(RaySet pi);

/// Augmented cochain complex of a complex K (degrees -1 .. n-1).
CochainComplex cochain_complex(const SimplicialComplex& complex);

/// Relative cochains of the pair (simplex on pi, pi cap K): faces of pi not in K.
CochainComplex relative_cochain(RaySet pi, const SimplicialComplex& complex);

/// The faces of K contained in pi.
SimplicialComplex restrict(const SimplicialComplex& complex, RaySet pi);

/// dim H~^i(K; k) for i = -1 .. n-1.
GradedDims reduced_cohomology_dims(const SimplicialComplex& complex, FieldSpec field);

/// dim H~^i(pi, pi cap K; k) for i = -1 .. n. For pi empty the simplex carries the
/// exact two-term augmentation, so every dimension vanishes.
GradedDims relative_cohomology_dims(RaySet pi, const SimplicialComplex& complex, FieldSpec field);

/// Cohomology dimensions of an arbitrary cochain complex.
GradedDims cohomology_dims(const CochainComplex& complex, FieldSpec field, int top_degree);

/// Exact rank of a coboundary matrix over the field.
std::size_t matrix_rank(const CoboundaryMatrix& m, FieldSpec field);

/// Number of connected components of the 1-skeleton (0 for the void or {empty} complex).
std::size_t connected_components(const SimplicialComplex& complex);

}  // namespace toric
