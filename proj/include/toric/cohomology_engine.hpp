#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/chambers.hpp"
#include "toric/lattice_geometry.hpp"
#include "toric/simplicial.hpp"
#include "toric/toric_data.hpp"

namespace toric {

/// dim (H^i_B R^D)_m for i = 0 .. n+1 (dims.min_degree == 0).
struct CohomologyReport {
  IntVector degree;
  RaySet sigma_m;
  GradedDims dims;
};

/// dims[i] = dim H~^{i-2}(Xi_B cap Sigma_m). When Sigma_m is empty the simplex on it
/// carries the exact two-term augmentation and every entry vanishes, except for the
/// unit ideal (empty support), where H^0_B R^D = R^D gives dims[0] = 1.
CohomologyReport graded_local_cohomology(const Cone& cone, const FaceLattice& lattice, const Divisor& divisor,
                                         const MonomialIdeal& ideal, const IntVector& m, FieldSpec field);

/// The same numbers through the relative complex of (Sigma_m, Sigma_m cap Xi_B):
/// dims[i] = dim H^{i-1}(Sigma_m, Sigma_m cap Xi_B).
GradedDims graded_local_cohomology_relative(const Cone& cone, const FaceLattice& lattice, const Divisor& divisor,
                                            const MonomialIdeal& ideal, const IntVector& m, FieldSpec field);

enum class PiOutcome {
  Vanishing,       // H~^{i-2}(pi cap xi) = 0 for every i < d
  NoIntegerPoint,  // the semi-strict chamber has no lattice point
  Violation,       // both fail: some (H^i R^D)_m with i < d is nonzero
};

const char* to_string(PiOutcome outcome);

struct PiRecord {
  RaySet pi;
  PiOutcome outcome = PiOutcome::Vanishing;
  std::optional<int> degree;  // least i < d with H~^{i-2}(pi cap xi) != 0
  std::optional<IntVector> witness;
  std::optional<Integer> search_bound;  // for NoIntegerPoint
};

struct McmCertificate {
  bool mcm = true;
  std::optional<PiRecord> violation;
  /// Records for nonempty pi in bit order; when mcm is false, up to the violation.
  std::vector<PiRecord> records;
};

McmCertificate mcm_check(const Cone& cone, const FaceLattice& lattice, const Divisor& divisor, FieldSpec field,
                         const SweepOptions& options = {});

/// Re-derives a violation: the witness lies in the semi-strict chamber of pi and
/// H~^{degree-2}(pi cap xi) is nonzero.
bool verify_violation(const Cone& cone, const FaceLattice& lattice, const Divisor& divisor, FieldSpec field,
                      const PiRecord& record);

/// Least i such that H^i R^D (maximal ideal) is nonzero in some degree, capped at d.
std::size_t depth(const Cone& cone, const FaceLattice& lattice, const Divisor& divisor, FieldSpec field,
                  const SweepOptions& options = {});

/// Representative of D modulo {(<m, n(rho)>)_rho : m in M}, reduced against the
/// Hermite normal form of that lattice: at each pivot column the entry lies in
/// [0, pivot).
Divisor canonical_class(const Cone& cone, const Divisor& divisor);

struct McmEnumeration {
  std::size_t coeff_bound = 0;
  std::size_t divisors_searched = 0;
  std::size_t classes_searched = 0;
  std::vector<Divisor> mcm_classes;  // canonical representatives, sorted
};

/// Throws Error(SearchTooLarge) when coeff_bound exceeds options.max_box or the box
/// holds more than max_divisors divisors.
McmEnumeration mcm_enumerate(const Cone& cone, const FaceLattice& lattice, std::size_t coeff_bound, FieldSpec field,
                             const SweepOptions& options = {});

inline constexpr std::size_t max_divisors = 2'000'000;

struct LocalDepth {
  RaySet face;
  std::optional<std::size_t> depth;  // none when no i <= dim tau is realized
};

struct SingularitySets {
  std::size_t rank = 0;
  std::vector<FaceSet> levels;  // levels[i] = S_i, i = 0 .. d
  std::vector<LocalDepth> local_depths;  // in face-lattice order
};

SingularitySets singularity_sets(const Cone& cone, const FaceLattice& lattice, const Divisor& divisor,
                                 FieldSpec field, const SweepOptions& options = {});

}  // namespace toric
