#pragma once

#include <vector>

#include "toric/lattice_geometry.hpp"
#include "toric/numeric.hpp"
#include "toric/simplicial.hpp"

namespace toric {

/// D = sum n_rho D_rho, coefficients in the cone's ray order.
struct Divisor {
  IntVector coefficients;

  static Divisor zero(const Cone& cone) { return Divisor{IntVector(cone.ray_count(), Integer(0))}; }
  friend bool operator==(const Divisor&, const Divisor&) = default;
};

/// Throws Error(DimensionMismatch) if the length differs from the ray count.
void check_divisor(const Cone& cone, const Divisor& divisor);

class MonomialIdeal {
 public:
  static MonomialIdeal maximal() { return MonomialIdeal(); }
  /// Throws Error(InvalidInput) for an empty generator list.
  static MonomialIdeal generated_by(std::vector<IntVector> generators);

  bool is_maximal() const { return maximal_; }
  const std::vector<IntVector>& generators() const { return generators_; }

 private:
  MonomialIdeal() = default;
  bool maximal_ = true;
  std::vector<IntVector> generators_;
};

/// Throws Error(InvalidGenerator) for a generator outside sigma_M and
/// Error(DimensionMismatch) for one of the wrong length.
void check_ideal(const Cone& cone, const MonomialIdeal& ideal);

/// supp(B): faces tau such that no generator lies in tau-perp.
FaceSet support(const Cone& cone, const FaceLattice& lattice, const MonomialIdeal& ideal);

/// Xi_F = {Pi : tau_Pi not in star(F)}.
SimplicialComplex cosupport(const FaceLattice& lattice, const FaceSet& faces);

/// Sigma_m = {rho : <m, n(rho)> < -n_rho}.
RaySet sigma_m(const Cone& cone, const Divisor& divisor, const IntVector& m);

}  // namespace toric
