#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/feasibility.hpp"
#include "toric/lattice_geometry.hpp"
#include "toric/simplicial.hpp"
#include "toric/toric_data.hpp"

namespace toric {

/// Worker count and resource caps shared by every 2^n or box sweep.
struct SweepOptions {
  std::size_t max_rays = 12;
  std::size_t max_box = 5;
  unsigned jobs = 0;  // 0: hardware concurrency
};

/// Throws Error(TooManyRays) when the cone has more rays than allowed.
void check_ray_cap(const Cone& cone, const SweepOptions& options);

enum class ChamberFlavor { Strict, Semistrict, Closed };

/// <m, n(rho)> below -n_rho for rho in pi, above it elsewhere; the flavor decides
/// which sides are strict (strict: both, semistrict: the pi side, closed: neither).
InequalitySystem chamber_system(const Cone& cone, const Divisor& divisor, RaySet pi, ChamberFlavor flavor);

/// Same, restricted to the rays in `scope` (rows for rho outside scope are dropped).
InequalitySystem chamber_system(const Cone& cone, const Divisor& divisor, RaySet pi, ChamberFlavor flavor,
                                RaySet scope);

/// Whether cone(n_rho : rho in pi) and cone(n_rho : rho not in pi) share a nonzero
/// vector. False for pi empty or all rays.
bool cones_intersect(const Cone& cone, RaySet pi);

struct ChamberReport {
  RaySet pi;
  bool strict_nonempty = false;
  bool semistrict_nonempty = false;
  std::optional<IntVector> lattice_witness;  // a point of the semi-strict chamber in M
  std::size_t recession_dim = 0;             // of the closed chamber
  bool bounded = false;
  bool cones_intersect = false;
  GradedDims cohomology;  // H~^i(pi cap xi), i = -1 .. n-1
};

ChamberReport classify_chamber(const Cone& cone, const FaceLattice& lattice, const Divisor& divisor, RaySet pi,
                               const SimplicialComplex& xi, FieldSpec field);

/// One report per subset, ordered by the subset's bit pattern.
std::vector<ChamberReport> enumerate_chambers(const Cone& cone, const FaceLattice& lattice, const Divisor& divisor,
                                              const SimplicialComplex& xi, FieldSpec field,
                                              const SweepOptions& options = {});

}  // namespace toric
