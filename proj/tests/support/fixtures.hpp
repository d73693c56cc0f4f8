#pragma once

#include "oracles.hpp"
#include "toric/lattice_geometry.hpp"
#include "toric/toric_data.hpp"

namespace fixtures {

using oracle::vecs;

// Four rays in rank 3; the boundary of the cross-section is a 4-cycle.
inline toric::Cone four_ray() {
  return toric::validate_cone(3, vecs({{1, 0, 0}, {0, 1, 0}, {-1, 1, 1}, {0, 0, 1}}));
}

// The four-ray cone extended by an orthogonal fifth ray.
inline toric::Cone five_ray() {
  return toric::validate_cone(
      4, vecs({{1, 0, 0, 0}, {0, 1, 0, 0}, {-1, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
}

// Cone over the unit cube at height x_4 = 1.
inline toric::Cone cube() {
  return toric::validate_cone(4, vecs({{0, 0, 0, 1},
                                       {1, 0, 0, 1},
                                       {0, 1, 0, 1},
                                       {0, 0, 1, 1},
                                       {1, 1, 0, 1},
                                       {1, 0, 1, 1},
                                       {0, 1, 1, 1},
                                       {1, 1, 1, 1}}));
}

// Same combinatorics as cube(), rays 4 and 6 moved.
inline toric::Cone skew_cube() {
  return toric::validate_cone(4, vecs({{0, 0, 0, 1},
                                       {1, 0, 0, 1},
                                       {0, 1, 0, 1},
                                       {0, -1, 1, 1},
                                       {1, 1, 0, 1},
                                       {1, -1, 1, 1},
                                       {0, 1, 1, 1},
                                       {1, 1, 1, 1}}));
}

inline toric::Divisor divisor(std::initializer_list<long> xs) { return toric::Divisor{oracle::vec(xs)}; }

// -k D_2 on a cone with n rays.
inline toric::Divisor minus_k_d2(std::size_t n, long k) {
  toric::IntVector c(n, toric::Integer(0));
  c[1] = -k;
  return toric::Divisor{c};
}

}  // namespace fixtures
