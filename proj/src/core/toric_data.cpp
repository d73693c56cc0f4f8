#include "toric/toric_data.hpp"

#include <string>

#include "toric/error.hpp"

namespace toric {

void check_divisor(const Cone& cone, const Divisor& divisor) {
  if (divisor.coefficients.size() != cone.ray_count())
    throw Error(ErrorCode::DimensionMismatch, "divisor has " + std::to_string(divisor.coefficients.size()) +
                                                  " coefficients, expected " + std::to_string(cone.ray_count()));
}

MonomialIdeal MonomialIdeal::generated_by(std::vector<IntVector> generators) {
  if (generators.empty()) throw Error(ErrorCode::InvalidInput, "an ideal needs at least one generator");
  MonomialIdeal ideal;
  ideal.maximal_ = false;
  ideal.generators_ = std::move(generators);
  return ideal;
}

void check_ideal(const Cone& cone, const MonomialIdeal& ideal) {
  const auto& gens = ideal.generators();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (gens[g].size() != cone.rank())
      throw Error(ErrorCode::DimensionMismatch,
                  "generator " + std::to_string(g + 1) + " has length " + std::to_string(gens[g].size()), g);
    const auto pairings = cone.pairings(gens[g]);
    for (std::size_t r = 0; r < pairings.size(); ++r)
      if (pairings[r] < 0)
        throw Error(ErrorCode::InvalidGenerator,
                    "generator " + std::to_string(g + 1) + " " + to_string(gens[g]) + " pairs negatively with ray " +
                        std::to_string(r + 1),
                    g);
  }
}

FaceSet support(const Cone& cone, const FaceLattice& lattice, const MonomialIdeal& ideal) {
  if (ideal.is_maximal()) return FaceSet{lattice.top().rays};
  check_ideal(cone, ideal);
  // Zero sets of the generators: rays on which each generator vanishes.
  std::vector<RaySet> zeros;
  for (const auto& g : ideal.generators()) {
    RaySet z;
    const auto p = cone.pairings(g);
    for (std::size_t r = 0; r < p.size(); ++r)
      if (p[r] == 0) z = z.with(r);
    zeros.push_back(z);
  }
  FaceSet out;
  for (const auto& face : lattice.faces()) {
    bool hit = false;
    for (auto z : zeros)
      if (face.rays.subset_of(z)) {
        hit = true;
        break;
      }
    if (!hit) out.insert(face.rays);
  }
  return out;
}

SimplicialComplex cosupport(const FaceLattice& lattice, const FaceSet& faces) {
  const std::size_t n = lattice.ray_count();
  std::vector<RaySet> members;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const RaySet pi(bits);
    const RaySet tau = minimal_face(lattice, pi).rays;
    bool in_star = false;
    for (auto f : faces)
      if (f.subset_of(tau)) {
        in_star = true;
        break;
      }
    if (!in_star) members.push_back(pi);
  }
  if (members.empty()) return SimplicialComplex::void_complex(n);
  return SimplicialComplex::from_faces(n, std::move(members));
}

RaySet sigma_m(const Cone& cone, const Divisor& divisor, const IntVector& m) {
  check_divisor(cone, divisor);
  const auto p = cone.pairings(m);
  RaySet out;
  for (std::size_t r = 0; r < p.size(); ++r)
    if (p[r] < -divisor.coefficients[r]) out = out.with(r);
  return out;
}

}  // namespace toric
