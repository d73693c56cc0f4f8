#include "toric/chambers.hpp"

#include <string>

#include "parallel.hpp"
#include "toric/error.hpp"
#include "toric/linear_program.hpp"

namespace toric {

void check_ray_cap(const Cone& cone, const SweepOptions& options) {
  if (cone.ray_count() > options.max_rays)
    throw Error(ErrorCode::TooManyRays, std::to_string(cone.ray_count()) + " rays exceed the cap of " +
                                            std::to_string(options.max_rays));
}

InequalitySystem chamber_system(const Cone& cone, const Divisor& divisor, RaySet pi, ChamberFlavor flavor,
                                RaySet scope) {
  check_divisor(cone, divisor);
  InequalitySystem system(cone.rank());
  for (std::size_t r = 0; r < cone.ray_count(); ++r) {
    if (!scope.contains(r)) continue;
    const bool inside = pi.contains(r);
    Relation rel;
    switch (flavor) {
      case ChamberFlavor::Strict: rel = inside ? Relation::Less : Relation::Greater; break;
      case ChamberFlavor::Semistrict: rel = inside ? Relation::Less : Relation::GreaterEqual; break;
      default: rel = inside ? Relation::LessEqual : Relation::GreaterEqual; break;
    }
    system.add(cone.ray(r), rel, -divisor.coefficients[r]);
  }
  return system;
}

InequalitySystem chamber_system(const Cone& cone, const Divisor& divisor, RaySet pi, ChamberFlavor flavor) {
  return chamber_system(cone, divisor, pi, flavor, cone.all_rays());
}

bool cones_intersect(const Cone& cone, RaySet pi) {
  const RaySet rest = cone.all_rays() - pi;
  if (pi.empty() || rest.empty()) return false;
  // lambda on pi, mu on the rest, both >= 0, sum lambda n - sum mu n = 0, total weight 1
  const std::size_t n = cone.ray_count();
  const std::size_t d = cone.rank();
  std::vector<RatVector> A(d + 1, RatVector(n, Rational(0)));
  RatVector b(d + 1, Rational(0));
  for (std::size_t r = 0; r < n; ++r) {
    const int s = pi.contains(r) ? 1 : -1;
    for (std::size_t j = 0; j < d; ++j) A[j][r] = s * cone.ray(r)[j];
    A[d][r] = 1;
  }
  b[d] = 1;
  return lp::solve_standard(A, b, RatVector(n, Rational(0))).status != lp::Status::Infeasible;
}

ChamberReport classify_chamber(const Cone& cone, const FaceLattice& /*lattice*/, const Divisor& divisor, RaySet pi,
                               const SimplicialComplex& xi, FieldSpec field) {
  ChamberReport report;
  report.pi = pi;
  report.strict_nonempty = real_feasible(chamber_system(cone, divisor, pi, ChamberFlavor::Strict)).feasible();
  const auto semistrict = chamber_system(cone, divisor, pi, ChamberFlavor::Semistrict);
  report.semistrict_nonempty = real_feasible(semistrict).feasible();
  if (report.semistrict_nonempty) {
    auto v = integer_feasible(semistrict);
    if (v.feasible()) report.lattice_witness = v.witness;
  }
  report.recession_dim = recession_dim(chamber_system(cone, divisor, pi, ChamberFlavor::Closed));
  report.bounded = report.recession_dim == 0;
  report.cones_intersect = cones_intersect(cone, pi);
  report.cohomology = reduced_cohomology_dims(restrict(xi, pi), field);
  return report;
}

std::vector<ChamberReport> enumerate_chambers(const Cone& cone, const FaceLattice& lattice, const Divisor& divisor,
                                              const SimplicialComplex& xi, FieldSpec field,
                                              const SweepOptions& options) {
  check_ray_cap(cone, options);
  check_divisor(cone, divisor);
  const std::size_t count = std::size_t{1} << cone.ray_count();
  std::vector<ChamberReport> reports(count);
  detail::parallel_for(count, options.jobs, [&](std::size_t i) {
    reports[i] = classify_chamber(cone, lattice, divisor, RaySet(i), xi, field);
  });
  return reports;
}

}  // namespace toric
