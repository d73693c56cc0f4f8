#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "toric/chambers.hpp"
#include "toric/error.hpp"

using namespace toric;
using oracle::vec;

namespace {

SimplicialComplex xi_of(const FaceLattice& lattice) { return cosupport(lattice, FaceSet{lattice.top().rays}); }

std::size_t count_if_reports(const std::vector<ChamberReport>& reports, bool (*pred)(const ChamberReport&)) {
  std::size_t k = 0;
  for (const auto& r : reports) k += pred(r) ? 1 : 0;
  return k;
}

bool strict_nonempty(const ChamberReport& r) { return r.strict_nonempty; }
bool bounded_nonempty(const ChamberReport& r) { return r.bounded && r.semistrict_nonempty; }

}  // namespace

TEST_CASE("chamber systems") {
  auto cone = fixtures::four_ray();
  auto s = chamber_system(cone, fixtures::minus_k_d2(4, 2), RaySet::of({1, 3}), ChamberFlavor::Semistrict);
  REQUIRE(s.size() == 4);
  CHECK(s.rows()[0].relation == Relation::GreaterEqual);
  CHECK(s.rows()[0].rhs == 0);
  CHECK(s.rows()[1].relation == Relation::Less);
  CHECK(s.rows()[1].rhs == 2);
  CHECK(s.rows()[2].relation == Relation::GreaterEqual);
  CHECK(s.rows()[3].relation == Relation::Less);
  CHECK(s.rows()[3].rhs == 0);

  auto md = chamber_system(cone, fixtures::divisor({1, 2, 3, 4}), RaySet(), ChamberFlavor::Semistrict);
  for (std::size_t r = 0; r < 4; ++r) {
    CHECK(md.rows()[r].relation == Relation::GreaterEqual);
    CHECK(md.rows()[r].rhs == -static_cast<long>(r + 1));
  }

  auto interior = chamber_system(cone, Divisor::zero(cone), RaySet::full(4), ChamberFlavor::Strict);
  for (const auto& row : interior.rows()) {
    CHECK(row.relation == Relation::Less);
    CHECK(row.rhs == 0);
  }

  auto closed = chamber_system(cone, Divisor::zero(cone), RaySet::of({0}), ChamberFlavor::Closed);
  CHECK(closed.rows()[0].relation == Relation::LessEqual);
  CHECK(closed.rows()[1].relation == Relation::GreaterEqual);

  auto scoped = chamber_system(cone, Divisor::zero(cone), RaySet::of({0}), ChamberFlavor::Closed, RaySet::of({0, 1}));
  CHECK(scoped.size() == 2);
  CHECK_THROWS_AS(chamber_system(cone, fixtures::divisor({1}), RaySet(), ChamberFlavor::Closed), Error);
}

TEST_CASE("cones_intersect") {
  CHECK(cones_intersect(fixtures::cube(), RaySet::of({0, 2, 3, 5})));
  CHECK_FALSE(cones_intersect(fixtures::skew_cube(), RaySet::of({0, 2, 3, 5})));
  CHECK_FALSE(cones_intersect(fixtures::four_ray(), RaySet::of({0})));
  CHECK(cones_intersect(fixtures::four_ray(), RaySet::of({0, 2})));
  CHECK_FALSE(cones_intersect(fixtures::four_ray(), RaySet()));
  CHECK_FALSE(cones_intersect(fixtures::four_ray(), RaySet::full(4)));
}

TEST_CASE("four-ray chamber reports") {
  auto cone = fixtures::four_ray();
  auto lattice = face_lattice(cone);
  auto xi = xi_of(lattice);
  const FieldSpec q;

  auto k2 = classify_chamber(cone, lattice, fixtures::minus_k_d2(4, 2), RaySet::of({1, 3}), xi, q);
  CHECK(k2.strict_nonempty);
  CHECK(k2.semistrict_nonempty);
  CHECK(k2.bounded);
  CHECK(k2.recession_dim == 0);
  REQUIRE(k2.lattice_witness);
  CHECK(chamber_system(cone, fixtures::minus_k_d2(4, 2), RaySet::of({1, 3}), ChamberFlavor::Semistrict)
            .satisfied_by(*k2.lattice_witness));
  CHECK(k2.cohomology.at(0) == 1);
  CHECK(k2.cones_intersect);

  auto k1 = classify_chamber(cone, lattice, fixtures::minus_k_d2(4, 1), RaySet::of({1, 3}), xi, q);
  CHECK(k1.bounded);
  CHECK(k1.semistrict_nonempty);
  CHECK_FALSE(k1.lattice_witness);

  auto other = classify_chamber(cone, lattice, fixtures::minus_k_d2(4, 2), RaySet::of({0, 2}), xi, q);
  CHECK_FALSE(other.strict_nonempty);
  CHECK_FALSE(other.semistrict_nonempty);

  for (long k = 1; k <= 4; ++k) {
    auto reports = enumerate_chambers(cone, lattice, fixtures::minus_k_d2(4, k), xi, q);
    REQUIRE(reports.size() == 16);
    CHECK(count_if_reports(reports, strict_nonempty) == 15);
    CHECK(count_if_reports(reports, bounded_nonempty) == 1);
    for (const auto& r : reports)
      if (bounded_nonempty(r)) CHECK(r.pi == RaySet::of({1, 3}));
  }
}

TEST_CASE("five-ray chamber reports") {
  auto cone = fixtures::five_ray();
  auto lattice = face_lattice(cone);
  auto xi = xi_of(lattice);
  for (long k = 1; k <= 2; ++k) {
    auto reports = enumerate_chambers(cone, lattice, fixtures::minus_k_d2(5, k), xi, FieldSpec());
    REQUIRE(reports.size() == 32);
    CHECK(count_if_reports(reports, strict_nonempty) == 30);
    CHECK(count_if_reports(reports, bounded_nonempty) == 0);
    // rays 1..4 span a facet, so every pair spans a face and no pi cap xi is disconnected
    CHECK(lattice.is_face(RaySet::of({0, 1, 2, 3})));
    CHECK(reports[RaySet::of({0, 3}).bits()].cohomology.all_zero());
    for (const auto& r : reports) CHECK(r.cohomology.at(0) == 0);
    CHECK(reports[RaySet::of({0, 2, 4}).bits()].cohomology.at(1) == 1);
  }
}

TEST_CASE("cube chambers") {
  const RaySet pi = RaySet::of({0, 2, 3, 5});
  {
    auto cone = fixtures::cube();
    auto lattice = face_lattice(cone);
    auto r = classify_chamber(cone, lattice, Divisor::zero(cone), pi, xi_of(lattice), FieldSpec());
    CHECK(r.cohomology.all_zero());
    CHECK(r.cones_intersect);
    CHECK(r.recession_dim < 4);
  }
  {
    auto cone = fixtures::skew_cube();
    auto lattice = face_lattice(cone);
    auto r = classify_chamber(cone, lattice, fixtures::divisor({1, -2, 0, 3, 0, -1, 2, 0}), pi, xi_of(lattice),
                              FieldSpec());
    CHECK_FALSE(r.cones_intersect);
    CHECK(r.recession_dim == 4);
    CHECK(r.semistrict_nonempty);
    CHECK(r.lattice_witness);
  }
}

TEST_CASE("ray cap") {
  auto cone = fixtures::cube();
  auto lattice = face_lattice(cone);
  SweepOptions tight;
  tight.max_rays = 7;
  try {
    enumerate_chambers(cone, lattice, Divisor::zero(cone), xi_of(lattice), FieldSpec(), tight);
    FAIL("expected TooManyRays");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooManyRays);
  }
}

TEST_CASE("worker count does not change reports") {
  auto cone = fixtures::four_ray();
  auto lattice = face_lattice(cone);
  SweepOptions one, four;
  one.jobs = 1;
  four.jobs = 4;
  auto a = enumerate_chambers(cone, lattice, fixtures::minus_k_d2(4, 3), xi_of(lattice), FieldSpec(), one);
  auto b = enumerate_chambers(cone, lattice, fixtures::minus_k_d2(4, 3), xi_of(lattice), FieldSpec(), four);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].pi == b[i].pi);
    CHECK(a[i].lattice_witness == b[i].lattice_witness);
    CHECK(a[i].cohomology == b[i].cohomology);
  }
}

TEST_CASE("chamber properties on random cones") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> coeff(-3, 3);
  int checked = 0;
  while (checked < 25) {
    auto cone = oracle::random_cone(rng, 2 + rng() % 3, 6);
    if (!cone) continue;
    ++checked;
    auto lattice = face_lattice(*cone);
    auto xi = xi_of(lattice);
    Divisor divisor = Divisor::zero(*cone);
    for (auto& c : divisor.coefficients) c = coeff(rng);
    const std::size_t d = cone->rank();
    for (const auto& r : enumerate_chambers(*cone, lattice, divisor, xi, FieldSpec())) {
      CHECK(r.strict_nonempty == r.semistrict_nonempty);
      CHECK(r.bounded == (r.recession_dim == 0));
      // sigma_Pi generators span
      std::vector<IntVector> gens;
      for (std::size_t i = 0; i < cone->ray_count(); ++i) {
        IntVector g = cone->ray(i);
        if (r.pi.contains(i))
          for (auto& x : g) x = -x;
        gens.push_back(g);
      }
      CHECK(rank(gens) == d);
      CHECK(r.cones_intersect == (r.recession_dim < d));
      if (r.recession_dim == d && !r.pi.empty() && r.pi != cone->all_rays()) CHECK(r.cohomology.all_zero());
    }
  }
}
