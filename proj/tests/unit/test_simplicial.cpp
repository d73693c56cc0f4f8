#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "toric/error.hpp"
#include "toric/simplicial.hpp"

using namespace toric;

namespace {

SimplicialComplex circle4() {
  return SimplicialComplex::from_faces(4, {RaySet(), RaySet::of({0}), RaySet::of({1}), RaySet::of({2}), RaySet::of({3}),
                                           RaySet::of({0, 1}), RaySet::of({1, 2}), RaySet::of({2, 3}),
                                           RaySet::of({0, 3})});
}

// Downward closure of a random family of faces.
SimplicialComplex random_complex(std::mt19937_64& rng, std::size_t n) {
  std::vector<RaySet> tops;
  const std::size_t k = 1 + rng() % 4;
  for (std::size_t i = 0; i < k; ++i) tops.push_back(RaySet(rng() & RaySet::full(n).bits()));
  std::vector<RaySet> faces;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const RaySet s(bits);
    if (std::any_of(tops.begin(), tops.end(), [&](RaySet t) { return s.subset_of(t); })) faces.push_back(s);
  }
  return SimplicialComplex::from_faces(n, faces);
}

SimplicialComplex relabel(const SimplicialComplex& k, const std::vector<std::size_t>& perm) {
  std::vector<RaySet> faces;
  for (auto f : k.faces()) {
    RaySet g;
    for (auto i : f.indices()) g = g.with(perm[i]);
    faces.push_back(g);
  }
  return SimplicialComplex::from_faces(k.vertex_count(), faces);
}

}  // namespace

TEST_CASE("FieldSpec accepts 0 and primes only") {
  CHECK(FieldSpec(0).characteristic() == 0);
  CHECK(FieldSpec(2).characteristic() == 2);
  CHECK(FieldSpec(2147483647).characteristic() == 2147483647);
  CHECK_THROWS_AS(FieldSpec(1), Error);
  CHECK_THROWS_AS(FieldSpec(4), Error);
  CHECK_THROWS_AS(FieldSpec(std::uint64_t{1} << 31), Error);
}

TEST_CASE("SimplicialComplex validation") {
  CHECK_THROWS_AS(SimplicialComplex::from_faces(3, {RaySet(), RaySet::of({0, 1})}), Error);
  CHECK_THROWS_AS(SimplicialComplex::from_faces(3, {RaySet::of({0})}), Error);
  CHECK(SimplicialComplex::void_complex(3).is_void());
  CHECK(SimplicialComplex::full_simplex(3, RaySet::of({0, 2})).faces().size() == 4);
}

TEST_CASE("augmented_cochain of small simplices") {
  auto one = augmented_cochain(RaySet::of({0}));
  REQUIRE(one.coboundary.size() == 1);
  CHECK(one.min_degree == -1);
  CHECK(one.coboundary[0].dense() == std::vector<std::vector<std::int64_t>>{{1}});

  auto edge = augmented_cochain(RaySet::of({0, 1}));
  REQUIRE(edge.bases.size() == 3);
  CHECK(edge.bases[0].size() == 1);
  CHECK(edge.bases[1].size() == 2);
  CHECK(edge.bases[2].size() == 1);
  const auto top = edge.coboundary[1].dense();
  REQUIRE(top.size() == 1);
  CHECK(top[0][0] == -top[0][1]);
  CHECK(std::abs(top[0][0]) == 1);

  auto none = augmented_cochain(RaySet());
  CHECK(none.min_degree == -2);
  REQUIRE(none.coboundary.size() == 1);
  CHECK(none.coboundary[0].dense() == std::vector<std::vector<std::int64_t>>{{1}});
}

TEST_CASE("restrict") {
  auto full = SimplicialComplex::full_simplex(4, RaySet::full(4));
  CHECK(restrict(full, RaySet::of({0, 2})) == SimplicialComplex::full_simplex(4, RaySet::of({0, 2})));
  auto two_points = restrict(circle4(), RaySet::of({0, 2}));
  CHECK(two_points.faces() == std::vector<RaySet>{RaySet(), RaySet::of({0}), RaySet::of({2})});
  CHECK(restrict(circle4(), RaySet()).faces() == std::vector<RaySet>{RaySet()});
  CHECK(restrict(SimplicialComplex::void_complex(4), RaySet::of({1})).is_void());
}

TEST_CASE("reduced cohomology of standard complexes") {
  const FieldSpec q;
  auto two_points = SimplicialComplex::from_faces(2, {RaySet(), RaySet::of({0}), RaySet::of({1})});
  auto d = reduced_cohomology_dims(two_points, q);
  CHECK(d.min_degree == -1);
  CHECK(d.at(-1) == 0);
  CHECK(d.at(0) == 1);
  CHECK(d.at(1) == 0);

  auto c = reduced_cohomology_dims(circle4(), q);
  CHECK(c.at(-1) == 0);
  CHECK(c.at(0) == 0);
  CHECK(c.at(1) == 1);
  CHECK(c.at(2) == 0);

  auto e = reduced_cohomology_dims(SimplicialComplex::from_faces(3, {RaySet()}), q);
  CHECK(e.at(-1) == 1);
  CHECK(e.at(0) == 0);

  CHECK(reduced_cohomology_dims(SimplicialComplex::void_complex(3), q).all_zero());
  CHECK(reduced_cohomology_dims(SimplicialComplex::full_simplex(5, RaySet::full(5)), q).all_zero());
}

TEST_CASE("relative cohomology examples") {
  const FieldSpec q;
  auto r = relative_cohomology_dims(RaySet::of({0, 2}), circle4(), q);
  CHECK(r.at(1) == 1);
  CHECK(r.at(0) == 0);
  CHECK(r.at(2) == 0);

  auto full = SimplicialComplex::full_simplex(4, RaySet::full(4));
  for (std::uint64_t bits = 0; bits < 16; ++bits) CHECK(relative_cohomology_dims(RaySet(bits), full, q).all_zero());

  auto point = relative_cohomology_dims(RaySet::of({0}), SimplicialComplex::from_faces(4, {RaySet()}), q);
  CHECK(point.at(0) == 1);
  CHECK(point.at(-1) == 0);
  CHECK(point.at(1) == 0);

  CHECK(relative_cohomology_dims(RaySet(), circle4(), q).all_zero());
}

TEST_CASE("connected components") {
  CHECK(connected_components(circle4()) == 1);
  CHECK(connected_components(restrict(circle4(), RaySet::of({0, 2}))) == 2);
  CHECK(connected_components(SimplicialComplex::from_faces(2, {RaySet()})) == 0);
  CHECK(connected_components(SimplicialComplex::void_complex(2)) == 0);
}

TEST_CASE("projective plane: torsion shows up in characteristic 2 only") {
  // Six-vertex triangulation of RP^2.
  const std::vector<std::vector<std::size_t>> triangles{{0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 5}, {0, 4, 5},
                                                        {1, 2, 4}, {1, 2, 5}, {1, 3, 5}, {2, 3, 4}, {3, 4, 5}};
  std::vector<RaySet> faces;
  for (std::uint64_t bits = 0; bits < 64; ++bits) {
    const RaySet s(bits);
    for (const auto& t : triangles)
      if (s.subset_of(RaySet::of(t))) {
        faces.push_back(s);
        break;
      }
  }
  auto rp2 = SimplicialComplex::from_faces(6, faces);
  auto rational = reduced_cohomology_dims(rp2, FieldSpec(0));
  auto mod2 = reduced_cohomology_dims(rp2, FieldSpec(2));
  auto mod3 = reduced_cohomology_dims(rp2, FieldSpec(3));
  CHECK(rational.all_zero());
  CHECK(mod3.all_zero());
  CHECK(mod2.at(1) == 1);
  CHECK(mod2.at(2) == 1);
}

TEST_CASE("cochain complex properties on random complexes") {
  std::mt19937_64 rng(11);
  const std::vector<FieldSpec> fields{FieldSpec(0), FieldSpec(2), FieldSpec(3), FieldSpec(65537)};
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    auto k = random_complex(rng, n);
    auto complex = cochain_complex(k);

    // coboundary squared vanishes
    for (std::size_t i = 0; i + 1 < complex.coboundary.size(); ++i) {
      const auto a = complex.coboundary[i].dense();
      const auto b = complex.coboundary[i + 1].dense();
      for (std::size_t r = 0; r < b.size(); ++r)
        for (std::size_t c = 0; c < complex.coboundary[i].cols; ++c) {
          std::int64_t s = 0;
          for (std::size_t m = 0; m < a.size(); ++m) s += b[r][m] * a[m][c];
          CHECK(s == 0);
        }
    }

    for (const auto& field : fields) {
      auto dims = reduced_cohomology_dims(k, field);
      // Euler characteristic
      long faces_side = 0, coh_side = 0;
      for (auto f : k.faces()) faces_side += (f.size() % 2 == 0) ? -1 : 1;  // degree |f|-1
      for (std::size_t i = 0; i < dims.dims.size(); ++i) {
        const int degree = dims.min_degree + static_cast<int>(i);
        coh_side += (degree % 2 == 0 ? 1 : -1) * static_cast<long>(dims.dims[i]);
      }
      CHECK(faces_side == coh_side);

      // H~^0 from union-find
      if (k.faces().size() > 1) CHECK(dims.at(0) + 1 == oracle::components(k.faces()));
    }

    // degree shift against every Pi
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
      const RaySet pi(bits);
      auto rel = relative_cohomology_dims(pi, k, FieldSpec(0));
      auto red = reduced_cohomology_dims(restrict(k, pi), FieldSpec(0));
      for (int i = -1; i <= static_cast<int>(n); ++i) CHECK(rel.at(i) == red.at(i - 1));
    }

    // order invariance
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(reduced_cohomology_dims(relabel(k, perm), FieldSpec(0)) == reduced_cohomology_dims(k, FieldSpec(0)));
  }
}
