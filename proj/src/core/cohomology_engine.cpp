#include "toric/cohomology_engine.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <string>

#include "parallel.hpp"
#include "toric/error.hpp"

namespace toric {

const char* to_string(PiOutcome outcome) {
  switch (outcome) {
    case PiOutcome::Vanishing: return "vanishing";
    case PiOutcome::NoIntegerPoint: return "no_integer_point";
    case PiOutcome::Violation: return "violation";
  }
  return "?";
}

namespace {

struct IdealData {
  SimplicialComplex xi;
  bool unit = false;
};

IdealData ideal_data(const Cone& cone, const FaceLattice& lattice, const MonomialIdeal& ideal) {
  const FaceSet supp = support(cone, lattice, ideal);
  return IdealData{cosupport(lattice, supp), supp.empty()};
}

GradedDims empty_sigma_dims(std::size_t n, bool unit) {
  GradedDims dims{0, std::vector<std::size_t>(n + 2, 0)};
  if (unit) dims.dims[0] = 1;
  return dims;
}

void check_degree(const Cone& cone, const IntVector& m) {
  if (m.size() != cone.rank())
    throw Error(ErrorCode::DimensionMismatch,
                "degree has length " + std::to_string(m.size()) + ", expected " + std::to_string(cone.rank()));
}

// Least i < d with H~^{i-2} nonzero.
std::optional<int> least_nonvanishing(const GradedDims& dims, std::size_t d) {
  for (int i = 0; i < static_cast<int>(d); ++i)
    if (dims.at(i - 2) != 0) return i;
  return std::nullopt;
}

// H~^*(pi cap xi) for every pi, indexed by the subset's bits.
std::vector<GradedDims> pi_table(const SimplicialComplex& xi, std::size_t n, FieldSpec field, unsigned jobs) {
  std::vector<GradedDims> table(std::size_t{1} << n);
  detail::parallel_for(table.size(), jobs,
                       [&](std::size_t i) { table[i] = reduced_cohomology_dims(restrict(xi, RaySet(i)), field); });
  return table;
}

struct MaximalContext {
  SimplicialComplex xi;
  std::vector<GradedDims> table;
};

MaximalContext maximal_context(const Cone& cone, const FaceLattice& lattice, FieldSpec field, unsigned jobs) {
  MaximalContext ctx;
  ctx.xi = cosupport(lattice, FaceSet{lattice.top().rays});
  ctx.table = pi_table(ctx.xi, cone.ray_count(), field, jobs);
  return ctx;
}

PiRecord examine(const Cone& cone, const Divisor& divisor, const GradedDims& dims, RaySet pi) {
  PiRecord record;
  record.pi = pi;
  record.degree = least_nonvanishing(dims, cone.rank());
  if (!record.degree) return record;
  auto verdict = integer_feasible(chamber_system(cone, divisor, pi, ChamberFlavor::Semistrict));
  if (verdict.feasible()) {
    record.outcome = PiOutcome::Violation;
    record.witness = verdict.witness;
  } else {
    record.outcome = PiOutcome::NoIntegerPoint;
    record.search_bound = verdict.search_bound;
  }
  return record;
}

// Sweeps nonempty pi. With stop_early, subsets past the first violation are skipped
// and the result is truncated there.
std::vector<PiRecord> sweep(const Cone& cone, const Divisor& divisor, const MaximalContext& ctx, unsigned jobs,
                            bool stop_early) {
  const std::size_t count = (std::size_t{1} << cone.ray_count()) - 1;
  std::vector<PiRecord> records(count);
  std::atomic<std::size_t> first_violation{count};
  detail::parallel_for(count, jobs, [&](std::size_t k) {
    if (stop_early && k > first_violation.load()) return;
    const RaySet pi(k + 1);
    records[k] = examine(cone, divisor, ctx.table[pi.bits()], pi);
    if (records[k].outcome == PiOutcome::Violation) {
      std::size_t seen = first_violation.load();
      while (k < seen && !first_violation.compare_exchange_weak(seen, k)) {
      }
    }
  });
  if (stop_early && first_violation < count) records.resize(first_violation + 1);
  return records;
}

McmCertificate certificate_from(std::vector<PiRecord> records) {
  McmCertificate cert;
  for (const auto& r : records)
    if (r.outcome == PiOutcome::Violation) {
      cert.mcm = false;
      cert.violation = r;
      break;
    }
  cert.records = std::move(records);
  return cert;
}

}  // namespace

CohomologyReport graded_local_cohomology(const Cone& cone, const FaceLattice& lattice, const Divisor& divisor,
                                         const MonomialIdeal& ideal, const IntVector& m, FieldSpec field) {
  check_degree(cone, m);
  const auto data = ideal_data(cone, lattice, ideal);
  CohomologyReport report;
  report.degree = m;
  report.sigma_m = sigma_m(cone, divisor, m);
  const std::size_t n = cone.ray_count();
  if (report.sigma_m.empty()) {
    report.dims = empty_sigma_dims(n, data.unit);
    return report;
  }
  const auto reduced = reduced_cohomology_dims(restrict(data.xi, report.sigma_m), field);
  report.dims = GradedDims{0, std::vector<std::size_t>(n + 2, 0)};
  for (std::size_t i = 0; i < n + 2; ++i) report.dims.dims[i] = reduced.at(static_cast<int>(i) - 2);
  return report;
}

GradedDims graded_local_cohomology_relative(const Cone& cone, const FaceLattice& lattice, const Divisor& divisor,
                                            const MonomialIdeal& ideal, const IntVector& m, FieldSpec field) {
  check_degree(cone, m);
  const auto data = ideal_data(cone, lattice, ideal);
  const RaySet sigma = sigma_m(cone, divisor, m);
  const std::size_t n = cone.ray_count();
  if (sigma.empty()) return empty_sigma_dims(n, data.unit);
  const auto relative = relative_cohomology_dims(sigma, data.xi, field);
  GradedDims dims{0, std::vector<std::size_t>(n + 2, 0)};
  for (std::size_t i = 0; i < n + 2; ++i) dims.dims[i] = relative.at(static_cast<int>(i) - 1);
  return dims;
}

McmCertificate mcm_check(const Cone& cone, const FaceLattice& lattice, const Divisor& divisor, FieldSpec field,
                         const SweepOptions& options) {
  check_ray_cap(cone, options);
  check_divisor(cone, divisor);
  const auto ctx = maximal_context(cone, lattice, field, options.jobs);
  return certificate_from(sweep(cone, divisor, ctx, options.jobs, true));
}

bool verify_violation(const Cone& cone, const FaceLattice& lattice, const Divisor& divisor, FieldSpec field,
                      const PiRecord& record) {
  if (!record.witness || !record.degree || record.witness->size() != cone.rank()) return false;
  if (*record.degree < 0 || *record.degree >= static_cast<int>(cone.rank())) return false;
  if (!chamber_system(cone, divisor, record.pi, ChamberFlavor::Semistrict).satisfied_by(*record.witness))
    return false;
  const auto xi = cosupport(lattice, FaceSet{lattice.top().rays});
  return reduced_cohomology_dims(restrict(xi, record.pi), field).at(*record.degree - 2) != 0;
}

std::size_t depth(const Cone& cone, const FaceLattice& lattice, const Divisor& divisor, FieldSpec field,
                  const SweepOptions& options) {
  check_ray_cap(cone, options);
  check_divisor(cone, divisor);
  const auto ctx = maximal_context(cone, lattice, field, options.jobs);
  std::size_t best = cone.rank();
  for (const auto& r : sweep(cone, divisor, ctx, options.jobs, false))
    if (r.outcome == PiOutcome::Violation) best = std::min<std::size_t>(best, static_cast<std::size_t>(*r.degree));
  return best;
}

namespace {

// Row Hermite normal form of the d x n matrix (n_rho[j]), zero rows dropped.
IntMatrix principal_hnf(const Cone& cone) {
  const std::size_t d = cone.rank();
  const std::size_t n = cone.ray_count();
  IntMatrix h(d, IntVector(n));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t r = 0; r < n; ++r) h[j][r] = cone.ray(r)[j];
  auto axpy = [&](std::size_t target, std::size_t source, const Integer& f) {
    for (std::size_t c = 0; c < n; ++c) h[target][c] -= f * h[source][c];
  };
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < d; ++col) {
    for (;;) {
      std::size_t best = d;
      for (std::size_t i = row; i < d; ++i)
        if (h[i][col] != 0 && (best == d || abs(h[i][col]) < abs(h[best][col]))) best = i;
      if (best == d) break;
      std::swap(h[row], h[best]);
      bool done = true;
      for (std::size_t i = row + 1; i < d; ++i) {
        if (h[i][col] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), h[i][col].get_mpz_t(), h[row][col].get_mpz_t());
        axpy(i, row, q);
        if (h[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (h[row][col] == 0) continue;
    if (h[row][col] < 0)
      for (auto& x : h[row]) x = -x;
    for (std::size_t i = 0; i < row; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h[i][col].get_mpz_t(), h[row][col].get_mpz_t());
      axpy(i, row, q);
    }
    ++row;
  }
  h.resize(row);
  return h;
}

Divisor reduce(const IntMatrix& hnf, Divisor divisor) {
  for (const auto& row : hnf) {
    std::size_t col = 0;
    while (row[col] == 0) ++col;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), divisor.coefficients[col].get_mpz_t(), row[col].get_mpz_t());
    for (std::size_t c = 0; c < row.size(); ++c) divisor.coefficients[c] -= q * row[c];
  }
  return divisor;
}

}  // namespace

Divisor canonical_class(const Cone& cone, const Divisor& divisor) {
  check_divisor(cone, divisor);
  return reduce(principal_hnf(cone), divisor);
}

McmEnumeration mcm_enumerate(const Cone& cone, const FaceLattice& lattice, std::size_t coeff_bound, FieldSpec field,
                             const SweepOptions& options) {
  check_ray_cap(cone, options);
  if (coeff_bound > options.max_box)
    throw Error(ErrorCode::SearchTooLarge, "coefficient bound " + std::to_string(coeff_bound) +
                                               " exceeds the cap of " + std::to_string(options.max_box));
  const std::size_t n = cone.ray_count();
  const std::size_t side = 2 * coeff_bound + 1;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= side;
    if (total > max_divisors)
      throw Error(ErrorCode::SearchTooLarge, "box [-" + std::to_string(coeff_bound) + ", " +
                                                 std::to_string(coeff_bound) + "]^" + std::to_string(n) +
                                                 " holds more than " + std::to_string(max_divisors) + " divisors");
  }

  const IntMatrix hnf = principal_hnf(cone);
  std::set<IntVector> classes;
  IntVector coeffs(n, Integer(-static_cast<long>(coeff_bound)));
  const Integer top(static_cast<unsigned long>(coeff_bound));
  for (std::size_t k = 0; k < total; ++k) {
    classes.insert(reduce(hnf, Divisor{coeffs}).coefficients);
    for (std::size_t i = 0; i < n; ++i) {
      if (coeffs[i] < top) {
        ++coeffs[i];
        break;
      }
      coeffs[i] = -top;
    }
  }

  const auto ctx = maximal_context(cone, lattice, field, options.jobs);
  const std::vector<IntVector> reps(classes.begin(), classes.end());
  std::vector<char> is_mcm(reps.size(), 0);
  detail::parallel_for(reps.size(), options.jobs, [&](std::size_t i) {
    is_mcm[i] = certificate_from(sweep(cone, Divisor{reps[i]}, ctx, 1, true)).mcm ? 1 : 0;
  });

  McmEnumeration out;
  out.coeff_bound = coeff_bound;
  out.divisors_searched = total;
  out.classes_searched = reps.size();
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (is_mcm[i]) out.mcm_classes.push_back(Divisor{reps[i]});
  return out;
}

SingularitySets singularity_sets(const Cone& cone, const FaceLattice& lattice, const Divisor& divisor,
                                 FieldSpec field, const SweepOptions& options) {
  check_ray_cap(cone, options);
  check_divisor(cone, divisor);
  const std::size_t d = cone.rank();
  const auto& faces = lattice.faces();
  std::vector<LocalDepth> local(faces.size());

  detail::parallel_for(faces.size(), options.jobs, [&](std::size_t f) {
    const Face& tau = faces[f];
    local[f].face = tau.rays;
    if (tau.rays.empty()) {
      local[f].depth = 0;
      return;
    }
    // Xi_tau on the subsets of tau(1): pi whose minimal face is a proper face of tau.
    std::vector<RaySet> members;
    const std::uint64_t rays = tau.rays.bits();
    for (std::uint64_t sub = 0;; sub = (sub - rays) & rays) {
      if (minimal_face(lattice, RaySet(sub)).rays != tau.rays) members.push_back(RaySet(sub));
      if (sub == rays) break;
    }
    const auto xi_tau = SimplicialComplex::from_faces(cone.ray_count(), std::move(members));

    std::optional<std::size_t> best;
    for (std::uint64_t sub = rays; sub != 0; sub = (sub - 1) & rays) {
      const RaySet pi(sub);
      const auto dims = reduced_cohomology_dims(restrict(xi_tau, pi), field);
      std::optional<std::size_t> least;
      const std::size_t limit = best ? *best : tau.dim + 1;
      for (std::size_t i = 0; i < limit; ++i)
        if (dims.at(static_cast<int>(i) - 2) != 0) {
          least = i;
          break;
        }
      if (!least) continue;
      if (integer_feasible(chamber_system(cone, divisor, pi, ChamberFlavor::Semistrict, tau.rays)).feasible())
        best = least;
    }
    local[f].depth = best;
  });

  SingularitySets out;
  out.rank = d;
  out.levels.assign(d + 1, FaceSet{});
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (!local[f].depth) continue;
    const std::size_t codim = d - faces[f].dim;
    for (std::size_t k = *local[f].depth + codim; k <= d; ++k) out.levels[k].insert(faces[f].rays);
  }
  out.local_depths = std::move(local);
  return out;
}

}  // namespace toric
