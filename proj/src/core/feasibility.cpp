#include "toric/feasibility.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "toric/error.hpp"
#include "toric/linear_program.hpp"

namespace toric {

const char* to_string(Relation r) {
  switch (r) {
    case Relation::Less: return "<";
    case Relation::LessEqual: return "<=";
    case Relation::Equal: return "=";
    case Relation::GreaterEqual: return ">=";
    case Relation::Greater: return ">";
  }
  return "?";
}

bool is_strict(Relation r) { return r == Relation::Less || r == Relation::Greater; }

namespace {

template <typename Value>
bool compare(const Value& lhs, Relation r, const Integer& rhs) {
  switch (r) {
    case Relation::Less: return lhs < rhs;
    case Relation::LessEqual: return lhs <= rhs;
    case Relation::Equal: return lhs == rhs;
    case Relation::GreaterEqual: return lhs >= rhs;
    case Relation::Greater: return lhs > rhs;
  }
  return false;
}

int orientation(Relation r) { return (r == Relation::GreaterEqual || r == Relation::Greater) ? -1 : 1; }

}  // namespace

bool Inequality::satisfied_by(const RatVector& x) const { return compare(dot(normal, x), relation, rhs); }
bool Inequality::satisfied_by(const IntVector& x) const { return compare(dot(normal, x), relation, rhs); }

InequalitySystem& InequalitySystem::add(IntVector normal, Relation relation, Integer rhs) {
  if (normal.size() != dim_)
    throw Error(ErrorCode::DimensionMismatch, "row " + std::to_string(rows_.size() + 1) + " has length " +
                                                  std::to_string(normal.size()) + ", expected " +
                                                  std::to_string(dim_));
  rows_.push_back(Inequality{std::move(normal), relation, std::move(rhs)});
  return *this;
}

bool InequalitySystem::has_strict_rows() const {
  return std::any_of(rows_.begin(), rows_.end(), [](const Inequality& r) { return is_strict(r.relation); });
}

bool InequalitySystem::satisfied_by(const RatVector& x) const {
  if (x.size() != dim_) return false;
  return std::all_of(rows_.begin(), rows_.end(), [&](const Inequality& r) { return r.satisfied_by(x); });
}

bool InequalitySystem::satisfied_by(const IntVector& x) const {
  if (x.size() != dim_) return false;
  return std::all_of(rows_.begin(), rows_.end(), [&](const Inequality& r) { return r.satisfied_by(x); });
}

bool FarkasCertificate::verifies(const InequalitySystem& system) const {
  if (multipliers.size() != system.size()) return false;
  RatVector combined(system.dim(), Rational(0));
  Rational rhs = 0;
  bool strict_weight = false;
  for (std::size_t r = 0; r < system.size(); ++r) {
    const auto& row = system.rows()[r];
    const Rational& lambda = multipliers[r];
    if (row.relation != Relation::Equal && lambda < 0) return false;
    if (lambda == 0) continue;
    const Rational w = lambda * orientation(row.relation);
    for (std::size_t j = 0; j < system.dim(); ++j) combined[j] += w * Rational(row.normal[j]);
    rhs += w * Rational(row.rhs);
    if (is_strict(row.relation)) strict_weight = true;
  }
  for (const auto& c : combined)
    if (c != 0) return false;
  return rhs < 0 || (rhs == 0 && strict_weight);
}

namespace {

// Motzkin transposition: y >= 0 over oriented rows with y.A = 0, y.b <= 0 and
// sum(strict y) - y.b >= 1.
std::optional<FarkasCertificate> find_certificate(const InequalitySystem& system) {
  struct Oriented {
    std::size_t origin;
    int sign;  // multiplier contribution to the original row
    bool strict;
  };
  std::vector<Oriented> oriented;
  for (std::size_t r = 0; r < system.size(); ++r) {
    const auto rel = system.rows()[r].relation;
    if (rel == Relation::Equal) {
      oriented.push_back({r, 1, false});
      oriented.push_back({r, -1, false});
    } else {
      oriented.push_back({r, 1, is_strict(rel)});
    }
  }
  const std::size_t k = oriented.size();
  const std::size_t d = system.dim();
  // Variables: y_0..y_{k-1}, u, w.
  std::vector<RatVector> A(d + 2, RatVector(k + 2, Rational(0)));
  RatVector b(d + 2, Rational(0));
  for (std::size_t i = 0; i < k; ++i) {
    const auto& row = system.rows()[oriented[i].origin];
    const int s = orientation(row.relation) * oriented[i].sign;
    for (std::size_t j = 0; j < d; ++j) A[j][i] = s * row.normal[j];
    const Rational bi = s * Rational(row.rhs);
    A[d][i] = bi;
    A[d + 1][i] = (oriented[i].strict ? Rational(1) : Rational(0)) - bi;
  }
  A[d][k] = 1;        // u
  A[d + 1][k + 1] = -1;  // w
  b[d + 1] = 1;
  auto sol = lp::solve_standard(A, b, RatVector(k + 2, Rational(0)));
  if (sol.status == lp::Status::Infeasible) return std::nullopt;
  FarkasCertificate cert;
  cert.multipliers.assign(system.size(), Rational(0));
  for (std::size_t i = 0; i < k; ++i) cert.multipliers[oriented[i].origin] += oriented[i].sign * sol.x[i];
  return cert;
}

lp::Row oriented_row(const Inequality& row) {
  lp::Row out;
  const int s = orientation(row.relation);
  out.a.reserve(row.normal.size());
  for (const auto& v : row.normal) out.a.emplace_back(s * v);
  out.b = s * Rational(row.rhs);
  out.equality = row.relation == Relation::Equal;
  return out;
}

}  // namespace

RealVerdict real_feasible(const InequalitySystem& system) {
  const std::size_t d = system.dim();
  // Maximize a common slack t on the strict rows, capped at 1.
  std::vector<lp::Row> rows;
  rows.reserve(system.size() + 1);
  for (const auto& row : system.rows()) {
    lp::Row r = oriented_row(row);
    r.a.emplace_back(is_strict(row.relation) ? 1 : 0);
    rows.push_back(std::move(r));
  }
  lp::Row cap;
  cap.a.assign(d + 1, Rational(0));
  cap.a[d] = 1;
  cap.b = 1;
  rows.push_back(std::move(cap));
  RatVector objective(d + 1, Rational(0));
  objective[d] = 1;

  RealVerdict verdict;
  auto sol = lp::maximize(d + 1, rows, objective);
  if (sol.status == lp::Status::Optimal && sol.value > 0) {
    RatVector x(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(d));
    if (!system.satisfied_by(x)) throw std::logic_error("real_feasible: witness failed substitution");
    verdict.status = Feasibility::Feasible;
    verdict.witness = std::move(x);
    return verdict;
  }
  verdict.status = Feasibility::Infeasible;
  verdict.certificate = find_certificate(system);
  if (!verdict.certificate || !verdict.certificate->verifies(system))
    throw std::logic_error("real_feasible: no valid infeasibility certificate");
  return verdict;
}

InequalitySystem tighten(const InequalitySystem& system) {
  InequalitySystem out(system.dim());
  for (const auto& row : system.rows()) {
    switch (row.relation) {
      case Relation::Less: out.add(row.normal, Relation::LessEqual, row.rhs - 1); break;
      case Relation::Greater: out.add(row.normal, Relation::GreaterEqual, row.rhs + 1); break;
      default: out.add(row.normal, row.relation, row.rhs); break;
    }
  }
  return out;
}

Integer solvability_bound(const InequalitySystem& system) {
  Integer a = 1;
  for (const auto& row : system.rows()) {
    for (const auto& v : row.normal) a = std::max<Integer>(a, abs(v));
    a = std::max<Integer>(a, abs(row.rhs));
  }
  const std::size_t d = system.dim();
  Integer bound = d + 1;
  for (std::size_t k = 2; k <= d; ++k) bound *= k;
  Integer power;
  mpz_pow_ui(power.get_mpz_t(), a.get_mpz_t(), d);
  return bound * power;
}

namespace {

struct SearchRow {
  IntVector a;
  Integer b;
  bool equality = false;  // a.y = b, otherwise a.y <= b
};

// Unimodular column reduction: returns U (d x d) with A U = [H | 0], H having
// `rank` columns. Only called when the rows do not span Z^d's dual.
IntMatrix column_reduce(const std::vector<SearchRow>& rows, std::size_t d, std::size_t& rank) {
  const std::size_t m = rows.size();
  IntMatrix work(m + d, IntVector(d, Integer(0)));
  for (std::size_t i = 0; i < m; ++i) work[i] = rows[i].a;
  for (std::size_t j = 0; j < d; ++j) work[m + j][j] = 1;
  auto col_axpy = [&](std::size_t target, std::size_t source, const Integer& f) {
    for (auto& row : work) row[target] -= f * row[source];
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (auto& row : work) std::swap(row[a], row[b]);
  };
  std::size_t p = 0;
  for (std::size_t i = 0; i < m && p < d; ++i) {
    for (;;) {
      std::size_t best = d;
      for (std::size_t j = p; j < d; ++j)
        if (work[i][j] != 0 && (best == d || abs(work[i][j]) < abs(work[i][best]))) best = j;
      if (best == d) break;
      bool others = false;
      for (std::size_t j = p; j < d; ++j) {
        if (j == best || work[i][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), work[i][j].get_mpz_t(), work[i][best].get_mpz_t());
        col_axpy(j, best, q);
        if (work[i][j] != 0) others = true;
      }
      if (!others) {
        col_swap(p, best);
        ++p;
        break;
      }
    }
  }
  rank = p;
  IntMatrix u(d, IntVector(d));
  for (std::size_t j = 0; j < d; ++j) u[j] = work[m + j];
  return u;
}

class BranchAndBound {
 public:
  BranchAndBound(std::vector<SearchRow> rows, std::size_t dim) : rows_(std::move(rows)), dim_(dim) {}

  std::optional<IntVector> search(const Integer& bound) {
    IntVector lo(dim_, Integer(-bound)), hi(dim_, bound);
    if (auto x = rounding_heuristic(lo, hi)) return x;
    return explore(lo, hi);
  }

  std::size_t nodes() const { return nodes_; }

 private:
  std::vector<lp::Row> lp_rows(const IntVector& lo, const IntVector& hi, bool with_margin) const {
    std::vector<lp::Row> out;
    out.reserve(rows_.size() + 2 * dim_);
    for (const auto& r : rows_) {
      lp::Row row;
      row.a = to_rational(r.a);
      if (with_margin) {
        Integer l1 = 0;
        for (const auto& v : r.a) l1 += abs(v);
        row.a.emplace_back(r.equality ? Integer(0) : l1);
      }
      row.b = r.b;
      row.equality = r.equality;
      out.push_back(std::move(row));
    }
    const std::size_t width = dim_ + (with_margin ? 1 : 0);
    for (std::size_t j = 0; j < dim_; ++j) {
      lp::Row up, down;
      up.a.assign(width, Rational(0));
      down.a.assign(width, Rational(0));
      up.a[j] = 1;
      up.b = hi[j];
      down.a[j] = -1;
      down.b = -lo[j];
      out.push_back(std::move(up));
      out.push_back(std::move(down));
    }
    return out;
  }

  bool satisfies(const IntVector& y) const {
    for (const auto& r : rows_) {
      Integer v = dot(r.a, y);
      if (r.equality ? v != r.b : v > r.b) return false;
    }
    return true;
  }

  std::optional<IntVector> integral_point(const RatVector& x) const {
    IntVector y;
    y.reserve(x.size());
    for (const auto& v : x) {
      if (v.get_den() != 1) return std::nullopt;
      y.push_back(v.get_num());
    }
    if (!satisfies(y)) return std::nullopt;
    return y;
  }

  // A point keeping every weak row slack by at least half its l1-norm rounds to a
  // lattice point that still satisfies the row.
  std::optional<IntVector> rounding_heuristic(const IntVector& lo, const IntVector& hi) const {
    auto rows = lp_rows(lo, hi, true);
    lp::Row cap;
    cap.a.assign(dim_ + 1, Rational(0));
    cap.a[dim_] = 1;
    cap.b = Rational(1, 2);
    rows.push_back(std::move(cap));
    RatVector objective(dim_ + 1, Rational(0));
    objective[dim_] = 1;
    auto sol = lp::maximize(dim_ + 1, rows, objective);
    if (sol.status != lp::Status::Optimal || sol.value < 0) return std::nullopt;
    IntVector y;
    for (std::size_t j = 0; j < dim_; ++j) {
      Rational shifted = sol.x[j] + Rational(1, 2);
      y.push_back(floor_of(shifted));
    }
    if (satisfies(y)) return y;
    return std::nullopt;
  }

  std::optional<IntVector> explore(IntVector lo, IntVector hi) {
    ++nodes_;
    lp::Polyhedron poly(dim_, lp_rows(lo, hi, false));
    if (!poly.feasible()) return std::nullopt;
    if (auto y = integral_point(poly.point())) return y;
    for (std::size_t j = 0; j < dim_; ++j) {
      RatVector e(dim_, Rational(0));
      e[j] = 1;
      auto low = poly.minimize(e);
      if (auto y = integral_point(low.x)) return y;
      auto high = poly.maximize(e);
      if (auto y = integral_point(high.x)) return y;
      lo[j] = std::max(lo[j], ceil_of(low.value));
      hi[j] = std::min(hi[j], floor_of(high.value));
      if (lo[j] > hi[j]) return std::nullopt;
    }
    std::size_t branch = dim_;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (lo[j] == hi[j]) continue;
      if (branch == dim_ || hi[j] - lo[j] < hi[branch] - lo[branch]) branch = j;
    }
    if (branch == dim_) {
      if (satisfies(lo)) return lo;
      return std::nullopt;
    }
    Integer mid;
    mpz_fdiv_q_2exp(mid.get_mpz_t(), Integer(lo[branch] + hi[branch]).get_mpz_t(), 1);
    // mid, mid+1, mid-1, mid+2, ... clipped to [lo, hi]
    for (Integer step = 0;; ++step) {
      const Integer up = mid + step;
      const Integer down = mid - step;
      const bool up_ok = up <= hi[branch];
      const bool down_ok = step > 0 && down >= lo[branch];
      if (!up_ok && !down_ok && down < lo[branch]) break;
      for (int side = 0; side < 2; ++side) {
        if (side == 0 ? !up_ok : !down_ok) continue;
        IntVector clo = lo, chi = hi;
        clo[branch] = chi[branch] = side == 0 ? up : down;
        if (auto y = explore(std::move(clo), std::move(chi))) return y;
      }
    }
    return std::nullopt;
  }

  std::vector<SearchRow> rows_;
  std::size_t dim_;
  std::size_t nodes_ = 0;
};

}  // namespace

IntegerVerdict integer_feasible(const InequalitySystem& system) {
  for (const auto& row : system.rows())
    if (row.normal.size() != system.dim()) throw Error(ErrorCode::DimensionMismatch, "row length differs from dim");
  const std::size_t d = system.dim();
  const InequalitySystem tight = tighten(system);
  IntegerVerdict verdict;

  auto finish_feasible = [&](IntVector m) {
    if (!system.satisfied_by(m)) throw std::logic_error("integer_feasible: witness failed substitution");
    verdict.status = Feasibility::Feasible;
    verdict.witness = std::move(m);
    return verdict;
  };

  // Orient every row as a.m <= b (or =) and divide by the content of a.
  std::vector<SearchRow> rows;
  bool gcd_infeasible = false;
  for (const auto& row : tight.rows()) {
    const int s = orientation(row.relation);
    SearchRow r;
    r.equality = row.relation == Relation::Equal;
    for (const auto& v : row.normal) r.a.push_back(s * v);
    r.b = s * row.rhs;
    const Integer g = content(r.a);
    if (g == 0) {
      if (r.equality ? r.b != 0 : r.b < 0) gcd_infeasible = true;
      continue;
    }
    if (r.equality) {
      if (!mpz_divisible_p(r.b.get_mpz_t(), g.get_mpz_t())) gcd_infeasible = true;
      mpz_fdiv_q(r.b.get_mpz_t(), r.b.get_mpz_t(), g.get_mpz_t());
    } else {
      mpz_fdiv_q(r.b.get_mpz_t(), r.b.get_mpz_t(), g.get_mpz_t());
    }
    for (auto& v : r.a) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    rows.push_back(std::move(r));
  }

  // Express the search in coordinates where the rows involve only `rank` variables.
  IntMatrix basis;
  std::size_t rank = d;
  {
    IntMatrix normals;
    for (const auto& r : rows) normals.push_back(r.a);
    if (toric::rank(normals) < d) {
      basis = column_reduce(rows, d, rank);
      for (auto& r : rows) {
        IntVector reduced(rank, Integer(0));
        for (std::size_t k = 0; k < rank; ++k)
          for (std::size_t j = 0; j < d; ++j) reduced[k] += r.a[j] * basis[j][k];
        r.a = std::move(reduced);
      }
    }
  }
  InequalitySystem search_system(rank);
  for (const auto& r : rows) search_system.add(r.a, r.equality ? Relation::Equal : Relation::LessEqual, r.b);
  verdict.search_bound = solvability_bound(search_system);

  auto lift = [&](const IntVector& y) {
    if (basis.empty()) return y;
    IntVector m(d, Integer(0));
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < rank; ++k) m[j] += basis[j][k] * y[k];
    return m;
  };

  auto relaxed = real_feasible(tight);
  if (!relaxed.feasible()) {
    verdict.certificate = relaxed.certificate;
    return verdict;
  }
  if (gcd_infeasible) return verdict;
  if (rank == 0) return finish_feasible(lift(IntVector{}));

  BranchAndBound search(std::move(rows), rank);
  auto y = search.search(verdict.search_bound);
  verdict.nodes = search.nodes();
  if (y) return finish_feasible(lift(*y));
  return verdict;
}

std::size_t recession_dim(const InequalitySystem& system) {
  const std::size_t d = system.dim();
  std::vector<lp::Row> rows;
  IntMatrix equalities;
  for (const auto& row : system.rows()) {
    lp::Row r = oriented_row(row);
    r.b = 0;
    if (r.equality) equalities.push_back(row.normal);
    rows.push_back(std::move(r));
  }
  for (std::size_t j = 0; j < d; ++j) {
    lp::Row up, down;
    up.a.assign(d, Rational(0));
    down.a.assign(d, Rational(0));
    up.a[j] = 1;
    up.b = 1;
    down.a[j] = -1;
    down.b = 1;
    rows.push_back(std::move(up));
    rows.push_back(std::move(down));
  }
  lp::Polyhedron cone(d, rows);
  for (const auto& row : system.rows()) {
    if (row.relation == Relation::Equal) continue;
    const int s = orientation(row.relation);
    RatVector objective;
    for (const auto& v : row.normal) objective.emplace_back(-s * v);
    // The row is an implicit equality when no recession direction makes it strict.
    if (cone.maximize(objective).value == 0) equalities.push_back(row.normal);
  }
  return d - toric::rank(std::move(equalities));
}

}  // namespace toric
