#include "toric/linear_program.hpp"

#include <stdexcept>

namespace toric::lp {

namespace {

// Dense simplex tableau with an objective row kept in reduced form. The objective
// row holds -c_j (reduced) in column j and the current objective value in the
// right-hand-side column, for a maximization problem.
class Engine {
 public:
  Engine(std::size_t rows, std::size_t cols) : m_(rows), n_(cols), t_(rows * (cols + 1)), z_(cols + 1),
      basis_(rows), allowed_(cols, 1) {}
  Engine(std::size_t rows, std::size_t cols, std::vector<Rational> tableau, std::vector<std::size_t> basis)
      : m_(rows), n_(cols), t_(std::move(tableau)), z_(cols + 1), basis_(std::move(basis)), allowed_(cols, 1) {}

  Rational& at(std::size_t r, std::size_t c) { return t_[r * (n_ + 1) + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return t_[r * (n_ + 1) + c]; }
  Rational& rhs(std::size_t r) { return at(r, n_); }
  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }
  std::vector<std::size_t>& basis() { return basis_; }
  std::vector<char>& allowed() { return allowed_; }
  std::vector<Rational>& objective() { return z_; }

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / at(r, c);
    std::vector<std::size_t> nz;
    nz.reserve(n_ + 1);
    for (std::size_t j = 0; j <= n_; ++j) {
      if (at(r, j) != 0) {
        at(r, j) *= inv;
        nz.push_back(j);
      }
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || at(i, c) == 0) continue;
      Rational f = at(i, c);
      for (auto j : nz) at(i, j) -= f * at(r, j);
    }
    if (z_[c] != 0) {
      Rational f = z_[c];
      for (auto j : nz) z_[j] -= f * at(r, j);
    }
    basis_[r] = c;
  }

  // Sets the objective row from costs (maximize cost.y) and prices out the basis.
  void set_objective(const RatVector& cost) {
    for (std::size_t j = 0; j < n_; ++j) z_[j] = j < cost.size() ? Rational(-cost[j]) : Rational(0);
    z_[n_] = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational f = z_[basis_[i]];
      if (f == 0) continue;
      for (std::size_t j = 0; j <= n_; ++j)
        if (at(i, j) != 0) z_[j] -= f * at(i, j);
    }
  }

  // Bland's rule: lowest-index improving column, lowest-index leaving variable on ties.
  Status optimize() {
    for (;;) {
      std::size_t enter = n_;
      for (std::size_t j = 0; j < n_; ++j) {
        if (allowed_[j] && z_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == n_) return Status::Optimal;
      std::size_t leave = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (at(i, enter) <= 0) continue;
        Rational ratio = rhs(i) / at(i, enter);
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) return Status::Unbounded;
      pivot(leave, enter);
    }
  }

  RatVector basic_solution() const {
    RatVector y(n_);
    for (std::size_t i = 0; i < m_; ++i) y[basis_[i]] = at(i, n_);
    return y;
  }

  // Removes row r (only valid for redundant rows whose basic variable is artificial).
  void erase_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r * (n_ + 1)),
             t_.begin() + static_cast<std::ptrdiff_t>((r + 1) * (n_ + 1)));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --m_;
  }

  // Drops trailing columns [keep, n_) which must all be nonbasic.
  void truncate_columns(std::size_t keep) {
    std::vector<Rational> t(m_ * (keep + 1));
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < keep; ++j) t[i * (keep + 1) + j] = at(i, j);
      t[i * (keep + 1) + keep] = at(i, n_);
    }
    t_ = std::move(t);
    n_ = keep;
    z_.assign(n_ + 1, Rational(0));
    allowed_.assign(n_, 1);
  }

  std::vector<Rational> take_tableau() { return std::move(t_); }

 private:
  std::size_t m_, n_;
  std::vector<Rational> t_;
  std::vector<Rational> z_;
  std::vector<std::size_t> basis_;
  std::vector<char> allowed_;
};

// Phase I on A y = b, y >= 0. On success the engine holds a feasible basis over the
// original n columns (artificial columns removed, redundant rows dropped).
bool phase_one(Engine& e, std::size_t n) {
  const std::size_t m = e.rows();
  for (std::size_t i = 0; i < m; ++i) {
    if (e.rhs(i) < 0)
      for (std::size_t j = 0; j <= e.cols(); ++j) e.at(i, j) = -e.at(i, j);
    e.at(i, n + i) = 1;
    e.basis()[i] = n + i;
  }
  RatVector cost(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) cost[n + i] = -1;
  e.set_objective(cost);
  e.optimize();
  if (e.objective()[e.cols()] < 0) return false;

  // Drive remaining artificial variables out of the basis.
  for (std::size_t i = 0; i < e.rows();) {
    if (e.basis()[i] < n) {
      ++i;
      continue;
    }
    std::size_t c = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (e.at(i, j) != 0) {
        c = j;
        break;
      }
    }
    if (c == n) {
      e.erase_row(i);
    } else {
      e.pivot(i, c);
      ++i;
    }
  }
  e.truncate_columns(n);
  return true;
}

}  // namespace

Solution solve_standard(const std::vector<RatVector>& A, const RatVector& b, const RatVector& c) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw std::invalid_argument("solve_standard: rhs length mismatch");
  Engine e(m, n + m);
  for (std::size_t i = 0; i < m; ++i) {
    if (A[i].size() != n) throw std::invalid_argument("solve_standard: row length mismatch");
    for (std::size_t j = 0; j < n; ++j) e.at(i, j) = A[i][j];
    e.rhs(i) = b[i];
  }
  Solution sol;
  if (!phase_one(e, n)) {
    sol.status = Status::Infeasible;
    return sol;
  }
  e.set_objective(c);
  sol.status = e.optimize();
  sol.x = e.basic_solution();
  if (sol.status == Status::Optimal) sol.value = e.objective()[e.cols()];
  return sol;
}

Polyhedron::Polyhedron(std::size_t dim, const std::vector<Row>& rows) : dim_(dim) {
  std::size_t slacks = 0;
  for (const auto& r : rows) {
    if (r.a.size() != dim) throw std::invalid_argument("Polyhedron: row length mismatch");
    if (!r.equality) ++slacks;
  }
  const std::size_t m = rows.size();
  const std::size_t n = 2 * dim + slacks;
  Engine e(m, n + m);
  std::size_t s = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      e.at(i, j) = rows[i].a[j];
      e.at(i, dim + j) = -rows[i].a[j];
    }
    if (!rows[i].equality) e.at(i, 2 * dim + s++) = 1;
    e.rhs(i) = rows[i].b;
  }
  feasible_ = phase_one(e, n);
  if (!feasible_) return;
  rows_ = e.rows();
  cols_ = n;
  basis_ = e.basis();
  t_ = e.take_tableau();
}

RatVector Polyhedron::point() const {
  RatVector x(dim_);
  for (std::size_t i = 0; i < rows_; ++i) {
    const std::size_t b = basis_[i];
    if (b < dim_) x[b] += at(i, cols_);
    else if (b < 2 * dim_) x[b - dim_] -= at(i, cols_);
  }
  return x;
}

Solution Polyhedron::maximize(const RatVector& c) {
  Solution sol;
  if (!feasible_) {
    sol.status = Status::Infeasible;
    return sol;
  }
  if (c.size() != dim_) throw std::invalid_argument("Polyhedron::maximize: objective length mismatch");
  Engine e(rows_, cols_, std::move(t_), std::move(basis_));
  RatVector cost(cols_, Rational(0));
  for (std::size_t j = 0; j < dim_; ++j) {
    cost[j] = c[j];
    cost[dim_ + j] = -c[j];
  }
  e.set_objective(cost);
  sol.status = e.optimize();
  // Keep the final basis: it is feasible and usually close to the next optimum.
  t_ = e.take_tableau();
  basis_ = e.basis();
  sol.x = point();
  if (sol.status == Status::Optimal) {
    sol.value = 0;
    for (std::size_t j = 0; j < dim_; ++j) sol.value += c[j] * sol.x[j];
  }
  return sol;
}

Solution Polyhedron::minimize(const RatVector& c) {
  RatVector neg(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) neg[j] = -c[j];
  Solution sol = maximize(neg);
  sol.value = -sol.value;
  return sol;
}

Solution maximize(std::size_t dim, const std::vector<Row>& rows, const RatVector& c) {
  Polyhedron p(dim, rows);
  return p.maximize(c);
}

}  // namespace toric::lp
