#pragma once

#include <cstddef>
#include <vector>

#include "toric/numeric.hpp"

// Exact two-phase primal simplex over the rationals with Bland's rule.

namespace toric::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  Rational value;
  RatVector x;
};

/// maximize c.y  subject to  A y = b,  y >= 0.
Solution solve_standard(const std::vector<RatVector>& A, const RatVector& b, const RatVector& c);

/// A row a.x <= b, or a.x = b when `equality` is set, over free variables x.
struct Row {
  RatVector a;
  Rational b;
  bool equality = false;
};

/// Reusable LP over a fixed polyhedron {x free : rows}. Phase I runs once; each
/// maximize() call continues from the last optimal basis.
class Polyhedron {
 public:
  Polyhedron(std::size_t dim, const std::vector<Row>& rows);

  bool feasible() const { return feasible_; }
  std::size_t dim() const { return dim_; }

  /// A feasible point (the current basic solution). Requires feasible().
  RatVector point() const;

  /// maximize c.x. Status is Infeasible when the polyhedron is empty.
  Solution maximize(const RatVector& c);
  Solution minimize(const RatVector& c);

 private:
  std::size_t dim_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;  // structural columns (x+, x-, slacks)
  bool feasible_ = false;
  std::vector<Rational> t_;  // rows_ x (cols_ + 1), last column is the right-hand side
  std::vector<std::size_t> basis_;

  Rational& at(std::size_t r, std::size_t c) { return t_[r * (cols_ + 1) + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return t_[r * (cols_ + 1) + c]; }
};

/// Convenience: maximize c.x over free x subject to rows.
Solution maximize(std::size_t dim, const std::vector<Row>& rows, const RatVector& c);

}  // namespace toric::lp
