#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/numeric.hpp"

namespace toric {

enum class Relation { Less, LessEqual, Equal, GreaterEqual, Greater };

const char* to_string(Relation r);
bool is_strict(Relation r);

struct Inequality {
  IntVector normal;
  Relation relation = Relation::LessEqual;
  Integer rhs;

  bool satisfied_by(const RatVector& x) const;
  bool satisfied_by(const IntVector& x) const;
};

/// Mixed strict/weak linear system  normal . m (rel) rhs  over M = Z^d (or M_R).
class InequalitySystem {
 public:
  explicit InequalitySystem(std::size_t dim) : dim_(dim) {}

  /// Throws Error(DimensionMismatch) when normal.size() != dim().
  InequalitySystem& add(IntVector normal, Relation relation, Integer rhs);

  std::size_t dim() const { return dim_; }
  const std::vector<Inequality>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  bool has_strict_rows() const;

  bool satisfied_by(const RatVector& x) const;
  bool satisfied_by(const IntVector& x) const;

 private:
  std::size_t dim_;
  std::vector<Inequality> rows_;
};

/// Multipliers, one per row, proving that no real point satisfies the system.
/// Rows are oriented as  s_r (a_r . m - b_r) <= 0  with s_r = -1 for >= and >,
/// +1 otherwise; multipliers of non-equality rows are nonnegative. The oriented
/// combination has zero normal and either a negative right-hand side, or a zero
/// right-hand side with positive weight on some strict row.
struct FarkasCertificate {
  RatVector multipliers;

  bool verifies(const InequalitySystem& system) const;
};

enum class Feasibility { Feasible, Infeasible };

struct RealVerdict {
  Feasibility status = Feasibility::Infeasible;
  std::optional<RatVector> witness;
  std::optional<FarkasCertificate> certificate;

  bool feasible() const { return status == Feasibility::Feasible; }
};

struct IntegerVerdict {
  Feasibility status = Feasibility::Infeasible;
  std::optional<IntVector> witness;
  /// Half-width of the box the search was confined to (in the search coordinates).
  Integer search_bound;
  /// When the tightened system is already infeasible over the reals: a certificate
  /// for tighten(system).
  std::optional<FarkasCertificate> certificate;
  std::size_t nodes = 0;

  bool feasible() const { return status == Feasibility::Feasible; }
};

/// Rational feasibility honoring strict rows strictly.
RealVerdict real_feasible(const InequalitySystem& system);

/// Integer points: a.m < b becomes a.m <= b - 1 and a.m > b becomes a.m >= b + 1.
InequalitySystem tighten(const InequalitySystem& system);

/// (d+1) * d! * A^d with A = max(1, largest absolute entry among normals and rhs).
Integer solvability_bound(const InequalitySystem& system);

/// Decides whether the system has a solution in Z^d. Feasible verdicts carry a
/// witness that satisfies the original system.
IntegerVerdict integer_feasible(const InequalitySystem& system);

/// Dimension of the recession cone of the closed system (all relations weakened).
std::size_t recession_dim(const InequalitySystem& system);

}  // namespace toric
