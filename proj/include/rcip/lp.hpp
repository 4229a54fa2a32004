// Exact rational linear programming and strictly convex quadratic
// minimization over polyhedra.
#pragma once

#include "rcip/polyhedron.hpp"

#include <cstdint>
#include <optional>

namespace rcip {

enum class Relation { LessEqual, GreaterEqual, Equal };
enum class Sense { Minimize, Maximize };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct Constraint {
  RationalVector a;
  Relation relation = Relation::LessEqual;
  Rational b;
};

struct Objective {
  Sense sense = Sense::Maximize;
  RationalVector c;
};

struct LinearProgram {
  std::size_t dim = 0;
  std::vector<Constraint> constraints;
  std::optional<Objective> objective;  // absent: feasibility only
  /// Per-variable sign restriction x_j >= 0. Empty means every variable free.
  std::vector<bool> nonnegative;

  LinearProgram() = default;
  explicit LinearProgram(std::size_t n) : dim(n) {}

  void add(RationalVector a, Relation rel, Rational b);
  void add(const Halfspace& h) { add(h.a, Relation::LessEqual, h.b); }
  void add(const HPolyhedron& p);
  void maximize(RationalVector c) { objective = Objective{Sense::Maximize, std::move(c)}; }
  void minimize(RationalVector c) { objective = Objective{Sense::Minimize, std::move(c)}; }
};

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::optional<RationalVector> point;
  std::optional<Rational> value;
};

/// Exact simplex (Bland's rule, two phases). Optimal points are basic
/// solutions and satisfy every constraint exactly.
LpResult solve(const LinearProgram& lp);

/// Optimizes c.x over P. Convenience over `solve`.
LpResult optimize(const HPolyhedron& p, const RationalVector& c, Sense sense);

/// Some feasible point of P, if any.
std::optional<RationalVector> feasible_point(const HPolyhedron& p);

/// A point satisfying every row strictly, found by maximizing a common slack
/// t (capped at 1); none when the optimal slack is 0 or P is empty.
std::optional<RationalVector> interior_point(const HPolyhedron& p);

/// Number of LP solves performed so far by this process.
std::uint64_t lp_solve_count();

struct QuadraticProgramResult {
  LpStatus status = LpStatus::Infeasible;
  std::optional<RationalVector> point;
  std::optional<Rational> value;
};

/// Minimizes x'Qx + b'x + c over P (P may have no rows). Q must be positive
/// definite, so the minimizer is unique when P is nonempty. Primal
/// active-set method with exact KKT solves.
QuadraticProgramResult minimize_quadratic(const RationalMatrix& q, const RationalVector& b,
                                          const Rational& c, const HPolyhedron& p);

}  // namespace rcip
