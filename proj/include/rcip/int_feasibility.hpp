// Integer feasibility and linear optimization over convex sets, and the
// brute-force reference verdict for whole instances.
#pragma once

#include "rcip/instance.hpp"

namespace rcip {

/// Lexicographically smallest integer point of C ∩ [-box, box]^n, or none.
/// Coordinate branching with exact per-prefix interval pruning.
std::optional<LatticePoint> convex_int_feasible(const ConvexSet& c, const Rational& box);

struct IntOptimum {
  LatticePoint point;  // lexicographically smallest among optimizers
  Rational value;
};

/// Exact optimum of d.x over C ∩ Z^n within the box, or none when empty.
/// Branch and bound with LP and ellipsoid bounds on the unfixed coordinates.
std::optional<IntOptimum> convex_int_optimize(const ConvexSet& c, const RationalVector& d,
                                              Sense sense, const Rational& box);

/// All integer points of C within the box, lexicographic.
std::vector<LatticePoint> lattice_points(const ConvexSet& c, const Rational& box);

/// Scan limit in points; RCIP_GUARD_POINTS overrides the default of 10^6.
std::uint64_t scan_guard();

/// Lexicographically smallest feasible point of the instance by scanning
/// every lattice point of the box. Throws GuardError beyond scan_guard().
std::optional<LatticePoint> brute_force_verdict(const Instance& instance);
std::vector<LatticePoint> brute_force_all(const Instance& instance);

}  // namespace rcip
