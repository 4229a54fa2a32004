// Separating hyperplanes between convex sets and between their integer
// hulls.
#pragma once

#include "rcip/int_feasibility.hpp"

namespace rcip {

struct SeparationResult {
  enum class Status { Separated, Intersecting };
  Status status = Status::Intersecting;
  /// Separated: a.x < b < a.y for every integer point x of C1 and y of C2 in
  /// the box, with max |a_i| >= 1. No lattice point lies on a.x = b.
  RationalVector a;
  Rational b;
  /// Intersecting: a common integer point, when one exists.
  std::optional<LatticePoint> witness;
  bool no_integer_witness = false;
  std::size_t iterations = 0;  // feasible master solves
};

/// Cut generation over the 2n normalised master problems (a_i >= 1, then
/// a_i <= -1, for i = 1..n). Each master keeps a.x <= b on collected points
/// of C1 and a.y >= b + 1 on collected points of C2; the integer optimisation
/// oracle adds the most violated point until the master is stable. Throws
/// InternalError past the iteration cap.
SeparationResult separate_integer_hulls(const ConvexSet& c1, const ConvexSet& c2, const Rational& box);

/// Exact (a, b) with C1 in a.x <= b and C2 in a.x >= b for two polyhedra
/// (Farkas certificate) or two balls (point dividing the centre segment in
/// the ratio of the radii); a scaled to max |a_i| = 1. None for other
/// classes or when no such hyperplane exists.
std::optional<Hyperplane> continuous_weak_separation(const ConvexSet& c1, const ConvexSet& c2);

}  // namespace rcip
