// Lattice points of polyhedra, integer hull vertices, and the reverse-convex
// feasibility oracle built on the vertex property.
#pragma once

#include "rcip/convex.hpp"

namespace rcip {

constexpr std::size_t kMaxLatticeDim = 4;
constexpr long kMaxLatticeBox = 64;

/// Throws GuardError when n or the box radius exceed the desk-scale limits.
void check_lattice_guards(std::size_t n, const Rational& box);

struct LatticePointSet {
  std::vector<LatticePoint> points;  // lexicographic order
  Rational box;
};

/// Integer points of P ∩ [-box, box]^n.
LatticePointSet enumerate_lattice(const HPolyhedron& p, const Rational& box);

struct IntegerHull {
  std::vector<LatticePoint> vertices;  // lexicographic order
};

/// Extreme points of conv(points). Throws std::invalid_argument when empty.
IntegerHull hull_vertices(const LatticePointSet& pts);

/// Whether p is an extreme point of conv(set); p must belong to the set.
bool is_hull_vertex(const std::vector<LatticePoint>& set, const LatticePoint& p);

enum class Removal { Closed, Interior };

/// A vertex of the integer hull of P ∩ box lying outside C (outside int(C)
/// for Removal::Interior), or none when every lattice point of P is removed.
/// The first such vertex in lexicographic order is returned.
std::optional<LatticePoint> reverse_convex_feasible(const HPolyhedron& p, const ConvexSet& c,
                                                    const Rational& box,
                                                    Removal removal = Removal::Closed);

}  // namespace rcip
