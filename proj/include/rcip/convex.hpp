// Convex-set descriptions and their oracles: membership, separation,
// directional bounds, gauge, full-dimensionality.
#pragma once

#include "rcip/lp.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace rcip {

/// The function x'Qx + b'x + c with Q symmetric.
struct QuadraticFn {
  RationalMatrix q;
  RationalVector b;
  Rational c;

  std::size_t dim() const { return b.size(); }
  Rational operator()(const RationalVector& x) const;
  RationalVector gradient(const RationalVector& x) const;
};

/// x -> a.x + c
struct AffineFunction {
  RationalVector a;
  Rational c;

  Rational operator()(const RationalVector& x) const { return dot(a, x) + c; }
};

/// g(x) = alpha (|x|^2 - 1) + h1(x) h2(x), or alpha (|x|^2 - 1) + h1(x) when
/// h2 is absent. Sets of this shape meet the unit sphere only where some
/// h_j vanishes.
struct QuadraticBhcForm {
  Rational alpha;
  AffineFunction h1;
  std::optional<AffineFunction> h2;
};

struct Ball {
  RationalVector center;
  Rational radius;
};

/// { x : x'Qx + b'x + c <= 0 } with Q positive semidefinite.
struct ConvexQuadratic {
  QuadraticFn fn;
  std::optional<QuadraticBhcForm> form;  // set when built from a BHC form
};

struct ConvexSet;

struct Intersection {
  std::vector<ConvexSet> members;
};

/// region ∩ (M_1 ∪ ... ∪ M_k), with members taken as interiors when
/// `open_members`. Only built by the decomposition after it has certified
/// that the union is convex on the region.
struct UnionConvex {
  HPolyhedron region;
  std::vector<ConvexSet> members;
  bool open_members = true;
  std::string certificate;
};

struct ConvexSet {
  std::variant<Ball, ConvexQuadratic, HPolyhedron, Intersection, UnionConvex> shape;
  std::string name;
  Rational circumradius;  // every point of the set has norm <= circumradius
  std::optional<Rational> inradius;

  std::size_t dim() const;
  bool is_ball() const { return std::holds_alternative<Ball>(shape); }
  bool is_polyhedron() const { return std::holds_alternative<HPolyhedron>(shape); }
  const Ball& ball() const { return std::get<Ball>(shape); }
  const HPolyhedron& polyhedron() const { return std::get<HPolyhedron>(shape); }
};

ConvexSet make_ball(RationalVector center, Rational radius, std::string name = {});
/// Rejects Q that is not symmetric positive semidefinite. A circumradius is
/// derived when Q is definite; otherwise `radius_bound` is required.
ConvexSet make_quadratic(QuadraticFn fn, std::string name = {},
                         std::optional<Rational> radius_bound = std::nullopt);
/// Circumradius from coordinate-wise LP bounds; unbounded polyhedra need
/// `radius_bound`.
ConvexSet make_polyhedron(HPolyhedron p, std::string name = {},
                          std::optional<Rational> radius_bound = std::nullopt);
ConvexSet make_intersection(std::vector<ConvexSet> members, std::string name = {});
ConvexSet make_union(HPolyhedron region, std::vector<ConvexSet> members, bool open_members,
                     std::string certificate);

QuadraticFn quadratic_of(const Ball& b);

/// Closed description as polyhedral rows plus convex quadratic constraints
/// q <= 0. Throws for UnionConvex.
struct SetParts {
  HPolyhedron rows;
  std::vector<QuadraticFn> quads;
};
SetParts parts_of(const ConvexSet& c);

bool contains(const ConvexSet& c, const RationalVector& x);
/// Membership in the topological interior (strict inequalities per class).
bool contains_interior(const ConvexSet& c, const RationalVector& x);

/// Membership, or a halfspace a.y <= b valid for the whole set with
/// a.x > b. Ball and polyhedron cuts are scaled so max |a_i| = 1.
std::optional<Halfspace> separate(const ConvexSet& c, const RationalVector& x);

/// Outer bounds [lo, hi] on d.x over the set; none when the set is empty.
std::optional<std::pair<Rational, Rational>> interval_bounds(const ConvexSet& c,
                                                             const RationalVector& d);

/// Approximates the gauge of C - anchor at x - anchor to within tol by
/// bisection on membership. Throws if the anchor is not interior.
Rational gauge(const ConvexSet& c, const RationalVector& anchor, const RationalVector& x,
               const Rational& tol);

bool is_full_dimensional(const ConvexSet& c);

/// A point strictly inside every row and with every quadratic negative, or
/// none. Exact for up to one quadratic and for pairs with proportional
/// Hessians; otherwise a budgeted multiplier search that only returns
/// verified points and proves emptiness when it can. Quadratics must have
/// positive definite Q.
std::optional<RationalVector> find_common_interior_point(const HPolyhedron& rows,
                                                         const std::vector<QuadraticFn>& quads);

/// Number of budget-exhausted interior searches (each also logs a warning).
std::uint64_t interior_search_warnings();

/// Center and level of a positive definite quadratic:
/// q(x) = (x - center)'Q(x - center) + level.
struct QuadraticCenter {
  RationalVector center;
  Rational level;
};
QuadraticCenter center_of(const QuadraticFn& f);

}  // namespace rcip
