// Boundary hyperplane covers: hyperplane families containing every pairwise
// boundary intersection of a family of convex sets.
#pragma once

#include "rcip/convex.hpp"

#include <string>

namespace rcip {

struct PairCover {
  std::size_t i = 0, j = 0;  // member indices, i < j
  std::vector<std::size_t> hyperplanes;  // indices into BoundaryCover::hyperplanes
  /// The assigned hyperplane is the affine hull of the boundary intersection.
  bool ideal = false;
};

struct BoundaryCover {
  std::vector<Hyperplane> hyperplanes;
  std::vector<PairCover> pairs;
};

/// The hyperplane a.x = b with q1 - q2 = b - a.x identically, where q_k is
/// |x - c_k|^2 - r_k^2. None for concentric balls.
std::optional<Hyperplane> radical_hyperplane(const Ball& b1, const Ball& b2);

enum class SphereRelation { Disjoint, Tangent, FullCircle, Contained, Equal };
std::string to_string(SphereRelation r);

/// Exact comparison of |c1 - c2|^2 with (r1 + r2)^2 and (r1 - r2)^2.
/// Internal tangency (one ball inside the other touching at a point) is
/// reported as Tangent.
SphereRelation classify_sphere_intersection(const Ball& b1, const Ball& b2);

/// One radical hyperplane per pair whose spheres meet. Throws for equal balls.
BoundaryCover cover_for_balls(const std::vector<Ball>& balls);

struct FormExpansion {
  QuadraticFn fn;
  std::vector<Hyperplane> cover;  // h1 = 0 (and h2 = 0)
};

/// Expands alpha(|x|^2 - 1) + h1 h2 (or + h1). Requires alpha != 0,
/// non-constant h_j, a convex expansion and a bounded set.
FormExpansion quadratic_from_form(const QuadraticBhcForm& form);

/// Whether 2 alpha I + a b' + b a' is positive semidefinite, evaluated as
/// a.b + 2 alpha >= |a| |b| by exact squared comparison. Needs n >= 2 and
/// nonzero a, b.
bool convexity_condition(const Rational& alpha, const RationalVector& a, const RationalVector& b);

/// The hyperplanes h_j = 0 of the affine factors of a structured pair.
std::vector<Hyperplane> general_structure_cover(const std::vector<AffineFunction>& factors);

/// Cover built from the shapes alone: facet hyperplanes of polyhedral parts,
/// radical hyperplanes of curved parts with proportional Hessians (balls in
/// particular), and factor hyperplanes of BHC forms against a unit-sphere
/// quadratic. None when some curved pair has no constructible cover; the
/// offending pair is written to `failure`.
std::optional<BoundaryCover> construct_cover(const std::vector<ConvexSet>& sets,
                                             std::string* failure = nullptr);

/// Facet hyperplanes of every polyhedral part, deduplicated in order.
std::vector<Hyperplane> facet_hyperplanes(const std::vector<ConvexSet>& sets);

struct CoverViolation {
  std::size_t i = 0, j = 0;
  RationalVector point;  // approximate boundary intersection point
  std::string detail;
};

struct CoverReport {
  std::size_t pairs_checked = 0;
  std::size_t exact_pairs = 0;
  std::size_t sampled_pairs = 0;
  std::size_t unverified_pairs = 0;  // curved pairs in dimension >= 3
  std::vector<CoverViolation> violations;
};

/// Checks that each pairwise boundary intersection lies on cover hyperplanes:
/// exactly for ball pairs and polyhedral members, by boundary sampling with
/// bisection (2^-30) for other planar pairs, accepting points within 2^-16
/// of a cover hyperplane (relative to the largest coefficient).
CoverReport verify_cover(const std::vector<ConvexSet>& sets, const BoundaryCover& cover,
                         std::size_t samples = 256);

}  // namespace rcip
