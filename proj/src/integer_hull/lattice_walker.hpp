// Lexicographic enumeration of lattice points in a box cut by polyhedral
// rows and convex quadratic constraints, with per-prefix interval pruning.
#pragma once

#include "rcip/convex.hpp"

#include <functional>

namespace rcip::detail {

struct LatticeRegion {
  HPolyhedron rows;
  std::vector<QuadraticFn> quads;  // q <= 0; used for pruning and membership
  /// Extra exact membership test applied at the leaves, if set.
  std::function<bool(const RationalVector&)> accept;
};

LatticeRegion region_of(const ConvexSet& c);

using Visit = std::function<bool(const LatticePoint&, const RationalVector&)>;
/// Called with each proper prefix; returning true skips that subtree.
using Prune = std::function<bool(const RationalVector&)>;

/// Visits every lattice point of the region inside [-box, box]^n in
/// lexicographic order until `visit` returns true. Returns whether it stopped
/// early.
bool walk_lattice(const LatticeRegion& region, long box, const Visit& visit,
                  const Prune& prune = nullptr);

/// Upper bound on d.x over the region with the first coordinates fixed to
/// `prefix` (the remaining ones boxed); none when provably empty.
std::optional<Rational> linear_upper_bound(const LatticeRegion& region, long box,
                                           const RationalVector& prefix, const RationalVector& d);

/// Integer range [lo, hi] of coordinate k over the region with the first k
/// coordinates fixed to `prefix`; none when empty.
std::optional<std::pair<long, long>> coordinate_range(const LatticeRegion& region, long box,
                                                      const RationalVector& prefix);

long box_radius(const Rational& box);

}  // namespace rcip::detail
