// Problem instances: lattice points of the box lying in some domain and
// outside every removed set.
#pragma once

#include "rcip/bhc.hpp"

namespace rcip {

enum class Semantics { Open, Closed };

/// { x : q(x) <= 0 } for an arbitrary (possibly indefinite) quadratic. Only
/// the brute-force oracle accepts these.
struct QuadraticRegion {
  QuadraticFn fn;
  std::string name;
};

struct Instance {
  std::string name;
  std::size_t dim = 0;
  Rational box;  // lattice points are searched in [-box, box]^dim
  std::vector<ConvexSet> domains;  // empty: the whole box
  std::vector<ConvexSet> removed;
  std::vector<QuadraticRegion> nonconvex_removed;
  Semantics semantics = Semantics::Open;
  std::optional<BoundaryCover> cover;

  /// Exact feasibility of a point: in the box, in some domain, and not in
  /// any removed set (interiors under open semantics).
  bool feasible(const RationalVector& x) const;
  bool in_box(const RationalVector& x) const;
  bool in_domain(const RationalVector& x) const;
  bool removed_point(const RationalVector& x) const;
};

}  // namespace rcip
