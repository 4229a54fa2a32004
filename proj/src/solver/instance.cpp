#include "rcip/instance.hpp"

#include <algorithm>

namespace rcip {

bool Instance::in_box(const RationalVector& x) const {
  if (x.size() != dim) throw DimensionError("point dimension does not match instance");
  return std::all_of(x.begin(), x.end(), [&](const Rational& v) { return abs(v) <= box; });
}

bool Instance::in_domain(const RationalVector& x) const {
  if (domains.empty()) return true;
  return std::any_of(domains.begin(), domains.end(), [&](const ConvexSet& k) { return contains(k, x); });
}

bool Instance::removed_point(const RationalVector& x) const {
  const bool open = semantics == Semantics::Open;
  for (const auto& c : removed)
    if (open ? contains_interior(c, x) : contains(c, x)) return true;
  for (const auto& r : nonconvex_removed) {
    int s = sgn(r.fn(x));
    if (open ? s < 0 : s <= 0) return true;
  }
  return false;
}

bool Instance::feasible(const RationalVector& x) const {
  return in_box(x) && in_domain(x) && !removed_point(x);
}

}  // namespace rcip
