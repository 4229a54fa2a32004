#include "rcip/int_feasibility.hpp"

#include "integer_hull/lattice_walker.hpp"
#include "rcip/integer_hull.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace rcip {

namespace {

// Lattice search radius: the instance box, shrunk to the set's circumradius.
long search_radius(const ConvexSet& c, const Rational& box) {
  Rational r = box;
  if (sgn(c.circumradius) >= 0 && c.circumradius < r) r = c.circumradius;
  check_lattice_guards(c.dim(), r);
  return detail::box_radius(r);
}

}  // namespace

std::optional<LatticePoint> convex_int_feasible(const ConvexSet& c, const Rational& box) {
  const long radius = search_radius(c, box);
  std::optional<LatticePoint> found;
  detail::walk_lattice(detail::region_of(c), radius, [&](const LatticePoint& x, const RationalVector&) {
    found = x;
    return true;
  });
  return found;
}

std::optional<IntOptimum> convex_int_optimize(const ConvexSet& c, const RationalVector& d,
                                              Sense sense, const Rational& box) {
  if (d.size() != c.dim()) throw DimensionError("direction dimension does not match the set");
  const long radius = search_radius(c, box);
  // Maximize d'.x with d' = -d for minimization.
  const RationalVector dir = sense == Sense::Maximize ? d : scale(d, -1);
  const auto region = detail::region_of(c);
  std::optional<IntOptimum> best;
  Rational best_value;
  auto visit = [&](const LatticePoint& x, const RationalVector& xr) {
    Rational v = dot(dir, xr);
    if (!best || v > best_value) {
      best_value = v;
      best = IntOptimum{x, dot(d, xr)};
    }
    return false;
  };
  // Subtrees whose relaxation cannot beat the incumbent strictly are skipped;
  // ties keep the lexicographically first optimizer.
  auto prune = [&](const RationalVector& prefix) {
    if (!best) return false;
    auto bound = detail::linear_upper_bound(region, radius, prefix, dir);
    return !bound || *bound <= best_value;
  };
  detail::walk_lattice(region, radius, visit, prune);
  return best;
}

std::vector<LatticePoint> lattice_points(const ConvexSet& c, const Rational& box) {
  const long radius = search_radius(c, box);
  std::vector<LatticePoint> out;
  detail::walk_lattice(detail::region_of(c), radius, [&](const LatticePoint& x, const RationalVector&) {
    out.push_back(x);
    return false;
  });
  return out;
}

std::uint64_t scan_guard() {
  constexpr std::uint64_t kDefault = 1000000;
  const char* env = std::getenv("RCIP_GUARD_POINTS");
  if (!env || !*env) return kDefault;
  std::uint64_t v = 0;
  auto [end, ec] = std::from_chars(env, env + std::strlen(env), v);
  if (ec != std::errc() || *end != '\0') return kDefault;
  return v;
}

namespace {

// Visits the box lattice in lexicographic order until `visit` returns true.
template <class F>
void scan_instance(const Instance& instance, F&& visit) {
  if (instance.dim == 0) throw DimensionError("instance dimension must be at least 1");
  if (sgn(instance.box) < 0) return;
  const long radius = detail::box_radius(instance.box);
  const std::uint64_t side = 2 * static_cast<std::uint64_t>(radius) + 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < instance.dim; ++i) {
    if (total > scan_guard() / side + 1) throw GuardError("lattice scan exceeds the point guard");
    total *= side;
  }
  if (total > scan_guard())
    throw GuardError("lattice scan of " + std::to_string(total) + " points exceeds the guard of " +
                     std::to_string(scan_guard()));
  LatticePoint x(instance.dim, -radius);
  RationalVector xr(instance.dim);
  while (true) {
    for (std::size_t i = 0; i < instance.dim; ++i) xr[i] = static_cast<long>(x[i]);
    if (instance.feasible(xr) && visit(x)) return;
    std::size_t i = instance.dim;
    while (i > 0 && x[i - 1] == radius) x[--i] = -radius;
    if (i == 0) return;
    ++x[i - 1];
  }
}

}  // namespace

std::optional<LatticePoint> brute_force_verdict(const Instance& instance) {
  std::optional<LatticePoint> found;
  scan_instance(instance, [&](const LatticePoint& x) {
    found = x;
    return true;
  });
  return found;
}

std::vector<LatticePoint> brute_force_all(const Instance& instance) {
  std::vector<LatticePoint> out;
  scan_instance(instance, [&](const LatticePoint& x) {
    out.push_back(x);
    return false;
  });
  return out;
}

}  // namespace rcip
