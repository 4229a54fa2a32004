#include "integer_hull/lattice_walker.hpp"
#include "rcip/integer_hull.hpp"

#include <algorithm>

namespace rcip {

namespace detail {

namespace {

using Range = std::pair<long, long>;

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw GuardError("lattice coordinate out of range");
  return z.get_si();
}

std::optional<Range> clamp(std::optional<Range> r, long lo, long hi) {
  if (!r) return r;
  r->first = std::max(r->first, lo);
  r->second = std::min(r->second, hi);
  if (r->first > r->second) return std::nullopt;
  return r;
}

// Range of free coordinate 0 over the rows with the prefix substituted and
// the remaining free coordinates boxed.
std::optional<Range> polyhedral_range(const HPolyhedron& rows, long box,
                                      const RationalVector& prefix) {
  const std::size_t n = rows.dim, k = prefix.size(), free = n - k;
  HPolyhedron reduced(free);
  Rational lo = -box, hi = box;
  bool single = free == 1;
  for (const auto& h : rows.rows) {
    RationalVector a(h.a.begin() + static_cast<long>(k), h.a.end());
    Rational rhs = h.b;
    for (std::size_t j = 0; j < k; ++j)
      if (sgn(h.a[j]) != 0) rhs -= h.a[j] * prefix[j];
    if (is_zero(a)) {
      if (sgn(rhs) < 0) return std::nullopt;
      continue;
    }
    if (single) {
      Rational bound = rhs / a[0];
      if (sgn(a[0]) > 0) hi = std::min(hi, bound);
      else lo = std::max(lo, bound);
    } else {
      reduced.rows.push_back({std::move(a), std::move(rhs)});
    }
  }
  if (!single && !reduced.rows.empty()) {
    auto boxed = reduced.intersect(HPolyhedron::box(free, box));
    auto mn = optimize(boxed, unit_vector(free, 0), Sense::Minimize);
    if (mn.status != LpStatus::Optimal) return std::nullopt;
    auto mx = optimize(boxed, unit_vector(free, 0), Sense::Maximize);
    lo = *mn.value;
    hi = *mx.value;
  }
  long l = to_long(ceil(lo)), u = to_long(floor(hi));
  if (l > u) return std::nullopt;
  return Range{l, u};
}

struct Restricted {
  RationalMatrix q;
  RationalVector lin;
  Rational constant;
};

// q(prefix, y) as a quadratic in the free coordinates y.
Restricted restrict_to(const QuadraticFn& f, const RationalVector& prefix) {
  const std::size_t n = f.dim(), k = prefix.size(), free = n - k;
  Restricted r{RationalMatrix(free, free), RationalVector(free), f.c};
  for (std::size_t i = 0; i < free; ++i) {
    for (std::size_t j = 0; j < free; ++j) r.q(i, j) = f.q(k + i, k + j);
    r.lin[i] = f.b[k + i];
    for (std::size_t j = 0; j < k; ++j) r.lin[i] += 2 * f.q(k + i, j) * prefix[j];
  }
  for (std::size_t i = 0; i < k; ++i) {
    r.constant += f.b[i] * prefix[i];
    for (std::size_t j = 0; j < k; ++j) r.constant += prefix[i] * f.q(i, j) * prefix[j];
  }
  return r;
}

// Exact integer range of free coordinate 0 over {q <= 0} restricted to the
// prefix. Returns the full box when the restricted Hessian is singular.
std::optional<Range> quadratic_range(const QuadraticFn& f, long box, const RationalVector& prefix) {
  const std::size_t free = f.dim() - prefix.size();
  auto [qff, lin, constant] = restrict_to(f, prefix);
  auto col = solve_linear(qff, unit_vector(free, 0));
  if (col.rank != free) return Range{-box, box};
  auto centre_sol = solve_linear(qff, scale(lin, frac(-1, 2)));
  const RationalVector& centre = *centre_sol.solution;
  Rational level = dot(centre, qff.multiply(centre)) + dot(lin, centre) + constant;
  if (sgn(level) > 0) return std::nullopt;
  // Projection onto coordinate 0: (t - m)^2 <= spread.
  const Rational& m = centre[0];
  Rational spread = -level * (*col.solution)[0];
  auto inside = [&](long t) {
    Rational d = Rational(t) - m;
    return d * d <= spread;
  };
  Rational width = sqrt_upper(spread, 24);
  long lo = to_long(ceil(m - width)), hi = to_long(floor(m + width));
  lo = std::max(lo, -box - 1);
  hi = std::min(hi, box + 1);
  while (lo <= hi && !inside(lo)) ++lo;
  while (hi >= lo && !inside(hi)) --hi;
  if (lo > hi) return std::nullopt;
  return Range{lo, hi};
}

bool leaf_member(const LatticeRegion& region, const RationalVector& x) {
  if (!region.rows.contains(x)) return false;
  for (const auto& q : region.quads)
    if (sgn(q(x)) > 0) return false;
  return !region.accept || region.accept(x);
}

bool walk(const LatticeRegion& region, long box, RationalVector& prefix, LatticePoint& point,
          const Visit& visit, const Prune& prune) {
  const std::size_t n = region.rows.dim;
  if (prefix.size() == n) {
    if (!leaf_member(region, prefix)) return false;
    return visit(point, prefix);
  }
  if (prune && prune(prefix)) return false;
  auto range = coordinate_range(region, box, prefix);
  if (!range) return false;
  for (long t = range->first; t <= range->second; ++t) {
    prefix.emplace_back(t);
    point.push_back(t);
    bool stop = walk(region, box, prefix, point, visit, prune);
    prefix.pop_back();
    point.pop_back();
    if (stop) return true;
  }
  return false;
}

}  // namespace

std::optional<std::pair<long, long>> coordinate_range(const LatticeRegion& region, long box,
                                                      const RationalVector& prefix) {
  std::optional<Range> r = Range{-box, box};
  r = clamp(polyhedral_range(region.rows, box, prefix), r->first, r->second);
  for (const auto& q : region.quads) {
    if (!r) break;
    auto qr = quadratic_range(q, box, prefix);
    r = qr ? clamp(r, qr->first, qr->second) : std::nullopt;
  }
  return r;
}

LatticeRegion region_of(const ConvexSet& c) {
  if (const auto* u = std::get_if<UnionConvex>(&c.shape)) {
    return {u->region, {}, [c](const RationalVector& x) { return contains(c, x); }};
  }
  auto parts = parts_of(c);
  return {std::move(parts.rows), std::move(parts.quads), nullptr};
}

bool walk_lattice(const LatticeRegion& region, long box, const Visit& visit, const Prune& prune) {
  RationalVector prefix;
  LatticePoint point;
  prefix.reserve(region.rows.dim);
  point.reserve(region.rows.dim);
  return walk(region, box, prefix, point, visit, prune);
}

std::optional<Rational> linear_upper_bound(const LatticeRegion& region, long box,
                                           const RationalVector& prefix, const RationalVector& d) {
  const std::size_t n = region.rows.dim, k = prefix.size(), free = n - k;
  Rational fixed = 0;
  for (std::size_t j = 0; j < k; ++j) fixed += d[j] * prefix[j];
  RationalVector dfree(d.begin() + static_cast<long>(k), d.end());
  if (free == 0) return fixed;

  HPolyhedron reduced = HPolyhedron::box(free, box);
  for (const auto& h : region.rows.rows) {
    RationalVector a(h.a.begin() + static_cast<long>(k), h.a.end());
    Rational rhs = h.b;
    for (std::size_t j = 0; j < k; ++j) rhs -= h.a[j] * prefix[j];
    if (is_zero(a)) {
      if (sgn(rhs) < 0) return std::nullopt;
      continue;
    }
    reduced.rows.push_back({std::move(a), std::move(rhs)});
  }
  auto lp = optimize(reduced, dfree, Sense::Maximize);
  if (lp.status != LpStatus::Optimal) return std::nullopt;
  Rational best = *lp.value;
  for (const auto& f : region.quads) {
    auto [qff, lin, constant] = restrict_to(f, prefix);
    if (!ldlt(qff).pd) continue;
    auto centre = scale(*solve_linear(qff, scale(lin, -1)).solution, frac(1, 2));
    Rational level = dot(centre, qff.multiply(centre)) + dot(lin, centre) + constant;
    if (sgn(level) > 0) return std::nullopt;
    // max of dfree.y over (y - centre)'Q(y - centre) <= -level.
    Rational spread = -level * dot(dfree, *solve_linear(qff, dfree).solution);
    best = std::min(best, Rational(dot(dfree, centre) + sqrt_upper(spread, 24)));
  }
  return fixed + best;
}

long box_radius(const Rational& box) { return to_long(floor(box)); }

}  // namespace detail

void check_lattice_guards(std::size_t n, const Rational& box) {
  if (n == 0) throw DimensionError("dimension must be at least 1");
  if (n > kMaxLatticeDim)
    throw GuardError("dimension " + std::to_string(n) + " exceeds the lattice guard of " +
                     std::to_string(kMaxLatticeDim));
  if (box > kMaxLatticeBox || sgn(box) < 0)
    throw GuardError("box radius " + to_string(box) + " outside the lattice guard [0, " +
                     std::to_string(kMaxLatticeBox) + "]");
}

LatticePointSet enumerate_lattice(const HPolyhedron& p, const Rational& box) {
  check_lattice_guards(p.dim, box);
  LatticePointSet out{{}, box};
  detail::LatticeRegion region{p, {}, nullptr};
  detail::walk_lattice(region, detail::box_radius(box), [&](const LatticePoint& x, const RationalVector&) {
    out.points.push_back(x);
    return false;
  });
  return out;
}

}  // namespace rcip
