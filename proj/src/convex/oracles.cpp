#include "rcip/convex.hpp"

#include <algorithm>

namespace rcip {

namespace {

using Interval = std::pair<Rational, Rational>;

Halfspace scaled_to_unit_max(Halfspace h) {
  Rational m = 0;
  for (const auto& x : h.a) m = std::max(m, Rational(abs(x)));
  if (sgn(m) == 0) return h;
  return {scale(h.a, 1 / m), h.b / m};
}

std::optional<Halfspace> separate_ball(const Ball& ball, const RationalVector& x) {
  RationalVector a = sub(x, ball.center);
  Rational dist_sq = norm_sq(a);
  if (dist_sq <= ball.radius * ball.radius) return std::nullopt;
  // Need u >= r|a| (validity) and u < |a|^2 (the cut separates x).
  Rational target = ball.radius * ball.radius * dist_sq;
  for (unsigned bits = 20;; bits *= 2) {
    Rational u = sqrt_upper(target, bits);
    if (u < dist_sq) return scaled_to_unit_max({a, dot(a, ball.center) + u});
  }
}

std::optional<Halfspace> separate_quadratic(const QuadraticFn& f, const RationalVector& x) {
  Rational value = f(x);
  if (sgn(value) <= 0) return std::nullopt;
  RationalVector a = f.gradient(x);
  if (is_zero(a)) {
    // x minimizes f and f(x) > 0: the set is empty, any cut through x works.
    RationalVector e = unit_vector(x.size(), 0);
    return Halfspace{e, x[0] - 1};
  }
  return Halfspace{a, dot(a, x) - value};
}

std::optional<Interval> intersect(std::optional<Interval> a, const std::optional<Interval>& b) {
  if (!a || !b) return std::nullopt;
  Interval r{std::max(a->first, b->first), std::min(a->second, b->second)};
  if (r.first > r.second) return std::nullopt;
  return r;
}

std::optional<Interval> polyhedron_bounds(const HPolyhedron& p, const RationalVector& d,
                                          const Rational& fallback_radius) {
  auto lo = optimize(p, d, Sense::Minimize);
  if (lo.status == LpStatus::Infeasible) return std::nullopt;
  auto hi = optimize(p, d, Sense::Maximize);
  Rational reach = sqrt_upper(norm_sq(d)) * fallback_radius;
  return Interval{lo.status == LpStatus::Optimal ? *lo.value : Rational(-reach),
                  hi.status == LpStatus::Optimal ? *hi.value : reach};
}

std::optional<Interval> quadratic_bounds(const QuadraticFn& f, const RationalVector& d,
                                         const Rational& fallback_radius) {
  if (!ldlt(f.q).pd) {
    Rational reach = sqrt_upper(norm_sq(d)) * fallback_radius;
    return Interval{-reach, reach};
  }
  auto [center, level] = center_of(f);
  if (sgn(level) > 0) return std::nullopt;
  // max of d.x over (x - c)'Q(x - c) <= -level is d.c + sqrt(-level d'Q^-1 d).
  auto s = solve_linear(f.q, d);
  Rational half_width = sqrt_upper(-level * dot(d, *s.solution));
  Rational mid = dot(d, center);
  return Interval{mid - half_width, mid + half_width};
}

}  // namespace

std::optional<Halfspace> separate(const ConvexSet& c, const RationalVector& x) {
  if (c.dim() != x.size()) throw DimensionError("point dimension does not match set");
  return std::visit(
      [&](const auto& s) -> std::optional<Halfspace> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Ball>) {
          return separate_ball(s, x);
        } else if constexpr (std::is_same_v<T, ConvexQuadratic>) {
          return separate_quadratic(s.fn, x);
        } else if constexpr (std::is_same_v<T, HPolyhedron>) {
          for (const auto& h : s.rows)
            if (!h.contains(x)) return scaled_to_unit_max(h);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, Intersection>) {
          for (const auto& m : s.members)
            if (auto cut = separate(m, x)) return cut;
          return std::nullopt;
        } else {
          if (contains(c, x)) return std::nullopt;
          for (const auto& h : s.region.rows)
            if (!h.contains(x)) return h;
          // x is in the region but in no member: look for a member cut that
          // every other member (restricted to the region) also satisfies.
          for (const auto& m : s.members) {
            auto cut = separate(m, x);
            if (!cut) continue;
            bool valid = true;
            for (const auto& other : s.members) {
              auto clipped = make_intersection({make_polyhedron(s.region, {}, c.circumradius), other});
              auto b = interval_bounds(clipped, cut->a);
              if (b && b->second > cut->b) {
                valid = false;
                break;
              }
            }
            if (valid) return cut;
          }
          throw InternalError("no certified cut for a point outside a certified union");
        }
      },
      c.shape);
}

std::optional<std::pair<Rational, Rational>> interval_bounds(const ConvexSet& c,
                                                             const RationalVector& d) {
  if (c.dim() != d.size()) throw DimensionError("direction dimension does not match set");
  return std::visit(
      [&](const auto& s) -> std::optional<Interval> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Ball>) {
          Rational mid = dot(d, s.center);
          Rational half = s.radius * sqrt_upper(norm_sq(d));
          return Interval{mid - half, mid + half};
        } else if constexpr (std::is_same_v<T, ConvexQuadratic>) {
          return quadratic_bounds(s.fn, d, c.circumradius);
        } else if constexpr (std::is_same_v<T, HPolyhedron>) {
          return polyhedron_bounds(s, d, c.circumradius);
        } else if constexpr (std::is_same_v<T, Intersection>) {
          auto parts = parts_of(c);
          auto r = polyhedron_bounds(parts.rows, d, c.circumradius);
          for (const auto& q : parts.quads) r = intersect(r, quadratic_bounds(q, d, c.circumradius));
          return r;
        } else {
          std::optional<Interval> members;
          for (const auto& m : s.members) {
            auto b = interval_bounds(m, d);
            if (!b) continue;
            if (!members) members = b;
            else members = Interval{std::min(members->first, b->first), std::max(members->second, b->second)};
          }
          return intersect(polyhedron_bounds(s.region, d, c.circumradius), members);
        }
      },
      c.shape);
}

Rational gauge(const ConvexSet& c, const RationalVector& anchor, const RationalVector& x,
               const Rational& tol) {
  if (sgn(tol) <= 0) throw std::invalid_argument("gauge tolerance must be positive");
  if (!contains_interior(c, anchor)) throw std::invalid_argument("gauge anchor is not interior");
  RationalVector dir = sub(x, anchor);
  if (is_zero(dir)) return 0;
  auto inside = [&](const Rational& lambda) { return contains(c, add(anchor, scale(dir, 1 / lambda))); };

  Rational lo = 0, hi = 1;
  while (!inside(hi)) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / 2;
    if (inside(mid)) hi = mid;
    else lo = mid;
  }
  return (lo + hi) / 2;
}

}  // namespace rcip
