#include "rcip/convex.hpp"

#include <algorithm>
#include <atomic>
#include <iostream>

namespace rcip {

namespace {

std::atomic<std::uint64_t> g_interior_warnings{0};

constexpr int kMultiplierBudget = 64;

void warn_budget(const char* what) {
  ++g_interior_warnings;
  std::cerr << "warning: " << what
            << ": search budget exhausted, treating the intersection as having empty interior\n";
}

bool all_negative(const std::vector<QuadraticFn>& quads, const RationalVector& x) {
  return std::all_of(quads.begin(), quads.end(), [&](const QuadraticFn& q) { return sgn(q(x)) < 0; });
}

// x lies in the closed polyhedron with every quadratic negative; slide it
// toward the strict point p0 until all rows are strict as well. Convexity
// bounds each q along the segment by its chord, so a short step suffices.
std::optional<RationalVector> make_strict(const HPolyhedron& rows, const RationalVector& p0,
                                          const std::vector<QuadraticFn>& quads,
                                          const RationalVector& x) {
  if (rows.contains_strictly(x)) return x;
  Rational t = frac(1, 2);
  for (int k = 0; k < 256; ++k, t /= 2) {
    RationalVector y = add(x, scale(sub(p0, x), t));
    if (all_negative(quads, y) && rows.contains_strictly(y)) return y;
  }
  throw InternalError("failed to move a feasible point into the interior");
}

std::optional<Rational> hessian_ratio(const QuadraticFn& f, const QuadraticFn& g) {
  std::optional<Rational> ratio;
  for (std::size_t i = 0; i < f.dim(); ++i)
    for (std::size_t j = 0; j < f.dim(); ++j) {
      const Rational &a = f.q(i, j), &b = g.q(i, j);
      if (sgn(b) == 0) {
        if (sgn(a) != 0) return std::nullopt;
        continue;
      }
      Rational r = a / b;
      if (ratio && *ratio != r) return std::nullopt;
      ratio = r;
    }
  if (!ratio || sgn(*ratio) <= 0) return std::nullopt;
  return ratio;
}

QuadraticFn combine(const std::vector<QuadraticFn>& quads, const RationalVector& weights) {
  const std::size_t n = quads.front().dim();
  QuadraticFn out{RationalMatrix(n, n), zeros(n), 0};
  for (std::size_t k = 0; k < quads.size(); ++k) {
    if (sgn(weights[k]) == 0) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.q(i, j) += weights[k] * quads[k].q(i, j);
    out.b = add(out.b, scale(quads[k].b, weights[k]));
    out.c += weights[k] * quads[k].c;
  }
  return out;
}

// Outcome of minimizing a nonnegative combination of the quadratics.
enum class Probe { Found, Empty, Undecided };

struct ProbeResult {
  Probe kind = Probe::Undecided;
  RationalVector point;
};

ProbeResult probe(const HPolyhedron& rows, const std::vector<QuadraticFn>& quads,
                  const RationalVector& weights) {
  auto f = combine(quads, weights);
  auto r = minimize_quadratic(f.q, f.b, f.c, rows);
  if (r.status != LpStatus::Optimal) return {Probe::Empty, {}};
  if (all_negative(quads, *r.point)) return {Probe::Found, *r.point};
  // Any common point with every q < 0 would make the combination negative.
  if (sgn(*r.value) >= 0) return {Probe::Empty, {}};
  return {Probe::Undecided, *r.point};
}

std::optional<RationalVector> proportional_pair(const HPolyhedron& rows, const RationalVector& p0,
                                                const QuadraticFn& f, const QuadraticFn& g,
                                                const Rational& ratio) {
  // f - ratio * g is affine. Where it is >= 0, f < 0 forces g < 0; where it is
  // <= 0, ratio * g < 0 forces f < 0.
  RationalVector lin = sub(f.b, scale(g.b, ratio));
  Rational constant = f.c - ratio * g.c;
  const std::vector<QuadraticFn> both{f, g};
  for (int side = 0; side < 2; ++side) {
    HPolyhedron part = rows;
    const QuadraticFn& target = side == 0 ? f : g;
    if (side == 0) part.rows.push_back({scale(lin, -1), constant});  // f - r g >= 0
    else part.rows.push_back({lin, -constant});                      // f - r g <= 0
    auto r = minimize_quadratic(target.q, target.b, target.c, part);
    if (r.status == LpStatus::Optimal && sgn(*r.value) < 0)
      return make_strict(rows, p0, both, *r.point);
  }
  return std::nullopt;
}

}  // namespace

std::uint64_t interior_search_warnings() { return g_interior_warnings.load(); }

std::optional<RationalVector> find_common_interior_point(const HPolyhedron& rows,
                                                         const std::vector<QuadraticFn>& quads) {
  for (const auto& q : quads)
    if (q.dim() != rows.dim) throw DimensionError("quadratic dimension mismatch");
  auto p0 = interior_point(rows);
  if (!p0) return std::nullopt;
  if (quads.empty()) return p0;
  for (const auto& q : quads)
    if (!ldlt(q.q).pd) throw std::invalid_argument("interior search needs positive definite quadratics");
  if (all_negative(quads, *p0)) return p0;

  const std::size_t k = quads.size();
  if (k == 1) {
    auto r = minimize_quadratic(quads[0].q, quads[0].b, quads[0].c, rows);
    if (r.status != LpStatus::Optimal || sgn(*r.value) >= 0) return std::nullopt;
    return make_strict(rows, *p0, quads, *r.point);
  }
  if (k == 2) {
    if (auto ratio = hessian_ratio(quads[0], quads[1]))
      return proportional_pair(rows, *p0, quads[0], quads[1], *ratio);
  }

  // Each single quadratic first: handles nested sets and proves emptiness
  // when some member already misses the polyhedron's interior.
  for (std::size_t i = 0; i < k; ++i) {
    auto r = probe(rows, quads, unit_vector(k, i));
    if (r.kind == Probe::Found) return make_strict(rows, *p0, quads, r.point);
    if (r.kind == Probe::Empty) return std::nullopt;
  }

  if (k == 2) {
    // The minimum of the combination is concave in the weight, with slope
    // q1 - q2 at the minimizer; bisect toward the weight balancing them.
    Rational lo = 0, hi = 1;
    for (int step = 0; step < kMultiplierBudget; ++step) {
      Rational w = (lo + hi) / 2;
      auto r = probe(rows, quads, {w, 1 - w});
      if (r.kind == Probe::Found) return make_strict(rows, *p0, quads, r.point);
      if (r.kind == Probe::Empty) return std::nullopt;
      if (quads[0](r.point) > quads[1](r.point)) lo = w;
      else hi = w;
    }
    warn_budget("two-quadratic interior search");
    return std::nullopt;
  }

  // Three or more: shift weight toward the most violated quadratic.
  RationalVector weights(k, frac(1, static_cast<long>(k)));
  for (int step = 0; step < kMultiplierBudget; ++step) {
    auto r = probe(rows, quads, weights);
    if (r.kind == Probe::Found) return make_strict(rows, *p0, quads, r.point);
    if (r.kind == Probe::Empty) return std::nullopt;
    std::size_t worst = 0;
    for (std::size_t i = 1; i < k; ++i)
      if (quads[i](r.point) > quads[worst](r.point)) worst = i;
    weights[worst] *= 2;
    Rational total = 0;
    for (const auto& w : weights) total += w;
    for (auto& w : weights) w /= total;
  }
  warn_budget("multi-quadratic interior search");
  return std::nullopt;
}

namespace {

bool singular_quadratic_has_interior(const QuadraticFn& f) {
  auto s = solve_linear(f.q, scale(f.b, -1));
  if (!s.solution) return true;  // unbounded below along the kernel
  return sgn(f(scale(*s.solution, frac(1, 2)))) < 0;
}

bool parts_full_dimensional(const SetParts& parts) {
  bool all_definite = std::all_of(parts.quads.begin(), parts.quads.end(),
                                  [](const QuadraticFn& q) { return ldlt(q.q).pd; });
  if (all_definite) return find_common_interior_point(parts.rows, parts.quads).has_value();
  // Degenerate curved parts: try the polyhedral interior point and the
  // minimizers of each quadratic, then the midpoints between them.
  auto p0 = interior_point(parts.rows);
  if (!p0) return false;
  std::vector<RationalVector> candidates{*p0};
  for (const auto& q : parts.quads) {
    auto s = solve_linear(q.q, scale(q.b, -1));
    if (s.solution) candidates.push_back(scale(*s.solution, frac(1, 2)));
  }
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = i; j < candidates.size(); ++j) {
      RationalVector mid = scale(add(candidates[i], candidates[j]), frac(1, 2));
      Rational t = 1;
      for (int k = 0; k < kMultiplierBudget; ++k, t /= 2) {
        RationalVector y = add(*p0, scale(sub(mid, *p0), 1 - t));
        if (parts.rows.contains_strictly(y) && all_negative(parts.quads, y)) return true;
      }
    }
  warn_budget("degenerate quadratic interior search");
  return false;
}

}  // namespace

bool is_full_dimensional(const ConvexSet& c) {
  return std::visit(
      [&](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Ball>) {
          return true;
        } else if constexpr (std::is_same_v<T, ConvexQuadratic>) {
          if (ldlt(s.fn.q).pd) return sgn(center_of(s.fn).level) < 0;
          return singular_quadratic_has_interior(s.fn);
        } else if constexpr (std::is_same_v<T, HPolyhedron>) {
          return interior_point(s).has_value();
        } else if constexpr (std::is_same_v<T, Intersection>) {
          return parts_full_dimensional(parts_of(c));
        } else {
          for (const auto& m : s.members) {
            auto parts = parts_of(m);
            parts.rows = parts.rows.intersect(s.region);
            if (parts_full_dimensional(parts)) return true;
          }
          return false;
        }
      },
      c.shape);
}

}  // namespace rcip
