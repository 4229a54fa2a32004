#include "rcip/separation.hpp"

#include "rcip/integer_hull.hpp"

#include <algorithm>

namespace rcip {

namespace {

Rational max_abs(const RationalVector& v) {
  Rational m = 0;
  for (const auto& x : v) m = std::max(m, Rational(abs(x)));
  return m;
}

// Master LP over (a, b, u): a.x <= b on `below`, a.y >= b + 1 on `above`,
// |a_j| <= u_j <= bound, and the normalisation row for `master`. Minimises
// sum u.
std::optional<std::pair<RationalVector, Rational>> solve_master(
    std::size_t n, std::size_t master, const Rational& bound,
    const std::vector<LatticePoint>& below, const std::vector<LatticePoint>& above) {
  const std::size_t vars = 2 * n + 1, b_at = n, u_at = n + 1;
  LinearProgram lp(vars);
  for (const auto& x : below) {
    RationalVector row(vars);
    for (std::size_t j = 0; j < n; ++j) row[j] = static_cast<long>(x[j]);
    row[b_at] = -1;
    lp.add(std::move(row), Relation::LessEqual, 0);
  }
  for (const auto& y : above) {
    RationalVector row(vars);
    for (std::size_t j = 0; j < n; ++j) row[j] = static_cast<long>(y[j]);
    row[b_at] = -1;
    lp.add(std::move(row), Relation::GreaterEqual, 1);
  }
  for (std::size_t j = 0; j < n; ++j) {
    RationalVector hi(vars), lo(vars), cap(vars);
    hi[j] = 1;
    hi[u_at + j] = -1;
    lo[j] = -1;
    lo[u_at + j] = -1;
    cap[u_at + j] = 1;
    lp.add(std::move(hi), Relation::LessEqual, 0);
    lp.add(std::move(lo), Relation::LessEqual, 0);
    lp.add(std::move(cap), Relation::LessEqual, bound);
  }
  const std::size_t axis = master % n;
  RationalVector norm(vars);
  norm[axis] = 1;
  if (master < n) lp.add(std::move(norm), Relation::GreaterEqual, 1);
  else lp.add(std::move(norm), Relation::LessEqual, -1);
  RationalVector objective(vars);
  for (std::size_t j = 0; j < n; ++j) objective[u_at + j] = 1;
  lp.minimize(std::move(objective));
  auto r = solve(lp);
  if (r.status != LpStatus::Optimal) return std::nullopt;
  RationalVector a(r.point->begin(), r.point->begin() + static_cast<long>(n));
  return std::make_pair(std::move(a), (*r.point)[b_at]);
}

void add_unique(std::vector<LatticePoint>& pool, const LatticePoint& p) {
  if (std::find(pool.begin(), pool.end(), p) == pool.end()) pool.push_back(p);
}

}  // namespace

SeparationResult separate_integer_hulls(const ConvexSet& c1, const ConvexSet& c2, const Rational& box) {
  const std::size_t n = c1.dim();
  if (c2.dim() != n) throw DimensionError("sets differ in dimension");
  check_lattice_guards(n, box);
  const long radius = floor(box).get_si();

  // Every vertex of the master has coordinates bounded by a Cramer
  // determinant of the integer rows, at most ((n + 1)(R + 1))^(n + 1).
  Integer bound = 1;
  for (std::size_t k = 0; k <= n; ++k) bound *= Integer(static_cast<long>(n + 1) * (radius + 1));

  Integer cap = 1;
  for (std::size_t k = 0; k < n; ++k) cap *= 2 * radius + 1;
  cap += 1;

  SeparationResult out;
  std::vector<LatticePoint> below, above;
  for (std::size_t master = 0; master < 2 * n; ++master) {
    while (true) {
      auto sol = solve_master(n, master, Rational(bound), below, above);
      if (!sol) break;
      if (Integer(static_cast<long>(++out.iterations)) > cap)
        throw InternalError("integer hull separation exceeded its iteration cap");
      const auto& [a, b] = *sol;
      bool stable = true;
      if (auto top = convex_int_optimize(c1, a, Sense::Maximize, box); top && top->value > b) {
        add_unique(below, top->point);
        stable = false;
      }
      if (auto low = convex_int_optimize(c2, a, Sense::Minimize, box); low && low->value < b + 1) {
        add_unique(above, low->point);
        stable = false;
      }
      if (stable) {
        out.status = SeparationResult::Status::Separated;
        out.a = a;
        out.b = b + frac(1, 2);
        return out;
      }
    }
  }
  out.status = SeparationResult::Status::Intersecting;
  for (const auto& x : lattice_points(c1, box))
    if (contains(c2, to_rational(x))) {
      out.witness = x;
      break;
    }
  out.no_integer_witness = !out.witness;
  return out;
}

namespace {

std::optional<Hyperplane> separate_polyhedra(const HPolyhedron& p1, const HPolyhedron& p2) {
  // y >= 0 with A1'y1 + A2'y2 = 0, sum y = 1, minimising b1.y1 + b2.y2.
  const std::size_t n = p1.dim, m1 = p1.rows.size(), m2 = p2.rows.size(), m = m1 + m2;
  if (m == 0) return std::nullopt;
  auto row_of = [&](std::size_t k) -> const Halfspace& { return k < m1 ? p1.rows[k] : p2.rows[k - m1]; };
  LinearProgram lp(m);
  lp.nonnegative.assign(m, true);
  for (std::size_t j = 0; j < n; ++j) {
    RationalVector eq(m);
    for (std::size_t k = 0; k < m; ++k) eq[k] = row_of(k).a[j];
    lp.add(std::move(eq), Relation::Equal, 0);
  }
  lp.add(RationalVector(m, Rational(1)), Relation::Equal, 1);
  RationalVector cost(m);
  for (std::size_t k = 0; k < m; ++k) cost[k] = row_of(k).b;
  lp.minimize(cost);
  auto r = solve(lp);
  if (r.status != LpStatus::Optimal || sgn(*r.value) > 0) return std::nullopt;
  RationalVector a(n);
  Rational top = 0, bottom = 0;  // C1 <= top, C2 >= -bottom
  for (std::size_t k = 0; k < m1; ++k) {
    a = add(a, scale(p1.rows[k].a, (*r.point)[k]));
    top += p1.rows[k].b * (*r.point)[k];
  }
  for (std::size_t k = m1; k < m; ++k) bottom += p2.rows[k - m1].b * (*r.point)[k];
  if (is_zero(a)) return std::nullopt;
  Rational s = max_abs(a);
  return Hyperplane{scale(a, 1 / s), (top - bottom) / (2 * s)};
}

std::optional<Hyperplane> separate_balls(const Ball& b1, const Ball& b2) {
  RationalVector a = sub(b2.center, b1.center);
  Rational d2 = norm_sq(a), reach = b1.radius + b2.radius;
  if (d2 < reach * reach) return std::nullopt;
  Rational b = dot(a, b1.center) + b1.radius * d2 / reach;
  Rational s = max_abs(a);
  return Hyperplane{scale(a, 1 / s), b / s};
}

}  // namespace

std::optional<Hyperplane> continuous_weak_separation(const ConvexSet& c1, const ConvexSet& c2) {
  if (c1.dim() != c2.dim()) throw DimensionError("sets differ in dimension");
  if (c1.is_polyhedron() && c2.is_polyhedron()) return separate_polyhedra(c1.polyhedron(), c2.polyhedron());
  if (c1.is_ball() && c2.is_ball()) return separate_balls(c1.ball(), c2.ball());
  return std::nullopt;
}

}  // namespace rcip
