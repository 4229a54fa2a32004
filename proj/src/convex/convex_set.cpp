#include "rcip/convex.hpp"

#include <algorithm>

namespace rcip {

Rational QuadraticFn::operator()(const RationalVector& x) const {
  return dot(x, q.multiply(x)) + dot(b, x) + c;
}

RationalVector QuadraticFn::gradient(const RationalVector& x) const {
  return add(scale(q.multiply(x), 2), b);
}

QuadraticCenter center_of(const QuadraticFn& f) {
  auto s = solve_linear(f.q, scale(f.b, -1));
  if (!s.solution || s.rank != f.dim()) throw DimensionError("quadratic has singular Hessian");
  RationalVector x = scale(*s.solution, frac(1, 2));
  Rational level = f(x);
  return {std::move(x), std::move(level)};
}

std::size_t ConvexSet::dim() const {
  return std::visit(
      [](const auto& s) -> std::size_t {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Ball>) return s.center.size();
        else if constexpr (std::is_same_v<T, ConvexQuadratic>) return s.fn.dim();
        else if constexpr (std::is_same_v<T, HPolyhedron>) return s.dim;
        else if constexpr (std::is_same_v<T, Intersection>) return s.members.front().dim();
        else return s.region.dim;
      },
      shape);
}

QuadraticFn quadratic_of(const Ball& b) {
  const std::size_t n = b.center.size();
  return {RationalMatrix::identity(n), scale(b.center, -2),
          norm_sq(b.center) - b.radius * b.radius};
}

namespace {

// sqrt(sum of squared coordinate magnitudes) from LP bounds, or none when
// the polyhedron is unbounded.
std::optional<Rational> polyhedron_radius(const HPolyhedron& p) {
  Rational total = 0;
  for (std::size_t i = 0; i < p.dim; ++i) {
    Rational extent = 0;
    for (Sense sense : {Sense::Maximize, Sense::Minimize}) {
      auto r = optimize(p, unit_vector(p.dim, i), sense);
      if (r.status == LpStatus::Infeasible) return Rational(0);
      if (r.status == LpStatus::Unbounded) return std::nullopt;
      extent = std::max(extent, Rational(abs(*r.value)));
    }
    total += extent * extent;
  }
  return sqrt_upper(total);
}

Rational trace_of_inverse(const RationalMatrix& q) {
  Rational t = 0;
  for (std::size_t i = 0; i < q.rows(); ++i) {
    auto s = solve_linear(q, unit_vector(q.rows(), i));
    t += (*s.solution)[i];
  }
  return t;
}

bool strict_rows(const HPolyhedron& p, const RationalVector& x) {
  for (const auto& h : p.rows) {
    if (is_zero(h.a)) {
      if (sgn(h.b) < 0) return false;
      continue;
    }
    if (!h.contains_strictly(x)) return false;
  }
  return true;
}

void require_dim(const ConvexSet& c, const RationalVector& x) {
  if (c.dim() != x.size()) throw DimensionError("point dimension does not match set");
}

}  // namespace

ConvexSet make_ball(RationalVector center, Rational radius, std::string name) {
  if (sgn(radius) <= 0) throw std::invalid_argument("ball radius must be positive");
  if (center.empty()) throw DimensionError("ball in dimension 0");
  Rational r = sqrt_upper(norm_sq(center)) + radius;
  return ConvexSet{Ball{std::move(center), radius}, std::move(name), r, radius};
}

ConvexSet make_quadratic(QuadraticFn fn, std::string name, std::optional<Rational> radius_bound) {
  const std::size_t n = fn.dim();
  if (n == 0 || fn.q.rows() != n || fn.q.cols() != n)
    throw DimensionError("quadratic: Q and b disagree in size");
  if (!fn.q.is_symmetric()) throw std::invalid_argument("quadratic: Q not symmetric");
  auto definiteness = ldlt(fn.q);
  if (!definiteness.psd) throw std::invalid_argument("quadratic: Q is not positive semidefinite");
  Rational radius;
  if (definiteness.pd) {
    auto [center, level] = center_of(fn);
    if (sgn(level) > 0) radius = 0;
    else radius = sqrt_upper(norm_sq(center)) + sqrt_upper(-level * trace_of_inverse(fn.q));
    if (radius_bound) radius = std::min(radius, *radius_bound);
  } else if (radius_bound) {
    radius = *radius_bound;
  } else {
    throw std::invalid_argument("quadratic with singular Q needs an explicit radius bound");
  }
  return ConvexSet{ConvexQuadratic{std::move(fn), std::nullopt}, std::move(name), radius,
                   std::nullopt};
}

ConvexSet make_polyhedron(HPolyhedron p, std::string name, std::optional<Rational> radius_bound) {
  if (p.dim == 0) throw DimensionError("polyhedron in dimension 0");
  auto radius = polyhedron_radius(p);
  if (!radius && !radius_bound)
    throw std::invalid_argument("unbounded polyhedron needs an explicit radius bound");
  Rational r = radius ? *radius : *radius_bound;
  if (radius && radius_bound) r = std::min(r, *radius_bound);
  return ConvexSet{std::move(p), std::move(name), r, std::nullopt};
}

ConvexSet make_intersection(std::vector<ConvexSet> members, std::string name) {
  if (members.empty()) throw std::invalid_argument("intersection of no sets");
  Rational r = members.front().circumradius;
  for (const auto& m : members) {
    if (m.dim() != members.front().dim()) throw DimensionError("intersection members differ in dimension");
    if (std::holds_alternative<UnionConvex>(m.shape))
      throw std::invalid_argument("intersection cannot contain a certified union");
    r = std::min(r, m.circumradius);
  }
  return ConvexSet{Intersection{std::move(members)}, std::move(name), r, std::nullopt};
}

ConvexSet make_union(HPolyhedron region, std::vector<ConvexSet> members, bool open_members,
                     std::string certificate) {
  Rational r = 0;
  for (const auto& m : members) {
    if (m.dim() != region.dim) throw DimensionError("union member dimension mismatch");
    r = std::max(r, m.circumradius);
  }
  if (auto pr = polyhedron_radius(region)) r = std::min(r, *pr);
  return ConvexSet{UnionConvex{std::move(region), std::move(members), open_members,
                               std::move(certificate)},
                   {}, r, std::nullopt};
}

SetParts parts_of(const ConvexSet& c) {
  SetParts out{HPolyhedron(c.dim()), {}};
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Ball>) out.quads.push_back(quadratic_of(s));
        else if constexpr (std::is_same_v<T, ConvexQuadratic>) out.quads.push_back(s.fn);
        else if constexpr (std::is_same_v<T, HPolyhedron>) out.rows = s;
        else if constexpr (std::is_same_v<T, Intersection>) {
          for (const auto& m : s.members) {
            auto p = parts_of(m);
            out.rows = out.rows.intersect(p.rows);
            out.quads.insert(out.quads.end(), p.quads.begin(), p.quads.end());
          }
        } else {
          throw std::invalid_argument("a certified union has no flat description");
        }
      },
      c.shape);
  return out;
}

bool contains(const ConvexSet& c, const RationalVector& x) {
  require_dim(c, x);
  return std::visit(
      [&](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Ball>)
          return norm_sq(sub(x, s.center)) <= s.radius * s.radius;
        else if constexpr (std::is_same_v<T, ConvexQuadratic>) return sgn(s.fn(x)) <= 0;
        else if constexpr (std::is_same_v<T, HPolyhedron>) return s.contains(x);
        else if constexpr (std::is_same_v<T, Intersection>)
          return std::all_of(s.members.begin(), s.members.end(),
                             [&](const ConvexSet& m) { return contains(m, x); });
        else {
          if (!s.region.contains(x)) return false;
          return std::any_of(s.members.begin(), s.members.end(), [&](const ConvexSet& m) {
            return s.open_members ? contains_interior(m, x) : contains(m, x);
          });
        }
      },
      c.shape);
}

bool contains_interior(const ConvexSet& c, const RationalVector& x) {
  require_dim(c, x);
  return std::visit(
      [&](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Ball>)
          return norm_sq(sub(x, s.center)) < s.radius * s.radius;
        else if constexpr (std::is_same_v<T, ConvexQuadratic>) return sgn(s.fn(x)) < 0;
        else if constexpr (std::is_same_v<T, HPolyhedron>) return strict_rows(s, x);
        else if constexpr (std::is_same_v<T, Intersection>)
          return std::all_of(s.members.begin(), s.members.end(),
                             [&](const ConvexSet& m) { return contains_interior(m, x); });
        else
          return strict_rows(s.region, x) &&
                 std::any_of(s.members.begin(), s.members.end(),
                             [&](const ConvexSet& m) { return contains_interior(m, x); });
      },
      c.shape);
}

}  // namespace rcip
