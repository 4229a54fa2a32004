#include "rcip/bhc.hpp"

namespace rcip {

namespace {

bool on_cover(const BoundaryCover& cover, const RationalVector& x) {
  for (const auto& h : cover.hyperplanes)
    if (h.side(x) == 0) return true;
  return false;
}

bool contains_hyperplane(const BoundaryCover& cover, const Hyperplane& h) {
  for (const auto& g : cover.hyperplanes)
    if (same_hyperplane(g, h, true)) return true;
  return false;
}

void check_ball_pair(const Ball& b1, const Ball& b2, const BoundaryCover& cover, std::size_t i,
                     std::size_t j, CoverReport& report) {
  ++report.exact_pairs;
  auto violation = [&](RationalVector p, std::string detail) {
    report.violations.push_back({i, j, std::move(p), std::move(detail)});
  };
  auto rel = classify_sphere_intersection(b1, b2);
  if (rel == SphereRelation::Disjoint || rel == SphereRelation::Contained) return;
  if (rel == SphereRelation::Equal) {
    violation(b1.center, "equal spheres cannot be covered by hyperplanes");
    return;
  }
  const Hyperplane radical = *radical_hyperplane(b1, b2);
  if (rel == SphereRelation::Tangent) {
    // The touch point c1 +- r1 (c2 - c1) / |c2 - c1| is rational because the
    // distance equals r1 + r2 or |r1 - r2|.
    RationalVector diff = sub(b2.center, b1.center);
    Rational dist = *exact_sqrt(norm_sq(diff));
    for (int s : {1, -1}) {
      RationalVector p = add(b1.center, scale(diff, s * b1.radius / dist));
      if (norm_sq(sub(p, b2.center)) != b2.radius * b2.radius) continue;
      if (!on_cover(cover, p)) violation(p, "tangent point is on no cover hyperplane");
      return;
    }
    throw InternalError("tangent balls without a rational touch point");
  }
  // Full circle: a sphere of dimension n - 2 spanning the radical hyperplane
  // centred at the projection m of c1, with squared radius t.
  const RationalVector& a = radical.a;
  RationalVector m = add(b1.center, scale(a, (radical.b - dot(a, b1.center)) / norm_sq(a)));
  Rational t = b1.radius * b1.radius - norm_sq(sub(m, b1.center));
  if (contains_hyperplane(cover, radical)) return;
  if (a.size() == 2) {
    // Two points m +- s u with u perpendicular to a; a rational line through
    // an irrational one of them is the radical line itself.
    RationalVector u{-a[1], a[0]};
    if (auto s = exact_sqrt(t / norm_sq(u))) {
      for (int sign : {1, -1}) {
        RationalVector p = add(m, scale(u, sign * *s));
        if (!on_cover(cover, p)) violation(p, "intersection point is on no cover hyperplane");
      }
      return;
    }
  }
  violation(m, "intersection sphere is not contained in a cover hyperplane");
}

bool polyhedron_in_cover(const ConvexSet& s, const BoundaryCover& cover) {
  const auto* p = std::get_if<HPolyhedron>(&s.shape);
  if (!p) return false;
  for (const auto& row : p->rows)
    if (!is_zero(row.a) && !contains_hyperplane(cover, {row.a, row.b})) return false;
  return true;
}

const Rational kBisection = Rational(1) / (Integer(1) << 30);
const Rational kDistance = Rational(1) / (Integer(1) << 16);

// Point on the boundary of `c` along the ray from `anchor` through anchor + v.
RationalVector boundary_point(const ConvexSet& c, const RationalVector& anchor, const RationalVector& v) {
  Rational g = gauge(c, anchor, add(anchor, v), kBisection);
  return add(anchor, scale(v, 1 / g));
}

// Direction on the perimeter of the square [-1,1]^2, parameter s in [0, 8).
RationalVector square_direction(const Rational& s) {
  if (s < 2) return {1, s - 1};
  if (s < 4) return {3 - s, 1};
  if (s < 6) return {-1, 5 - s};
  return {s - 7, -1};
}

bool near_cover(const BoundaryCover& cover, const RationalVector& x) {
  for (const auto& h : cover.hyperplanes) {
    Rational scale_ = 0;
    for (const auto& v : h.a) scale_ = std::max(scale_, Rational(abs(v)));
    if (abs(dot(h.a, x) - h.b) <= kDistance * scale_) return true;
  }
  return false;
}

// Walks the boundary of ci and bisects every change of membership in cj.
void sample_planar_pair(const ConvexSet& ci, const ConvexSet& cj, const BoundaryCover& cover,
                        std::size_t i, std::size_t j, std::size_t samples, CoverReport& report) {
  auto parts = parts_of(ci);
  auto anchor = find_common_interior_point(parts.rows, parts.quads);
  if (!anchor) {
    ++report.unverified_pairs;
    return;
  }
  ++report.sampled_pairs;
  if (samples < 8) samples = 8;
  const Rational step = Rational(8) / static_cast<long>(samples);
  auto inside = [&](const Rational& s) { return contains(cj, boundary_point(ci, *anchor, square_direction(s))); };
  bool prev = inside(0);
  for (std::size_t k = 1; k <= samples; ++k) {
    Rational s = k == samples ? Rational(0) : step * static_cast<long>(k);
    bool cur = inside(s);
    if (cur != prev) {
      Rational lo = step * static_cast<long>(k - 1), hi = k == samples ? Rational(8) : s;
      while (hi - lo > kBisection) {
        Rational mid = (lo + hi) / 2;
        if (inside(mid) == prev) lo = mid;
        else hi = mid;
      }
      RationalVector p = boundary_point(ci, *anchor, square_direction(lo == 8 ? Rational(0) : lo));
      if (!near_cover(cover, p))
        report.violations.push_back({i, j, p, "sampled boundary intersection is off every cover hyperplane"});
    }
    prev = cur;
  }
}

}  // namespace

CoverReport verify_cover(const std::vector<ConvexSet>& sets, const BoundaryCover& cover,
                         std::size_t samples) {
  CoverReport report;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      ++report.pairs_checked;
      const auto &ci = sets[i], &cj = sets[j];
      if (ci.dim() != cj.dim()) throw DimensionError("cover sets differ in dimension");
      if (ci.is_ball() && cj.is_ball()) {
        check_ball_pair(ci.ball(), cj.ball(), cover, i, j, report);
      } else if (polyhedron_in_cover(ci, cover) || polyhedron_in_cover(cj, cover)) {
        ++report.exact_pairs;
      } else if (ci.dim() == 2 && !std::holds_alternative<UnionConvex>(ci.shape)) {
        sample_planar_pair(ci, cj, cover, i, j, samples, report);
      } else {
        ++report.unverified_pairs;
      }
    }
  return report;
}

}  // namespace rcip
