#include "rcip/bhc.hpp"

#include <algorithm>
#include <stdexcept>

namespace rcip {

std::optional<Hyperplane> radical_hyperplane(const Ball& b1, const Ball& b2) {
  if (b1.center.size() != b2.center.size()) throw DimensionError("balls differ in dimension");
  if (b1.center == b2.center) return std::nullopt;
  return Hyperplane{scale(sub(b1.center, b2.center), 2),
                    norm_sq(b1.center) - norm_sq(b2.center) + b2.radius * b2.radius -
                        b1.radius * b1.radius};
}

std::string to_string(SphereRelation r) {
  switch (r) {
    case SphereRelation::Disjoint: return "disjoint";
    case SphereRelation::Tangent: return "tangent";
    case SphereRelation::FullCircle: return "full_circle";
    case SphereRelation::Contained: return "contained";
    case SphereRelation::Equal: return "equal";
  }
  return "unknown";
}

SphereRelation classify_sphere_intersection(const Ball& b1, const Ball& b2) {
  if (b1.center.size() != b2.center.size()) throw DimensionError("balls differ in dimension");
  Rational d2 = norm_sq(sub(b1.center, b2.center));
  if (sgn(d2) == 0 && b1.radius == b2.radius) return SphereRelation::Equal;
  Rational outer = b1.radius + b2.radius, inner = b1.radius - b2.radius;
  outer *= outer;
  inner *= inner;
  if (d2 > outer) return SphereRelation::Disjoint;
  if (d2 == outer) return SphereRelation::Tangent;
  if (d2 < inner || sgn(d2) == 0) return SphereRelation::Contained;
  if (d2 == inner) return SphereRelation::Tangent;
  return SphereRelation::FullCircle;
}

namespace {

std::size_t add_hyperplane(std::vector<Hyperplane>& list, const Hyperplane& h) {
  for (std::size_t k = 0; k < list.size(); ++k)
    if (same_hyperplane(list[k], h, true)) return k;
  list.push_back(h);
  return list.size() - 1;
}

Hyperplane zero_set(const AffineFunction& h) {
  if (is_zero(h.a)) throw std::invalid_argument("affine factor is constant");
  return {h.a, -h.c};
}

}  // namespace

BoundaryCover cover_for_balls(const std::vector<Ball>& balls) {
  BoundaryCover cover;
  for (std::size_t i = 0; i < balls.size(); ++i)
    for (std::size_t j = i + 1; j < balls.size(); ++j) {
      auto rel = classify_sphere_intersection(balls[i], balls[j]);
      if (rel == SphereRelation::Equal)
        throw std::invalid_argument("balls " + std::to_string(i) + " and " + std::to_string(j) +
                                    " are equal; their common boundary has no hyperplane cover");
      if (rel != SphereRelation::FullCircle && rel != SphereRelation::Tangent) continue;
      std::size_t k = add_hyperplane(cover.hyperplanes, *radical_hyperplane(balls[i], balls[j]));
      cover.pairs.push_back({i, j, {k}, rel == SphereRelation::FullCircle});
    }
  return cover;
}

FormExpansion quadratic_from_form(const QuadraticBhcForm& form) {
  if (sgn(form.alpha) == 0) throw std::invalid_argument("form needs alpha != 0");
  const std::size_t n = form.h1.a.size();
  if (form.h2 && form.h2->a.size() != n) throw DimensionError("affine factors differ in dimension");
  FormExpansion out;
  out.cover.push_back(zero_set(form.h1));
  QuadraticFn& f = out.fn;
  f.q = RationalMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) f.q(i, i) = form.alpha;
  if (form.h2) {
    out.cover.push_back(zero_set(*form.h2));
    const auto& a1 = form.h1.a;
    const auto& a2 = form.h2->a;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) f.q(i, j) += (a1[i] * a2[j] + a2[i] * a1[j]) / 2;
    f.b = add(scale(a1, form.h2->c), scale(a2, form.h1.c));
    f.c = -form.alpha + form.h1.c * form.h2->c;
  } else {
    f.b = form.h1.a;
    f.c = -form.alpha + form.h1.c;
  }
  auto d = ldlt(f.q);
  if (!d.psd) throw std::invalid_argument("form expands to a non-convex quadratic");
  if (!d.pd) throw std::invalid_argument("form expands to an unbounded set");
  return out;
}

bool convexity_condition(const Rational& alpha, const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw DimensionError("vectors differ in dimension");
  // In one dimension the Hessian is the scalar 2 alpha + 2ab and the
  // rank-two argument behind the inequality does not apply.
  if (a.size() < 2) throw DimensionError("convexity condition needs dimension at least 2");
  if (is_zero(a) || is_zero(b)) throw std::invalid_argument("convexity condition needs nonzero vectors");
  Rational t = dot(a, b) + 2 * alpha;
  return sgn(t) >= 0 && t * t >= norm_sq(a) * norm_sq(b);
}

std::vector<Hyperplane> general_structure_cover(const std::vector<AffineFunction>& factors) {
  std::vector<Hyperplane> out;
  for (const auto& h : factors) out.push_back(zero_set(h));
  return out;
}

std::vector<Hyperplane> facet_hyperplanes(const std::vector<ConvexSet>& sets) {
  std::vector<Hyperplane> out;
  for (const auto& s : sets)
    for (const auto& row : parts_of(s).rows.rows)
      if (!is_zero(row.a)) add_hyperplane(out, {row.a, row.b});
  return out;
}

namespace {

// Positive lambda with p.q == lambda * r.q, if any.
std::optional<Rational> hessian_ratio(const QuadraticFn& p, const QuadraticFn& r) {
  const std::size_t n = p.dim();
  std::optional<Rational> lambda;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational &x = p.q(i, j), &y = r.q(i, j);
      if (sgn(y) == 0) {
        if (sgn(x) != 0) return std::nullopt;
        continue;
      }
      Rational l = x / y;
      if (lambda && *lambda != l) return std::nullopt;
      lambda = l;
    }
  if (!lambda || sgn(*lambda) <= 0) return std::nullopt;
  return lambda;
}

bool is_unit_sphere(const QuadraticFn& f) {
  const Rational& mu = f.q(0, 0);
  if (sgn(mu) <= 0 || !is_zero(f.b) || f.c != -mu) return false;
  for (std::size_t i = 0; i < f.dim(); ++i)
    for (std::size_t j = 0; j < f.dim(); ++j)
      if (f.q(i, j) != (i == j ? mu : Rational(0))) return false;
  return true;
}

struct CurvedCover {
  enum Kind { Disjoint, Covered, Failed } kind;
  std::vector<Hyperplane> hyperplanes;
  bool ideal = false;
  std::string failure;
};

const QuadraticBhcForm* form_of(const ConvexSet& s) {
  const auto* q = std::get_if<ConvexQuadratic>(&s.shape);
  return q && q->form ? &*q->form : nullptr;
}

// Cover of {p = 0} ∩ {r = 0}. `p_form` / `r_form` are the BHC forms of the
// owning sets when the quadratic is that set's only constraint.
CurvedCover cover_curved(const QuadraticFn& p, const QuadraticFn& r, const QuadraticBhcForm* p_form,
                         const QuadraticBhcForm* r_form) {
  if (auto lambda = hessian_ratio(p, r)) {
    // p - lambda r is affine and vanishes on both surfaces.
    RationalVector a = sub(p.b, scale(r.b, *lambda));
    Rational c = p.c - *lambda * r.c;
    if (is_zero(a)) {
      if (sgn(c) != 0) return {CurvedCover::Disjoint, {}, false, {}};
      return {CurvedCover::Failed, {}, false, "the two sets are equal"};
    }
    Hyperplane h{a, -c};
    if (!ldlt(p.q).pd) return {CurvedCover::Covered, {h}, false, {}};
    HPolyhedron on(p.dim());
    on.add({a, -c});
    on.add({scale(a, -1), c});
    auto low = minimize_quadratic(p.q, p.b, p.c, on);
    int s = sgn(*low.value);
    if (s > 0) return {CurvedCover::Disjoint, {}, false, {}};
    return {CurvedCover::Covered, {h}, s < 0, {}};
  }
  if (p_form && is_unit_sphere(r)) return {CurvedCover::Covered, quadratic_from_form(*p_form).cover, false, {}};
  if (r_form && is_unit_sphere(p)) return {CurvedCover::Covered, quadratic_from_form(*r_form).cover, false, {}};
  return {CurvedCover::Failed, {}, false, "no hyperplane cover is known for their curved boundaries"};
}

std::string label(const std::vector<ConvexSet>& sets, std::size_t i) {
  return sets[i].name.empty() ? "set " + std::to_string(i) : sets[i].name;
}

}  // namespace

std::optional<BoundaryCover> construct_cover(const std::vector<ConvexSet>& sets, std::string* failure) {
  BoundaryCover cover;
  cover.hyperplanes = facet_hyperplanes(sets);
  std::vector<SetParts> parts;
  for (const auto& s : sets) parts.push_back(parts_of(s));

  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      PairCover pair{i, j, {}, false};
      for (std::size_t side : {i, j})
        for (const auto& row : parts[side].rows.rows)
          if (!is_zero(row.a)) pair.hyperplanes.push_back(add_hyperplane(cover.hyperplanes, {row.a, row.b}));
      const auto* fi = parts[i].quads.size() == 1 ? form_of(sets[i]) : nullptr;
      const auto* fj = parts[j].quads.size() == 1 ? form_of(sets[j]) : nullptr;
      bool all_ideal = pair.hyperplanes.empty();
      bool curved_meet = false;
      for (const auto& p : parts[i].quads)
        for (const auto& r : parts[j].quads) {
          auto cc = cover_curved(p, r, fi, fj);
          if (cc.kind == CurvedCover::Failed) {
            if (failure) *failure = label(sets, i) + " and " + label(sets, j) + ": " + cc.failure;
            return std::nullopt;
          }
          if (cc.kind == CurvedCover::Disjoint) continue;
          curved_meet = true;
          all_ideal = all_ideal && cc.ideal;
          for (const auto& h : cc.hyperplanes) pair.hyperplanes.push_back(add_hyperplane(cover.hyperplanes, h));
        }
      if (pair.hyperplanes.empty()) continue;
      std::sort(pair.hyperplanes.begin(), pair.hyperplanes.end());
      pair.hyperplanes.erase(std::unique(pair.hyperplanes.begin(), pair.hyperplanes.end()),
                             pair.hyperplanes.end());
      pair.ideal = curved_meet && all_ideal;
      cover.pairs.push_back(std::move(pair));
    }
  return cover;
}

}  // namespace rcip
