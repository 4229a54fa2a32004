#pragma once

#include "rcip/core.hpp"

namespace rcip {

/// The closed half-space { x : a.x <= b }.
struct Halfspace {
  RationalVector a;
  Rational b;

  bool contains(const RationalVector& x) const { return dot(a, x) <= b; }
  bool contains_strictly(const RationalVector& x) const { return dot(a, x) < b; }
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

/// The hyperplane { x : a.x = b } with a != 0.
struct Hyperplane {
  RationalVector a;
  Rational b;

  /// Sign of a.x - b.
  int side(const RationalVector& x) const { return sgn(dot(a, x) - b); }
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/// Polyhedron { x : A x <= b } stored as rows.
struct HPolyhedron {
  std::size_t dim = 0;
  std::vector<Halfspace> rows;

  HPolyhedron() = default;
  explicit HPolyhedron(std::size_t n) : dim(n) {}
  HPolyhedron(std::size_t n, std::vector<Halfspace> r);
  HPolyhedron(const RationalMatrix& a, const RationalVector& b);

  /// The box [-radius, radius]^n.
  static HPolyhedron box(std::size_t n, const Rational& radius);

  bool contains(const RationalVector& x) const;
  /// Every row strict. Equals interior membership when the polyhedron is
  /// full-dimensional.
  bool contains_strictly(const RationalVector& x) const;

  void add(Halfspace h);
  HPolyhedron intersect(const HPolyhedron& other) const;
};

/// Proportional up to a positive (same orientation) or any nonzero scale.
bool same_hyperplane(const Hyperplane& h, const Hyperplane& g, bool allow_flip = true);

/// Rescales so the coefficient vector is integral with gcd 1 and the first
/// nonzero coefficient positive (orientation flipped if needed).
Hyperplane normalize(const Hyperplane& h);

}  // namespace rcip
