// Independent reference computations and random generators shared by the
// unit and acceptance tests.
#pragma once

#include "rcip/arrangement.hpp"
#include "rcip/convex.hpp"
#include "rcip/instance.hpp"

#include <functional>
#include <random>

namespace rcip::testing {

Rational random_rational(std::mt19937& rng, long range, long den);
RationalVector random_vector(std::mt19937& rng, std::size_t n, long range, long den);

/// Box [-box, box]^n cut by one to four random rows.
HPolyhedron random_polytope(std::mt19937& rng, std::size_t n, long box);
ConvexSet random_ball(std::mt19937& rng, std::size_t n, long spread);
/// Ellipsoid with Q = L L' + I/4 for a random integer L, centred within
/// `spread`, containing its centre.
ConvexSet random_ellipsoid(std::mt19937& rng, std::size_t n, long spread);
/// Ball, ellipsoid or polytope, cycling on `kind`.
ConvexSet random_convex_set(std::mt19937& rng, std::size_t n, long spread, int kind);

/// Axis box of half-width 1/2..2 around a random centre, cut by up to two
/// random rows through the centre's neighbourhood.
HPolyhedron random_local_polytope(std::mt19937& rng, std::size_t n, long spread);

/// Open-semantics instance on [-box, box]^n: no domain, a random polytope or
/// a small local polytope,
/// and `removed` balls or local polytopes sized to the box.
Instance random_instance(std::mt19937& rng, std::size_t n, long box, std::size_t removed);

/// Every integer point of [-radius, radius]^n in lexicographic order.
std::vector<LatticePoint> box_points(std::size_t n, long radius);

/// Every integer point of the box satisfying `keep`.
std::vector<LatticePoint> scan_box(std::size_t n, long radius,
                                   const std::function<bool(const RationalVector&)>& keep);

/// Sign vectors realised by a full-dimensional cell, by testing all 2^d.
std::vector<std::vector<int>> brute_force_sign_vectors(const Arrangement& arr);

/// sum_{k<=n} C(d, k)
long cell_count_bound(long d, long n);

/// Point p is in conv(others), decided by a direct LP over convex weights.
bool in_convex_hull(const std::vector<RationalVector>& others, const RationalVector& p);

}  // namespace rcip::testing
