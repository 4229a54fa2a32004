#include <doctest.h>

#include "oracles.hpp"
#include "rcip/separation.hpp"

using namespace rcip;
using namespace rcip::testing;

namespace {

ConvexSet box_set(const Rational& x0, const Rational& x1, const Rational& y0, const Rational& y1) {
  return make_polyhedron(
      HPolyhedron(RationalMatrix({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}), RationalVector{x1, -x0, y1, -y0}));
}

// Both inequality families of a separating pair, checked on every lattice
// point of both sets in the box.
void check_cuts(const ConvexSet& c1, const ConvexSet& c2, long box, const SeparationResult& r) {
  REQUIRE(r.status == SeparationResult::Status::Separated);
  const std::size_t n = c1.dim();
  Rational biggest = 0;
  for (const auto& v : r.a) biggest = std::max(biggest, Rational(abs(v)));
  CHECK(biggest >= 1);
  for (const auto& x : scan_box(n, box, [&](const RationalVector& p) { return contains(c1, p); }))
    CHECK(dot(r.a, to_rational(x)) < r.b);
  for (const auto& y : scan_box(n, box, [&](const RationalVector& p) { return contains(c2, p); }))
    CHECK(dot(r.a, to_rational(y)) > r.b);
}

std::size_t lattice_count(const ConvexSet& c, long box) {
  return scan_box(c.dim(), box, [&](const RationalVector& p) { return contains(c, p); }).size();
}

}  // namespace

TEST_CASE("separate_integer_hulls examples") {
  auto left = box_set(0, 1, 0, 1), right = box_set(3, 4, 0, 1);
  auto r = separate_integer_hulls(left, right, 5);
  check_cuts(left, right, 5, r);

  auto same = separate_integer_hulls(make_ball({0, 0}, 1), make_ball({0, 0}, 1), 3);
  CHECK(same.status == SeparationResult::Status::Intersecting);
  REQUIRE(same.witness);
  CHECK(contains(make_ball({0, 0}, 1), to_rational(*same.witness)));
  CHECK(*same.witness == LatticePoint{-1, 0});

  auto b1 = make_ball({0, 0}, 1), b2 = make_ball({3, 0}, 1);
  auto balls = separate_integer_hulls(b1, b2, 5);
  check_cuts(b1, b2, 5, balls);
  CHECK(balls.a == RationalVector{1, 0});
  CHECK(balls.b >= 1);
  CHECK(balls.b <= 2);
  CHECK(balls.iterations <= lattice_count(b1, 5) + lattice_count(b2, 5) + 1);
}

TEST_CASE("intersecting hulls without a common lattice point") {
  // Two thin diagonal strips crossing between lattice points.
  auto up = make_polyhedron(HPolyhedron(RationalMatrix({{1, -1}, {-1, 1}, {1, 0}, {-1, 0}}),
                                        RationalVector{0, 0, 1, 0}));  // x = y, 0 <= x <= 1
  auto down = make_polyhedron(HPolyhedron(RationalMatrix({{1, 1}, {-1, -1}, {1, 0}, {-1, 0}}),
                                          RationalVector{1, -1, 1, 0}));  // x + y = 1
  auto r = separate_integer_hulls(up, down, 2);
  CHECK(r.status == SeparationResult::Status::Intersecting);
  CHECK_FALSE(r.witness);
  CHECK(r.no_integer_witness);
}

TEST_CASE("separate_integer_hulls on random separable pairs") {
  std::mt19937 rng(21);
  int separated = 0;
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t n = 2 + iter % 2;
    const long box = 4;
    auto c1 = random_convex_set(rng, n, 2, iter);
    auto c2 = random_convex_set(rng, n, 2, iter + 1);
    auto p1 = scan_box(n, box, [&](const RationalVector& p) { return contains(c1, p); });
    auto p2 = scan_box(n, box, [&](const RationalVector& p) { return contains(c2, p); });
    bool common = std::any_of(p1.begin(), p1.end(), [&](const LatticePoint& x) {
      return std::find(p2.begin(), p2.end(), x) != p2.end();
    });
    auto r = separate_integer_hulls(c1, c2, box);
    CHECK(r.iterations <= p1.size() + p2.size() + 1);
    if (r.status == SeparationResult::Status::Separated) {
      ++separated;
      CHECK_FALSE(common);
      check_cuts(c1, c2, box, r);
    } else {
      CHECK(r.witness.has_value() == common);
    }
  }
  CHECK(separated > 10);
}

TEST_CASE("separation is deterministic") {
  auto c1 = make_ball({frac(1, 3), 0}, frac(3, 2)), c2 = make_ball({4, frac(1, 2)}, frac(5, 4));
  auto r1 = separate_integer_hulls(c1, c2, 6), r2 = separate_integer_hulls(c1, c2, 6);
  CHECK(r1.a == r2.a);
  CHECK(r1.b == r2.b);
}

TEST_CASE("continuous_weak_separation") {
  auto boxes = continuous_weak_separation(box_set(0, 1, 0, 1), box_set(3, 4, 0, 1));
  REQUIRE(boxes);
  CHECK(boxes->a == RationalVector{1, 0});
  CHECK(boxes->b == 2);
  for (auto v : std::vector<RationalVector>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}) CHECK(dot(boxes->a, v) <= boxes->b);
  for (auto v : std::vector<RationalVector>{{3, 0}, {3, 1}, {4, 0}, {4, 1}}) CHECK(dot(boxes->a, v) >= boxes->b);

  auto balls = continuous_weak_separation(make_ball({0, 0}, 1), make_ball({4, 0}, 1));
  REQUIRE(balls);
  CHECK(balls->a == RationalVector{1, 0});
  CHECK(balls->b == 2);

  CHECK_FALSE(continuous_weak_separation(make_ball({0, 0}, 1), make_quadratic({RationalMatrix::identity(2), {-8, 0}, 15})));
  CHECK_FALSE(continuous_weak_separation(make_ball({0, 0}, 1), make_ball({1, 0}, 1)));
  CHECK_FALSE(continuous_weak_separation(box_set(0, 2, 0, 2), box_set(1, 3, 1, 3)));
  // Touching boxes separate weakly.
  auto touch = continuous_weak_separation(box_set(0, 1, 0, 1), box_set(1, 2, 0, 1));
  REQUIRE(touch);
  CHECK(same_hyperplane(*touch, {{1, 0}, 1}, false));
}

TEST_CASE("continuous separation is valid on random disjoint pairs") {
  std::mt19937 rng(23);
  int found = 0;
  for (int iter = 0; iter < 80; ++iter) {
    const std::size_t n = 2 + iter % 2;
    bool polyhedral = iter % 2;
    auto c1 = polyhedral ? make_polyhedron(random_polytope(rng, n, 3)) : random_ball(rng, n, 3);
    auto c2 = polyhedral ? make_polyhedron(random_polytope(rng, n, 3)) : random_ball(rng, n, 3);
    auto h = continuous_weak_separation(c1, c2);
    if (!h) continue;
    ++found;
    if (polyhedral) {
      auto top = optimize(c1.polyhedron(), h->a, Sense::Maximize);
      auto bottom = optimize(c2.polyhedron(), h->a, Sense::Minimize);
      if (top.status == LpStatus::Optimal) CHECK(*top.value <= h->b);
      if (bottom.status == LpStatus::Optimal) CHECK(*bottom.value >= h->b);
    } else {
      // a.c1 + r1 |a| <= b  <=>  r1^2 |a|^2 <= (b - a.c1)^2 with b >= a.c1.
      const auto &b1 = c1.ball(), &b2 = c2.ball();
      Rational s1 = h->b - dot(h->a, b1.center), s2 = dot(h->a, b2.center) - h->b;
      CHECK(sgn(s1) >= 0);
      CHECK(sgn(s2) >= 0);
      CHECK(b1.radius * b1.radius * norm_sq(h->a) <= s1 * s1);
      CHECK(b2.radius * b2.radius * norm_sq(h->a) <= s2 * s2);
    }
  }
  CHECK(found > 10);
}
