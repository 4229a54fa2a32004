#include <doctest.h>

#include "oracles.hpp"
#include "rcip/integer_hull.hpp"

using namespace rcip;
using namespace rcip::testing;

namespace {

HPolyhedron pentagon() {
  return HPolyhedron(RationalMatrix({{1, -1}, {1, 0}, {0, 1}, {-1, 1}, {-1, -1}}),
                     RationalVector{1, 2, 2, 1, -1});
}

HPolyhedron unit_square() {
  return HPolyhedron(RationalMatrix({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}), RationalVector{1, 0, 1, 0});
}

std::vector<LatticePoint> brute_hull(const std::vector<LatticePoint>& pts) {
  std::vector<LatticePoint> out;
  for (const auto& p : pts) {
    std::vector<RationalVector> others;
    for (const auto& q : pts)
      if (q != p) others.push_back(to_rational(q));
    if (!in_convex_hull(others, to_rational(p))) out.push_back(p);
  }
  return out;
}
}  // namespace

TEST_CASE("enumerate_lattice examples") {
  auto sq = enumerate_lattice(unit_square(), 4);
  CHECK(sq.points == std::vector<LatticePoint>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});

  auto pent = enumerate_lattice(pentagon(), 4);
  auto loop = scan_box(2, 2, [](const RationalVector& x) { return pentagon().contains(x); });
  CHECK(pent.points == loop);
  CHECK(pent.points.size() == 6);

  HPolyhedron empty(RationalMatrix({{1, 0}, {-1, 0}}), RationalVector{frac(1, 3), frac(-1, 4)});
  CHECK(enumerate_lattice(empty, 4).points.empty());
  CHECK_THROWS_AS(enumerate_lattice(HPolyhedron::box(5, 1), 1), GuardError);
  CHECK_THROWS_AS(enumerate_lattice(unit_square(), 65), GuardError);
}

TEST_CASE("hull_vertices examples") {
  auto sq = hull_vertices(enumerate_lattice(unit_square(), 2));
  CHECK(sq.vertices.size() == 4);

  auto pent = hull_vertices(enumerate_lattice(pentagon(), 2));
  CHECK(pent.vertices == std::vector<LatticePoint>{{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 2}});

  auto line = hull_vertices({{{0, 0}, {1, 0}, {2, 0}}, 2});
  CHECK(line.vertices == std::vector<LatticePoint>{{0, 0}, {2, 0}});
  CHECK_THROWS(hull_vertices({{}, 2}));
}

TEST_CASE("enumeration and hulls match brute force on random polytopes") {
  std::mt19937 rng(31);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t n = 2 + iter % 2;
    const long box = n == 2 ? 4 : 2;
    auto p = random_polytope(rng, n, box);
    auto pts = enumerate_lattice(p, box);
    CHECK(pts.points == scan_box(n, box, [&](const RationalVector& x) { return p.contains(x); }));
    if (pts.points.empty()) continue;
    auto hull = hull_vertices(pts);
    CHECK(hull.vertices == brute_hull(pts.points));
    std::vector<RationalVector> verts;
    for (const auto& v : hull.vertices) verts.push_back(to_rational(v));
    for (const auto& x : pts.points) CHECK(in_convex_hull(verts, to_rational(x)));
  }
}

TEST_CASE("reverse_convex_feasible examples") {
  auto corner = reverse_convex_feasible(unit_square(), make_ball({frac(1, 2), frac(1, 2)}, frac(1, 8)), 2);
  REQUIRE(corner);
  CHECK(*corner == LatticePoint{0, 0});
  CHECK_FALSE(reverse_convex_feasible(unit_square(), make_ball({frac(1, 2), frac(1, 2)}, 1), 2));
  // Open removal of the ball through all four corners keeps them.
  auto through = make_quadratic({RationalMatrix::identity(2), {-1, -1}, 0});  // |x - (1/2,1/2)|^2 <= 1/2
  CHECK_FALSE(reverse_convex_feasible(unit_square(), through, 2));
  CHECK(reverse_convex_feasible(unit_square(), through, 2, Removal::Interior));
}

TEST_CASE("two ellipses cover the pentagon's hull vertices but not (1,1)") {
  auto q1 = make_quadratic({RationalMatrix({{frac(1, 2), frac(-3, 5)}, {frac(-3, 5), 2}}),
                            {frac(6, 5), frac(-148, 25)}, frac(91, 25)});
  auto q2 = make_quadratic({RationalMatrix({{2, frac(-3, 5)}, {frac(-3, 5), frac(1, 2)}}),
                            {frac(-148, 25), frac(6, 5)}, frac(91, 25)});
  auto hull = hull_vertices(enumerate_lattice(pentagon(), 2));
  for (const auto& v : hull.vertices) {
    auto x = to_rational(v);
    CHECK((contains_interior(q1, x) || contains_interior(q2, x)));
  }
  CHECK_FALSE(contains(q1, {1, 1}));
  CHECK_FALSE(contains(q2, {1, 1}));
  // Each single ellipse leaves a hull vertex uncovered.
  CHECK(reverse_convex_feasible(pentagon(), q1, 2, Removal::Interior));
  CHECK(reverse_convex_feasible(pentagon(), q2, 2, Removal::Interior));
}

TEST_CASE("reverse_convex_feasible agrees with brute force") {
  std::mt19937 rng(41);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = 2 + iter % 2;
    const long box = 3;
    auto p = random_polytope(rng, n, box);
    ConvexSet c = iter % 3 == 0
                      ? make_polyhedron(random_polytope(rng, n, 2))
                      : make_ball(random_vector(rng, n, 2, 2), frac(1, 2) + Rational(abs(random_rational(rng, 2, 4))));
    Removal removal = iter % 2 ? Removal::Interior : Removal::Closed;
    auto removed = [&](const RationalVector& x) {
      return removal == Removal::Closed ? contains(c, x) : contains_interior(c, x);
    };
    auto survivors = scan_box(n, box, [&](const RationalVector& x) { return p.contains(x) && !removed(x); });
    auto got = reverse_convex_feasible(p, c, box, removal);
    CHECK(got.has_value() == !survivors.empty());
    if (got) {
      CHECK(p.contains(to_rational(*got)));
      CHECK_FALSE(removed(to_rational(*got)));
      CHECK(is_hull_vertex(enumerate_lattice(p, box).points, *got));
    }
  }
}
