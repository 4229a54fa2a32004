#include <doctest.h>

#include "rcip/core.hpp"
#include "rcip/polyhedron.hpp"

#include <random>

using namespace rcip;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == frac(1, 2));
  CHECK(parse_rational("-4/8") == frac(-1, 2));
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("0.25") == frac(1, 4));
  CHECK(parse_rational("-1.5") == frac(-3, 2));
  CHECK(to_string(frac(-6, 4)) == "-3/2");
  CHECK(to_string(frac(4, 2)) == "2");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational(""));
}

TEST_CASE("floor, ceil and square roots") {
  CHECK(floor(frac(-1, 2)) == -1);
  CHECK(ceil(frac(-1, 2)) == 0);
  CHECK(floor(frac(7, 2)) == 3);
  CHECK(ceil(frac(6, 2)) == 3);
  CHECK(exact_sqrt(frac(9, 4)) == frac(3, 2));
  CHECK_FALSE(exact_sqrt(Rational(2)).has_value());
  Rational lo = sqrt_lower(2, 30), hi = sqrt_upper(2, 30);
  CHECK(lo * lo < 2);
  CHECK(hi * hi > 2);
  CHECK(hi - lo <= frac(1, 1 << 30));
}

TEST_CASE("vector kernels") {
  RationalVector u{1, 2, 3}, v{4, 5, 6};
  CHECK(dot(u, v) == 32);
  CHECK(norm_sq(RationalVector{frac(3, 5), frac(4, 5)}) == 1);
  CHECK(add(u, v) == RationalVector{5, 7, 9});
  CHECK_THROWS_AS(dot(u, RationalVector{1}), DimensionError);
}

TEST_CASE("solve_linear on regular, singular and inconsistent systems") {
  RationalMatrix a({{2, 1}, {1, 3}});
  auto s = solve_linear(a, {3, 5});
  REQUIRE(s.solution);
  CHECK(s.rank == 2);
  CHECK(a.multiply(*s.solution) == RationalVector{3, 5});

  RationalMatrix sing({{1, 2}, {2, 4}});
  auto t = solve_linear(sing, {1, 2});
  CHECK(t.rank == 1);
  REQUIRE(t.solution);
  CHECK(sing.multiply(*t.solution) == RationalVector{1, 2});
  CHECK_FALSE(solve_linear(sing, {1, 3}).solution);
}

TEST_CASE("ldlt decides definiteness") {
  CHECK(ldlt(RationalMatrix::identity(3)).pd);
  auto psd = ldlt(RationalMatrix({{1, 1}, {1, 1}}));
  CHECK(psd.psd);
  CHECK_FALSE(psd.pd);
  CHECK(psd.rank == 1);
  CHECK_FALSE(ldlt(RationalMatrix({{0, 1}, {1, 0}})).psd);
  CHECK_FALSE(ldlt(RationalMatrix({{1, 2}, {2, 1}})).psd);
  CHECK(ldlt(RationalMatrix({{0, 0}, {0, 0}})).psd);
  CHECK_THROWS_AS(ldlt(RationalMatrix({{1, 2}, {3, 1}})), DimensionError);
}

TEST_CASE("ldlt agrees with leading-minor test on random 2x2 matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int iter = 0; iter < 500; ++iter) {
    Rational a = coef(rng), b = coef(rng), d = coef(rng);
    bool expected_psd = a >= 0 && d >= 0 && a * d - b * b >= 0;
    bool expected_pd = a > 0 && a * d - b * b > 0;
    auto r = ldlt(RationalMatrix({{a, b}, {b, d}}));
    CHECK(r.psd == expected_psd);
    CHECK(r.pd == expected_pd);
  }
}

TEST_CASE("hyperplane normalization and comparison") {
  Hyperplane h{{frac(1, 2), frac(-1, 3)}, 1};
  auto n = normalize(h);
  CHECK(n.a == RationalVector{3, -2});
  CHECK(n.b == 6);
  CHECK(same_hyperplane(h, n));
  CHECK(same_hyperplane(h, Hyperplane{{-3, 2}, -6}));
  CHECK_FALSE(same_hyperplane(h, Hyperplane{{-3, 2}, -6}, false));
  CHECK_FALSE(same_hyperplane(h, Hyperplane{{3, -2}, 5}));
}

TEST_CASE("polyhedron membership") {
  auto box = HPolyhedron::box(2, 1);
  CHECK(box.contains({1, -1}));
  CHECK_FALSE(box.contains_strictly({1, 0}));
  CHECK(box.contains_strictly({0, 0}));
  CHECK_THROWS_AS(box.contains({0}), DimensionError);
}
