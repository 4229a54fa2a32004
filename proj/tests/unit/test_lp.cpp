#include <doctest.h>

#include "rcip/lp.hpp"

#include <random>

using namespace rcip;

namespace {

HPolyhedron pentagon() {
  return HPolyhedron(RationalMatrix({{1, -1}, {1, 0}, {0, 1}, {-1, 1}, {-1, -1}}),
                     RationalVector{1, 2, 2, 1, -1});
}

HPolyhedron unit_square() {
  return HPolyhedron(RationalMatrix({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}), RationalVector{1, 0, 1, 0});
}

// Minimum of a strictly convex quadratic over P by trying every candidate
// active set of size <= n and keeping the best feasible stationary point.
std::optional<Rational> qp_by_active_set_enumeration(const RationalMatrix& q,
                                                      const RationalVector& b,
                                                      const Rational& c, const HPolyhedron& p) {
  const std::size_t n = p.dim, m = p.rows.size();
  std::optional<Rational> best;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<std::size_t> act;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1u) act.push_back(i);
    if (act.size() > n) continue;
    const std::size_t k = act.size();
    RationalMatrix kkt(n + k, n + k);
    RationalVector rhs(n + k);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) kkt(i, j) = 2 * q(i, j);
      rhs[i] = -b[i];
    }
    for (std::size_t w = 0; w < k; ++w) {
      for (std::size_t j = 0; j < n; ++j) {
        kkt(n + w, j) = p.rows[act[w]].a[j];
        kkt(j, n + w) = p.rows[act[w]].a[j];
      }
      rhs[n + w] = p.rows[act[w]].b;
    }
    auto s = solve_linear(kkt, rhs);
    if (!s.solution) continue;
    RationalVector x(s.solution->begin(), s.solution->begin() + static_cast<long>(n));
    if (!p.contains(x)) continue;
    Rational v = dot(x, q.multiply(x)) + dot(b, x) + c;
    if (!best || v < *best) best = v;
  }
  return best;
}

}  // namespace

TEST_CASE("solve: bounded box maximum") {
  LinearProgram lp(1);
  lp.add({1}, Relation::LessEqual, 1);
  lp.add({1}, Relation::GreaterEqual, 0);
  lp.maximize({1});
  auto r = solve(lp);
  CHECK(r.status == LpStatus::Optimal);
  CHECK(*r.value == 1);
}

TEST_CASE("solve: infeasible pair") {
  LinearProgram lp(1);
  lp.add({1}, Relation::LessEqual, 0);
  lp.add({1}, Relation::GreaterEqual, 1);
  CHECK(solve(lp).status == LpStatus::Infeasible);
}

TEST_CASE("solve: pentagon maximum of x1+x2 is 4 at (2,2)") {
  // Oracle: the five vertices of the pentagon.
  std::vector<RationalVector> vertices{{1, 0}, {0, 1}, {1, 2}, {2, 2}, {2, 1}};
  Rational best = -100;
  for (const auto& v : vertices) best = std::max(best, Rational(v[0] + v[1]));
  auto r = optimize(pentagon(), {1, 1}, Sense::Maximize);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(*r.value == best);
  CHECK(*r.point == RationalVector{2, 2});
}

TEST_CASE("solve: unbounded and equality constraints") {
  LinearProgram lp(2);
  lp.add({1, 1}, Relation::Equal, 3);
  lp.maximize({1, 0});
  CHECK(solve(lp).status == LpStatus::Unbounded);
  lp.add({1, 0}, Relation::LessEqual, 5);
  auto r = solve(lp);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(*r.point == RationalVector{5, -2});
}

TEST_CASE("solve: primal optimum equals hand-built dual optimum") {
  // Primal: max c.x, A x <= b, x free. Dual: min b.y, A'y = c, y >= 0.
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-5, 5);
  int checked = 0;
  for (int iter = 0; checked < 10 && iter < 500; ++iter) {
    const std::size_t n = 2 + iter % 2, m = 4 + iter % 3;
    RationalMatrix a(m, n);
    RationalVector b(m), c(n);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = coef(rng);
      b[i] = coef(rng) + 6;
    }
    for (std::size_t j = 0; j < n; ++j) c[j] = coef(rng);
    LinearProgram primal(n);
    primal.add(HPolyhedron(a, b));
    primal.maximize(c);
    auto p = solve(primal);
    if (p.status != LpStatus::Optimal) continue;

    LinearProgram dual(m);
    dual.nonnegative.assign(m, true);
    auto at = a.transpose();
    for (std::size_t j = 0; j < n; ++j) dual.add(at.row_vector(j), Relation::Equal, c[j]);
    dual.minimize(b);
    auto d = solve(dual);
    REQUIRE(d.status == LpStatus::Optimal);
    CHECK(*p.value == *d.value);
    ++checked;
  }
  CHECK(checked == 10);
}

TEST_CASE("solve: returned points satisfy all constraints on random LPs") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coef(-6, 6);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = 1 + iter % 4, m = 1 + iter % 7;
    LinearProgram lp(n);
    for (std::size_t i = 0; i < m; ++i) {
      RationalVector a(n);
      for (auto& x : a) x = frac(coef(rng), 1 + (iter % 3));
      lp.add(a, static_cast<Relation>(i % 3), coef(rng));
    }
    RationalVector c(n);
    for (auto& x : c) x = coef(rng);
    lp.maximize(c);
    auto r = solve(lp);  // solve() itself re-checks feasibility of its point
    if (r.status == LpStatus::Optimal) CHECK(r.point->size() == n);
  }
}

TEST_CASE("interior_point") {
  auto sq = interior_point(unit_square());
  REQUIRE(sq);
  CHECK(unit_square().contains_strictly(*sq));

  HPolyhedron line(RationalMatrix({{1, 0}, {-1, 0}}), RationalVector{0, 0});
  CHECK_FALSE(interior_point(line));

  auto pt = interior_point(pentagon());
  REQUIRE(pt);
  for (const auto& h : pentagon().rows) CHECK(dot(h.a, *pt) < h.b);
}

TEST_CASE("interior_point agrees with a fine rational grid scan") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coef(-8, 8);
  for (int iter = 0; iter < 150; ++iter) {
    HPolyhedron p = HPolyhedron::box(2, 2);
    const int extra = 1 + iter % 3;
    for (int k = 0; k < extra; ++k) p.add({{coef(rng), coef(rng)}, frac(coef(rng), 2)});
    bool grid_hit = false;
    for (int i = -96; i <= 96 && !grid_hit; ++i)
      for (int j = -96; j <= 96 && !grid_hit; ++j)
        grid_hit = p.contains_strictly({frac(i, 48), frac(j, 48)});
    auto x = interior_point(p);
    if (grid_hit) CHECK(x.has_value());
    if (x) CHECK(p.contains_strictly(*x));
  }
}

TEST_CASE("minimize_quadratic matches active-set enumeration") {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> coef(-4, 4);
  int compared = 0;
  for (int iter = 0; iter < 120; ++iter) {
    const std::size_t n = 2;
    Rational d1 = 1 + std::abs(coef(rng)), d2 = 1 + std::abs(coef(rng)), off = frac(coef(rng), 8);
    RationalMatrix q({{d1, off}, {off, d2}});
    RationalVector b{coef(rng), coef(rng)};
    Rational c = coef(rng);
    HPolyhedron p = HPolyhedron::box(n, 3);
    for (int k = 0; k < 2; ++k) p.add({{coef(rng), coef(rng)}, coef(rng)});
    auto r = minimize_quadratic(q, b, c, p);
    auto expected = qp_by_active_set_enumeration(q, b, c, p);
    CHECK(expected.has_value() == (r.status == LpStatus::Optimal));
    if (expected && r.status == LpStatus::Optimal) {
      CHECK(*r.value == *expected);
      CHECK(p.contains(*r.point));
      ++compared;
    }
  }
  CHECK(compared > 40);
}

TEST_CASE("minimize_quadratic without constraints and with non-definite Q") {
  auto r = minimize_quadratic(RationalMatrix::identity(2), {-2, 0}, 0, HPolyhedron(2));
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(*r.point == RationalVector{1, 0});
  CHECK(*r.value == -1);
  CHECK_THROWS(minimize_quadratic(RationalMatrix({{1, 0}, {0, 0}}), {0, 0}, 0, HPolyhedron(2)));
}
