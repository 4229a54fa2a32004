#include <doctest.h>

#include "oracles.hpp"
#include "rcip/arrangement.hpp"

using namespace rcip;
using namespace rcip::testing;

namespace {

Arrangement three_lines() {
  return make_arrangement(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{1, 1}, 1}});
}

}  // namespace

TEST_CASE("cell counts of small arrangements") {
  CHECK(maximal_cells(make_arrangement(2, {{{1, 0}, 0}})).size() == 2);
  CHECK(maximal_cells(make_arrangement(2, {{{1, 0}, 0}, {{0, 1}, 0}})).size() == 4);
  auto arr = three_lines();
  auto cells = maximal_cells(arr);
  CHECK(cells.size() == brute_force_sign_vectors(arr).size());
  CHECK(cells.size() == 7);
  CHECK(maximal_cells(make_arrangement(2, {})).size() == 1);
}

TEST_CASE("duplicates up to scaling collapse") {
  auto arr = make_arrangement(2, {{{1, 0}, 1}, {{2, 0}, 2}, {{-1, 0}, -1}, {{0, 1}, 0}});
  CHECK(arr.hyperplanes.size() == 2);
  CHECK(arr.input_to_distinct == std::vector<std::size_t>{0, 0, 0, 1});
  CHECK(arr.input_orientation == std::vector<int>{1, 1, -1, 1});
  CHECK(maximal_cells(arr).size() == 4);
  CHECK_THROWS_AS(make_arrangement(2, {{{0, 0}, 1}}), DimensionError);
}

TEST_CASE("box clipping") {
  // Lines x = 5 lies outside the box [-2, 2]^2.
  auto arr = make_arrangement(2, {{{1, 0}, 5}, {{1, 0}, 0}}, Rational(2));
  CHECK(maximal_cells(arr).size() == 2);
}

TEST_CASE("locate") {
  auto arr = make_arrangement(2, {{{1, 0}, 0}});
  auto cells = maximal_cells(arr);
  auto hit = locate(cells, {1, 0});
  REQUIRE(hit.size() == 1);
  CHECK(cells[hit[0]].signs == std::vector<int>{1});
  CHECK(locate(cells, {0, 5}).size() == 2);

  auto three = three_lines();
  auto all = maximal_cells(three);
  // (0,0) is where x = 0 and y = 0 cross; x + y = 1 passes elsewhere.
  auto at_origin = locate(all, {0, 0});
  std::size_t expected = 0;
  for (const auto& c : all) expected += c.polyhedron.contains({0, 0}) ? 1 : 0;
  CHECK(at_origin.size() == expected);
  CHECK(at_origin.size() == 4);
}

TEST_CASE("random arrangements match brute-force sign vectors") {
  std::mt19937 rng(17);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t n = 2 + iter % 2, d = 1 + iter % 6;
    std::vector<Hyperplane> hs;
    for (std::size_t k = 0; k < d; ++k) {
      RationalVector a;
      do a = random_vector(rng, n, 3, 1);
      while (is_zero(a));
      hs.push_back({a, random_rational(rng, 2, 2)});
    }
    auto arr = make_arrangement(n, hs);
    auto cells = maximal_cells(arr);
    auto brute = brute_force_sign_vectors(arr);
    CHECK(cells.size() == brute.size());
    CHECK(static_cast<long>(cells.size()) <= cell_count_bound(static_cast<long>(arr.hyperplanes.size()), static_cast<long>(n)));
    for (std::size_t k = 0; k < cells.size(); ++k) {
      CHECK(cells[k].signs == brute[k]);
      CHECK(cells[k].polyhedron.contains_strictly(cells[k].witness));
    }
    // Tiling: random points land in at least one closed cell.
    for (int s = 0; s < 40; ++s) CHECK(!locate(cells, random_vector(rng, n, 4, 3)).empty());
    // Disjoint interiors.
    for (std::size_t i = 0; i < cells.size(); ++i)
      for (std::size_t j = i + 1; j < cells.size(); ++j)
        CHECK_FALSE(interior_point(cells[i].polyhedron.intersect(cells[j].polyhedron)));
  }
}
