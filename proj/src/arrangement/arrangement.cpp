#include "rcip/arrangement.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace rcip {

Arrangement make_arrangement(std::size_t dim, const std::vector<Hyperplane>& hyperplanes,
                             HPolyhedron region) {
  if (region.dim != dim) throw DimensionError("arrangement region dimension mismatch");
  Arrangement arr;
  arr.dim = dim;
  arr.region = std::move(region);
  for (const auto& h : hyperplanes) {
    if (h.a.size() != dim) throw DimensionError("hyperplane dimension mismatch");
    if (is_zero(h.a)) throw DimensionError("hyperplane with zero normal");
    std::size_t found = arr.hyperplanes.size();
    int orientation = 1;
    for (std::size_t k = 0; k < arr.hyperplanes.size(); ++k) {
      if (same_hyperplane(arr.hyperplanes[k], h, false)) {
        found = k;
        break;
      }
      if (same_hyperplane(arr.hyperplanes[k], h, true)) {
        found = k;
        orientation = -1;
        break;
      }
    }
    if (found == arr.hyperplanes.size()) arr.hyperplanes.push_back(h);
    arr.input_to_distinct.push_back(found);
    arr.input_orientation.push_back(orientation);
  }
  return arr;
}

Arrangement make_arrangement(std::size_t dim, const std::vector<Hyperplane>& hyperplanes,
                             std::optional<Rational> box_radius) {
  HPolyhedron region = box_radius ? HPolyhedron::box(dim, *box_radius) : HPolyhedron(dim);
  return make_arrangement(dim, hyperplanes, std::move(region));
}

HPolyhedron cell_polyhedron(const Arrangement& arr, const std::vector<int>& signs) {
  HPolyhedron p = arr.region;
  for (std::size_t i = 0; i < arr.hyperplanes.size(); ++i) {
    const auto& h = arr.hyperplanes[i];
    if (signs[i] < 0) p.rows.push_back({h.a, h.b});
    else p.rows.push_back({scale(h.a, -1), -h.b});
  }
  return p;
}

namespace {

// A strict point of the region lying on none of the hyperplanes.
std::optional<RationalVector> generic_seed(const Arrangement& arr) {
  auto p0 = interior_point(arr.region);
  if (!p0) return std::nullopt;
  const std::size_t n = arr.dim;
  // Direction (1, k, k^2, ...) transversal to every hyperplane normal.
  RationalVector v(n);
  for (long k = 1;; ++k) {
    Rational power = 1;
    for (std::size_t i = 0; i < n; ++i, power *= k) v[i] = power;
    bool transversal = std::all_of(arr.hyperplanes.begin(), arr.hyperplanes.end(),
                                   [&](const Hyperplane& h) { return sgn(dot(h.a, v)) != 0; });
    if (transversal) break;
  }
  for (Rational t = 1;; t /= 2) {
    RationalVector x = add(*p0, scale(v, t));
    if (!arr.region.contains_strictly(x)) continue;
    bool generic = std::all_of(arr.hyperplanes.begin(), arr.hyperplanes.end(),
                               [&](const Hyperplane& h) { return h.side(x) != 0; });
    if (generic) return x;
  }
}

}  // namespace

std::vector<Cell> maximal_cells(const Arrangement& arr) {
  std::vector<Cell> cells;
  auto seed = generic_seed(arr);
  if (!seed) return cells;

  const std::size_t d = arr.hyperplanes.size();
  std::vector<int> signs(d);
  for (std::size_t i = 0; i < d; ++i) signs[i] = arr.hyperplanes[i].side(*seed);

  std::set<std::vector<int>> seen{signs};
  std::deque<std::size_t> queue;
  cells.push_back({signs, cell_polyhedron(arr, signs), *seed});
  queue.push_back(0);
  while (!queue.empty()) {
    std::size_t current = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<int> flipped = cells[current].signs;
      flipped[i] = -flipped[i];
      if (!seen.insert(flipped).second) continue;
      HPolyhedron p = cell_polyhedron(arr, flipped);
      auto witness = interior_point(p);
      if (!witness) continue;
      cells.push_back({std::move(flipped), std::move(p), std::move(*witness)});
      queue.push_back(cells.size() - 1);
    }
  }
  std::sort(cells.begin(), cells.end(),
            [](const Cell& a, const Cell& b) { return a.signs < b.signs; });
  return cells;
}

std::vector<std::size_t> locate(const std::vector<Cell>& cells, const RationalVector& x) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < cells.size(); ++k)
    if (cells[k].polyhedron.contains(x)) out.push_back(k);
  return out;
}

}  // namespace rcip
