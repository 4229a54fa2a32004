#include "integer_hull/lattice_walker.hpp"
#include "rcip/integer_hull.hpp"

#include <algorithm>

namespace rcip {

namespace {

// Points that are the midpoint of two other points of the set along some
// direction in {-1,0,1}^n are never extreme; dropping them keeps every vertex.
std::vector<LatticePoint> vertex_candidates(const std::vector<LatticePoint>& sorted) {
  if (sorted.empty()) return {};
  const std::size_t n = sorted.front().size();
  std::vector<LatticePoint> directions;
  LatticePoint d(n, -1);
  while (true) {
    auto first = std::find_if(d.begin(), d.end(), [](auto v) { return v != 0; });
    if (first != d.end() && *first > 0) directions.push_back(d);
    std::size_t i = 0;
    while (i < n && d[i] == 1) d[i++] = -1;
    if (i == n) break;
    ++d[i];
  }
  auto member = [&](const LatticePoint& q) { return std::binary_search(sorted.begin(), sorted.end(), q); };
  std::vector<LatticePoint> out;
  LatticePoint plus(n), minus(n);
  for (const auto& p : sorted) {
    bool interior = false;
    for (const auto& dir : directions) {
      for (std::size_t i = 0; i < n; ++i) {
        plus[i] = p[i] + dir[i];
        minus[i] = p[i] - dir[i];
      }
      if (member(plus) && member(minus)) {
        interior = true;
        break;
      }
    }
    if (!interior) out.push_back(p);
  }
  return out;
}

// p is extreme iff it is not a convex combination of the other candidates.
bool extreme_among(const std::vector<LatticePoint>& candidates, const LatticePoint& p) {
  std::vector<const LatticePoint*> others;
  for (const auto& q : candidates)
    if (q != p) others.push_back(&q);
  if (others.empty()) return true;
  const std::size_t k = others.size(), n = p.size();
  LinearProgram lp(k);
  lp.nonnegative.assign(k, true);
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = static_cast<long>((*others[j])[i]);
    lp.add(std::move(row), Relation::Equal, static_cast<long>(p[i]));
  }
  lp.add(RationalVector(k, Rational(1)), Relation::Equal, 1);
  return solve(lp).status == LpStatus::Infeasible;
}

std::vector<LatticePoint> sorted_copy(std::vector<LatticePoint> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

IntegerHull hull_vertices(const LatticePointSet& pts) {
  if (pts.points.empty()) throw std::invalid_argument("integer hull of an empty point set");
  auto sorted = sorted_copy(pts.points);
  auto candidates = vertex_candidates(sorted);
  IntegerHull hull;
  for (const auto& p : candidates)
    if (extreme_among(candidates, p)) hull.vertices.push_back(p);
  return hull;
}

bool is_hull_vertex(const std::vector<LatticePoint>& set, const LatticePoint& p) {
  auto sorted = sorted_copy(set);
  if (!std::binary_search(sorted.begin(), sorted.end(), p))
    throw std::invalid_argument("point is not in the set");
  auto candidates = vertex_candidates(sorted);
  if (!std::binary_search(candidates.begin(), candidates.end(), p)) return false;
  return extreme_among(candidates, p);
}

std::optional<LatticePoint> reverse_convex_feasible(const HPolyhedron& p, const ConvexSet& c,
                                                    const Rational& box, Removal removal) {
  if (c.dim() != p.dim) throw DimensionError("polyhedron and set differ in dimension");
  auto lattice = enumerate_lattice(p, box);
  auto removed = [&](const LatticePoint& x) {
    RationalVector r = to_rational(x);
    return removal == Removal::Closed ? contains(c, r) : contains_interior(c, r);
  };
  // A point of P outside the convex set exists iff a hull vertex is outside;
  // only pay for extremality LPs once some survivor is known.
  auto survivor = std::find_if(lattice.points.begin(), lattice.points.end(),
                               [&](const LatticePoint& x) { return !removed(x); });
  if (survivor == lattice.points.end()) return std::nullopt;
  auto candidates = vertex_candidates(lattice.points);
  for (const auto& v : candidates)
    if (!removed(v) && extreme_among(candidates, v)) return v;
  throw InternalError("a lattice point survives but no hull vertex does; the removed set is not convex");
}

}  // namespace rcip
