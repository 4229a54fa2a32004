#include "rcip/decompose.hpp"

#include "rcip/separation.hpp"

#include <algorithm>
#include <numeric>

namespace rcip {

namespace {

Integer lcm_of_denominators(const RationalVector& a) {
  Integer l = 1;
  for (const auto& v : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

// a.x <= b rescaled so a is integral with gcd 1; none for a zero row.
std::optional<Halfspace> integral_row(const Halfspace& h) {
  if (is_zero(h.a)) return std::nullopt;
  Integer l = lcm_of_denominators(h.a), g = 0;
  RationalVector a = scale(h.a, Rational(l));
  for (const auto& v : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
  return Halfspace{scale(a, Rational(1, 1) / Rational(g)), h.b * Rational(l) / Rational(g)};
}

}  // namespace

std::vector<HPolyhedron> decompose_removing_polyhedra(const ConvexSet& k, const std::vector<HPolyhedron>& qs,
                                                      const Rational& box) {
  const std::size_t n = k.dim();
  // Enlarged rows a.x <= floor(b) + 1/2 keep the integer points of each Q and
  // put no integer point on a hyperplane.
  std::vector<std::vector<Halfspace>> enlarged;
  std::vector<Hyperplane> planes;
  for (const auto& q : qs) {
    if (q.dim != n) throw DimensionError("removed polyhedron dimension mismatch");
    std::vector<Halfspace> rows;
    bool empty = false;
    for (const auto& h : q.rows) {
      auto r = integral_row(h);
      if (!r) {
        empty = empty || sgn(h.b) < 0;
        continue;
      }
      r->b = Rational(floor(r->b)) + frac(1, 2);
      rows.push_back(*r);
      planes.push_back({r->a, r->b});
    }
    if (!empty) enlarged.push_back(std::move(rows));
  }
  HPolyhedron region = HPolyhedron::box(n, box);
  if (k.is_polyhedron()) region = region.intersect(k.polyhedron());
  auto arr = make_arrangement(n, planes, region);
  std::vector<HPolyhedron> out;
  for (const auto& cell : maximal_cells(arr)) {
    auto inside = [&](const std::vector<Halfspace>& q) {
      return std::all_of(q.begin(), q.end(), [&](const Halfspace& h) { return h.contains(cell.witness); });
    };
    if (std::none_of(enlarged.begin(), enlarged.end(), inside)) out.push_back(cell.polyhedron);
  }
  return out;
}

std::vector<std::vector<std::size_t>> IntersectionGraph::components() const {
  std::vector<std::size_t> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto slot = [&](std::size_t v) {
    return static_cast<std::size_t>(std::find(vertices.begin(), vertices.end(), v) - vertices.begin());
  };
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [i, j] : edges) {
    std::size_t a = find(slot(i)), b = find(slot(j));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> index(vertices.size(), SIZE_MAX);
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    std::size_t root = find(v);
    if (index[root] == SIZE_MAX) {
      index[root] = out.size();
      out.emplace_back();
    }
    out[index[root]].push_back(vertices[v]);
  }
  for (auto& c : out) std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool interiors_meet(const HPolyhedron& cell, const std::vector<const ConvexSet*>& sets) {
  HPolyhedron rows = cell;
  std::vector<QuadraticFn> quads;
  for (const auto* s : sets) {
    auto parts = parts_of(*s);
    rows = rows.intersect(parts.rows);
    quads.insert(quads.end(), parts.quads.begin(), parts.quads.end());
  }
  return find_common_interior_point(rows, quads).has_value();
}

}  // namespace

IntersectionGraph intersection_graph(const HPolyhedron& cell, const std::vector<ConvexSet>& members) {
  IntersectionGraph g;
  for (std::size_t i = 0; i < members.size(); ++i)
    if (interiors_meet(cell, {&members[i]})) g.vertices.push_back(i);
  for (std::size_t x = 0; x < g.vertices.size(); ++x)
    for (std::size_t y = x + 1; y < g.vertices.size(); ++y) {
      std::size_t i = g.vertices[x], j = g.vertices[y];
      if (interiors_meet(cell, {&members[i], &members[j]})) g.edges.push_back({i, j});
    }
  return g;
}

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

}  // namespace

ConvexSet component_union(const HPolyhedron& cell, const std::vector<ConvexSet>& members,
                          const std::vector<std::size_t>& component) {
  std::vector<ConvexSet> parts;
  for (auto i : component) parts.push_back(members.at(i));
  std::string certificate = component.size() == 1
                                ? "single member " + join(component)
                                : "connected members {" + join(component) +
                                      "} whose boundaries meet only on cover hyperplanes";
  return make_union(cell, std::move(parts), true, std::move(certificate));
}

std::string Piece::provenance() const {
  std::string s = "cell " + std::to_string(cell);
  if (component) s += " component " + std::to_string(*component);
  if (subcell) s += " subcell " + std::to_string(*subcell);
  return s;
}

Integer piece_guard(std::size_t members, std::size_t hyperplanes, std::size_t dim) {
  Integer base = Integer(static_cast<long>(std::max<std::size_t>(members, 1) * std::max<std::size_t>(members, 1))) *
                 static_cast<long>(hyperplanes + 2 * dim) * 4;
  Integer out = 1;
  for (std::size_t k = 0; k < dim; ++k) out *= base;
  return out;
}

namespace {

// a.x <= b strictly on the first set's integer points (weakly on the set
// itself for continuous separators) and >= on the second's.
Hyperplane separate_components(const HPolyhedron& cell, const std::vector<ConvexSet>& members,
                               const std::vector<std::size_t>& first, const std::vector<std::size_t>& second,
                               const Rational& box, BhcDecomposition& stats) {
  if (first.size() == 1 && second.size() == 1) {
    const auto &c1 = members[first[0]], &c2 = members[second[0]];
    std::optional<Hyperplane> h;
    if (c1.is_polyhedron() && c2.is_polyhedron())
      h = continuous_weak_separation(make_polyhedron(c1.polyhedron().intersect(cell)),
                                     make_polyhedron(c2.polyhedron().intersect(cell)));
    else if (c1.is_ball() && c2.is_ball())
      h = continuous_weak_separation(c1, c2);
    if (h) {
      ++stats.continuous_separations;
      return *h;
    }
  }
  auto u1 = component_union(cell, members, first), u2 = component_union(cell, members, second);
  auto r = separate_integer_hulls(u1, u2, box);
  if (r.status != SeparationResult::Status::Separated)
    throw DecompositionError("components {" + join(first) + "} and {" + join(second) +
                             "} are not separable inside a cover cell; the cover misses part of their "
                             "boundary intersection");
  ++stats.integer_separations;
  return {r.a, r.b};
}

}  // namespace

BhcDecomposition decompose_bhc_integer(const std::vector<ConvexSet>& members, const BoundaryCover& cover,
                                       const Rational& box) {
  if (members.empty()) throw std::invalid_argument("decomposition needs at least one member");
  const std::size_t n = members.front().dim();
  for (const auto& m : members)
    if (m.dim() != n) throw DimensionError("members differ in dimension");
  check_lattice_guards(n, box);

  BhcDecomposition out;
  const Integer guard = piece_guard(members.size(), cover.hyperplanes.size(), n);
  auto emit = [&](Piece p) {
    out.pieces.push_back(std::move(p));
    if (Integer(static_cast<long>(out.pieces.size())) > guard)
      throw GuardError("decomposition exceeds its piece guard of " + guard.get_str());
  };

  auto arr = make_arrangement(n, cover.hyperplanes, box);
  auto cells = maximal_cells(arr);
  out.cells = cells.size();
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto& cell = cells[c];
    auto comps = intersection_graph(cell.polyhedron, members).components();
    Piece base;
    base.cell = c;
    base.cell_signs = cell.signs;
    if (comps.empty()) {
      base.polyhedron = cell.polyhedron;
      emit(base);
      continue;
    }
    if (comps.size() == 1) {
      base.polyhedron = cell.polyhedron;
      base.members = comps[0];
      base.component = 0;
      base.convex_part = component_union(cell.polyhedron, members, comps[0]);
      emit(base);
      continue;
    }
    // Separate every pair of components; component k lies on the <= side
    // of separators (k, l) with k < l.
    std::vector<Hyperplane> separators;
    std::vector<std::pair<std::size_t, std::size_t>> pair_of;
    for (std::size_t k = 0; k < comps.size(); ++k)
      for (std::size_t l = k + 1; l < comps.size(); ++l) {
        separators.push_back(separate_components(cell.polyhedron, members, comps[k], comps[l], box, out));
        pair_of.push_back({k, l});
      }
    auto sub = make_arrangement(n, separators, cell.polyhedron);
    auto subcells = maximal_cells(sub);
    for (std::size_t s = 0; s < subcells.size(); ++s) {
      const auto& sc = subcells[s];
      std::vector<bool> possible(comps.size(), true);
      for (std::size_t p = 0; p < separators.size(); ++p) {
        int side = sc.signs[sub.input_to_distinct[p]] * sub.input_orientation[p];
        auto [k, l] = pair_of[p];
        possible[side < 0 ? l : k] = false;
      }
      Piece piece = base;
      piece.polyhedron = sc.polyhedron;
      piece.subcell = s;
      for (std::size_t k = 0; k < comps.size(); ++k) {
        if (!possible[k]) continue;
        std::vector<std::size_t> present;
        for (auto i : comps[k])
          if (interiors_meet(sc.polyhedron, {&members[i]})) present.push_back(i);
        if (present.empty()) break;
        piece.component = k;
        piece.members = present;
        piece.convex_part = component_union(sc.polyhedron, members, present);
        break;
      }
      emit(std::move(piece));
    }
  }
  return out;
}

Subdivision to_subdivision(const std::vector<Piece>& pieces, const Instance& instance) {
  Subdivision sub;
  sub.dim = instance.dim;
  sub.box = instance.box;
  std::vector<HPolyhedron> domains;
  for (const auto& d : instance.domains) {
    if (!d.is_polyhedron()) throw std::invalid_argument("subdivisions need polyhedral domains");
    domains.push_back(d.polyhedron());
  }
  if (domains.empty()) domains.push_back(HPolyhedron::box(instance.dim, instance.box));
  for (std::size_t d = 0; d < domains.size(); ++d)
    for (const auto& piece : pieces) {
      HPolyhedron q = piece.polyhedron.intersect(domains[d]);
      if (!feasible_point(q)) continue;
      std::string where = piece.provenance() + (domains.size() > 1 ? " domain " + std::to_string(d) : "");
      if (piece.convex_part) sub.concave_pieces.push_back({q, *piece.convex_part, Removal::Closed, where});
      else sub.convex_pieces.push_back({make_polyhedron(q, {}, instance.box * instance.dim), where});
    }
  return sub;
}

}  // namespace rcip
