#include "rcip/solver.hpp"

#include "rcip/int_feasibility.hpp"

#include <algorithm>
#include <chrono>

namespace rcip {

namespace {

std::string describe(const LatticePoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

bool removed_by(const ConcavePiece& piece, const RationalVector& x) {
  return piece.removal == Removal::Interior ? contains_interior(piece.removed, x) : contains(piece.removed, x);
}

std::optional<LatticePoint> smallest_outside(const ConcavePiece& piece, const Rational& box) {
  for (const auto& p : enumerate_lattice(piece.polyhedron, box).points)
    if (!removed_by(piece, to_rational(p))) return p;
  return std::nullopt;
}

// Integer points of int(Q) are those of {a.x <= ceil(b) - 1} once each row is
// scaled to integral coefficients.
HPolyhedron lattice_interior(const HPolyhedron& q) {
  HPolyhedron out;
  out.dim = q.dim;
  for (const auto& h : q.rows) {
    Integer l = 1;
    for (const auto& v : h.a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    RationalVector a = scale(h.a, Rational(l));
    Rational b = h.b * Rational(l);
    out.rows.push_back({a, Rational(ceil(b)) - 1});
  }
  return out;
}

HPolyhedron domain_rows(const Instance& inst, const ConvexSet& d) {
  return d.polyhedron().intersect(HPolyhedron::box(inst.dim, inst.box));
}

std::vector<HPolyhedron> polyhedral_domains(const Instance& inst) {
  std::vector<HPolyhedron> out;
  if (inst.domains.empty()) out.push_back(HPolyhedron::box(inst.dim, inst.box));
  for (const auto& d : inst.domains) {
    if (!d.is_polyhedron()) throw RefusalError("curved domains cannot be combined with curved removed sets");
    out.push_back(domain_rows(inst, d));
  }
  return out;
}

ConvexSet bounded(HPolyhedron p, const Rational& box) {
  Rational radius = box * static_cast<long>(p.dim);
  return make_polyhedron(std::move(p), {}, radius);
}

std::string domain_tag(const Instance& inst, std::size_t d) {
  return inst.domains.size() > 1 ? "domain " + std::to_string(d) : "domain";
}

Subdivision without_removals(const Instance& inst) {
  Subdivision sub{inst.dim, inst.box, {}, {}};
  if (inst.domains.empty())
    sub.convex_pieces.push_back({bounded(HPolyhedron::box(inst.dim, inst.box), inst.box), "box"});
  for (std::size_t d = 0; d < inst.domains.size(); ++d) sub.convex_pieces.push_back({inst.domains[d], domain_tag(inst, d)});
  return sub;
}

Subdivision single_set(const Instance& inst, const ConvexSet& c) {
  Subdivision sub{inst.dim, inst.box, {}, {}};
  Removal removal = inst.semantics == Semantics::Open ? Removal::Interior : Removal::Closed;
  auto polys = polyhedral_domains(inst);
  for (std::size_t d = 0; d < polys.size(); ++d)
    sub.concave_pieces.push_back({polys[d], c, removal, inst.domains.empty() ? "box" : domain_tag(inst, d)});
  return sub;
}

Subdivision removing_polyhedra(const Instance& inst, SolveStats& stats) {
  std::vector<HPolyhedron> qs;
  for (const auto& c : inst.removed)
    qs.push_back(inst.semantics == Semantics::Open ? lattice_interior(c.polyhedron()) : c.polyhedron());
  std::vector<ConvexSet> domains = inst.domains;
  if (domains.empty()) domains.push_back(bounded(HPolyhedron::box(inst.dim, inst.box), inst.box));
  Subdivision sub{inst.dim, inst.box, {}, {}};
  for (std::size_t d = 0; d < domains.size(); ++d) {
    auto cells = decompose_removing_polyhedra(domains[d], qs, inst.box);
    stats.cells += cells.size();
    for (std::size_t s = 0; s < cells.size(); ++s) {
      std::string where = (inst.domains.empty() ? "box" : domain_tag(inst, d)) + " cell " + std::to_string(s);
      if (domains[d].is_polyhedron()) sub.convex_pieces.push_back({bounded(cells[s], inst.box), where});
      else sub.convex_pieces.push_back({make_intersection({domains[d], bounded(cells[s], inst.box)}), where});
    }
  }
  return sub;
}

Subdivision boundary_cover(const Instance& inst, const std::vector<ConvexSet>& members, SolveStats& stats) {
  polyhedral_domains(inst);
  if (inst.semantics != Semantics::Open)
    throw RefusalError("closed removal of several sets with curved members is only supported by the oracle");
  BoundaryCover cover;
  if (inst.cover) {
    auto report = verify_cover(members, *inst.cover);
    if (!report.violations.empty()) {
      const auto& v = report.violations.front();
      throw RefusalError("the supplied cover misses the boundary intersection of removed sets " +
                         std::to_string(v.i) + " and " + std::to_string(v.j) + ": " + v.detail);
    }
    cover = *inst.cover;
  } else {
    std::string why;
    auto built = construct_cover(members, &why);
    if (!built) throw RefusalError("no boundary hyperplane cover is available: " + why);
    cover = *built;
  }
  auto d = decompose_bhc_integer(members, cover, inst.box);
  stats.cells = d.cells;
  return to_subdivision(d.pieces, inst);
}

}  // namespace

Subdivision build_subdivision(const Instance& instance, std::string* path, SolveStats* stats) {
  if (!instance.nonconvex_removed.empty())
    throw RefusalError("removed sets are not convex; only the brute-force oracle accepts this instance");
  check_lattice_guards(instance.dim, instance.box);
  SolveStats local;
  SolveStats& st = stats ? *stats : local;
  // Under open semantics a removed set without interior removes nothing.
  std::vector<ConvexSet> members;
  for (const auto& c : instance.removed)
    if (instance.semantics == Semantics::Closed || is_full_dimensional(c)) members.push_back(c);

  Instance effective = instance;
  effective.removed = members;
  std::string route;
  Subdivision sub;
  bool all_polyhedral = std::all_of(members.begin(), members.end(), [](const ConvexSet& c) { return c.is_polyhedron(); });
  bool polyhedral_domains = std::all_of(instance.domains.begin(), instance.domains.end(),
                                        [](const ConvexSet& c) { return c.is_polyhedron(); });
  if (members.empty()) {
    route = "convex";
    sub = without_removals(effective);
  } else if (members.size() == 1 && polyhedral_domains) {
    route = "single-set";
    sub = single_set(effective, members[0]);
  } else if (all_polyhedral) {
    route = "removing-polyhedra";
    sub = removing_polyhedra(effective, st);
  } else {
    route = "bhc";
    sub = boundary_cover(effective, members, st);
  }
  st.pieces = sub.convex_pieces.size() + sub.concave_pieces.size();
  if (path) *path = route;
  return sub;
}

Verdict solve_subdivision(const Subdivision& sub, const Instance& instance, bool canonical) {
  Verdict v;
  auto consider = [&](std::optional<LatticePoint> p, const std::string& where, const std::string& kind) {
    v.trace.push_back({where, kind, p ? "feasible " + describe(*p) : "empty"});
    if (!p) return false;
    if (!instance.feasible(to_rational(*p)))
      throw InternalError("piece " + where + " returned " + describe(*p) + ", which the instance rejects");
    if (!v.witness || *p < *v.witness) v.witness = p;
    return !canonical;
  };
  for (const auto& piece : sub.convex_pieces)
    if (consider(convex_int_feasible(piece.set, sub.box), piece.provenance, "convex")) break;
  if (canonical || !v.witness)
    for (const auto& piece : sub.concave_pieces) {
      auto p = canonical ? smallest_outside(piece, sub.box)
                         : reverse_convex_feasible(piece.polyhedron, piece.removed, sub.box, piece.removal);
      if (consider(p, piece.provenance, "concave")) break;
    }
  v.feasible = v.witness.has_value();
  return v;
}

Verdict solve(const Instance& instance, const SolveOptions& options) {
  auto start = std::chrono::steady_clock::now();
  const std::uint64_t lps = lp_solve_count();
  SolveStats stats;
  std::string path;
  auto sub = build_subdivision(instance, &path, &stats);
  Verdict v = solve_subdivision(sub, instance, options.canonical);
  v.path = path;
  v.stats = stats;
  if (options.verify) {
    auto expected = brute_force_verdict(instance);
    if (expected.has_value() != v.feasible)
      throw InternalError("verdict disagrees with the brute-force scan: scan says " +
                          (expected ? "feasible at " + describe(*expected) : std::string("infeasible")));
    if (options.canonical && expected != v.witness)
      throw InternalError("canonical witness " + describe(*v.witness) + " differs from the scan's " +
                          describe(*expected));
  }
  v.stats.lp_count = lp_solve_count() - lps;
  v.stats.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return v;
}

}  // namespace rcip
