#include "rcip/json_io.hpp"

#include <fstream>

namespace rcip {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

RationalMatrix matrix_from_json(const Json& j, std::size_t cols) {
  if (!j.is_array()) throw FormatError("matrix must be an array of rows");
  std::vector<RationalVector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r, cols));
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rows[i][k];
  return m;
}

Json matrix_to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row_vector(i)));
  return out;
}

AffineFunction affine_from_json(const Json& j, std::size_t dim) {
  return {vector_from_json(field(j, "a"), dim), rational_from_json(field(j, "c"))};
}

Json affine_to_json(const AffineFunction& f) { return Json{{"a", to_json(f.a)}, {"c", to_json(f.c)}}; }

std::optional<Rational> optional_rational(const Json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return rational_from_json(j.at(key));
}

std::string name_of(const Json& j) { return j.contains("name") ? j.at("name").get<std::string>() : std::string(); }

QuadraticFn quadratic_from_json(const Json& j, std::size_t dim) {
  QuadraticFn f{matrix_from_json(field(j, "Q"), dim), vector_from_json(field(j, "b"), dim),
                rational_from_json(field(j, "c"))};
  if (f.q.rows() != dim) throw FormatError("Q must be square of the instance dimension");
  if (!f.q.is_symmetric()) throw FormatError("Q must be symmetric");
  return f;
}

Json hyperplane_to_json(const Hyperplane& h) { return Json{{"a", to_json(h.a)}, {"b", to_json(h.b)}}; }

template <class F>
auto rethrow_as_format(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const FormatError&) {
    throw;
  } catch (const Json::exception& e) {
    throw FormatError(e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }
  throw FormatError("rationals must be strings \"p/q\" or integers, got " + j.dump());
}

RationalVector vector_from_json(const Json& j, std::optional<std::size_t> dim) {
  if (!j.is_array()) throw FormatError("expected an array of rationals, got " + j.dump());
  RationalVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  if (dim && v.size() != *dim)
    throw FormatError("vector " + j.dump() + " should have " + std::to_string(*dim) + " entries");
  return v;
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const LatticePoint& p) {
  Json out = Json::array();
  for (auto x : p) out.push_back(x);
  return out;
}

Json to_json(const HPolyhedron& p) {
  Json a = Json::array(), b = Json::array();
  for (const auto& h : p.rows) {
    a.push_back(to_json(h.a));
    b.push_back(to_json(h.b));
  }
  return Json{{"type", "polyhedron"}, {"A", a}, {"b", b}};
}

ConvexSet parse_set(const Json& j, std::size_t dim) {
  return rethrow_as_format([&]() -> ConvexSet {
    const std::string type = field(j, "type").get<std::string>();
    const std::string name = name_of(j);
    if (type == "ball") {
      auto radius = rational_from_json(field(j, "radius"));
      if (sgn(radius) <= 0) throw FormatError("ball radius must be positive");
      return make_ball(vector_from_json(field(j, "center"), dim), radius, name);
    }
    if (type == "quadratic")
      return make_quadratic(quadratic_from_json(j, dim), name, optional_rational(j, "radius_bound"));
    if (type == "polyhedron") {
      auto a = matrix_from_json(field(j, "A"), dim);
      auto b = vector_from_json(field(j, "b"), a.rows());
      return make_polyhedron(HPolyhedron(a, b), name, optional_rational(j, "radius_bound"));
    }
    if (type == "box") {
      auto lo = vector_from_json(field(j, "lo"), dim), hi = vector_from_json(field(j, "hi"), dim);
      HPolyhedron p(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        RationalVector e(dim);
        e[i] = 1;
        p.rows.push_back({e, hi[i]});
        e[i] = -1;
        p.rows.push_back({e, -lo[i]});
      }
      return make_polyhedron(std::move(p), name);
    }
    if (type == "intersection") {
      std::vector<ConvexSet> members;
      for (const auto& m : field(j, "members")) members.push_back(parse_set(m, dim));
      if (members.empty()) throw FormatError("intersection needs members");
      return make_intersection(std::move(members), name);
    }
    if (type == "bhc_form") {
      QuadraticBhcForm form{rational_from_json(field(j, "alpha")), affine_from_json(field(j, "h1"), dim), std::nullopt};
      if (j.contains("h2") && !j.at("h2").is_null()) form.h2 = affine_from_json(j.at("h2"), dim);
      ConvexSet set = make_quadratic(quadratic_from_form(form).fn, name);
      std::get<ConvexQuadratic>(set.shape).form = form;
      return set;
    }
    throw FormatError("unknown set type \"" + type + "\"");
  });
}

Json to_json(const ConvexSet& c) {
  Json out = std::visit(
      [&](const auto& s) -> Json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Ball>) {
          return Json{{"type", "ball"}, {"center", to_json(s.center)}, {"radius", to_json(s.radius)}};
        } else if constexpr (std::is_same_v<T, ConvexQuadratic>) {
          if (s.form) {
            Json f{{"type", "bhc_form"}, {"alpha", to_json(s.form->alpha)}, {"h1", affine_to_json(s.form->h1)}};
            if (s.form->h2) f["h2"] = affine_to_json(*s.form->h2);
            return f;
          }
          return Json{{"type", "quadratic"}, {"Q", matrix_to_json(s.fn.q)}, {"b", to_json(s.fn.b)}, {"c", to_json(s.fn.c)}};
        } else if constexpr (std::is_same_v<T, HPolyhedron>) {
          return to_json(s);
        } else if constexpr (std::is_same_v<T, Intersection>) {
          Json m = Json::array();
          for (const auto& x : s.members) m.push_back(to_json(x));
          return Json{{"type", "intersection"}, {"members", m}};
        } else {
          Json m = Json::array();
          for (const auto& x : s.members) m.push_back(to_json(x));
          return Json{{"type", "union"},
                      {"region", to_json(s.region)},
                      {"members", m},
                      {"open", s.open_members},
                      {"certificate", s.certificate}};
        }
      },
      c.shape);
  if (!c.name.empty()) out["name"] = c.name;
  return out;
}

BoundaryCover parse_cover(const Json& j, std::size_t dim) {
  return rethrow_as_format([&] {
    BoundaryCover cover;
    for (const auto& h : field(j, "hyperplanes")) {
      Hyperplane plane{vector_from_json(field(h, "a"), dim), rational_from_json(field(h, "b"))};
      if (is_zero(plane.a)) throw FormatError("cover hyperplane with zero normal");
      cover.hyperplanes.push_back(std::move(plane));
    }
    if (j.contains("pairs"))
      for (const auto& p : j.at("pairs")) {
        PairCover pc;
        pc.i = field(p, "i").get<std::size_t>();
        pc.j = field(p, "j").get<std::size_t>();
        if (p.contains("hyperplanes")) pc.hyperplanes = p.at("hyperplanes").get<std::vector<std::size_t>>();
        for (auto k : pc.hyperplanes)
          if (k >= cover.hyperplanes.size()) throw FormatError("pair refers to a missing hyperplane");
        pc.ideal = p.value("ideal", false);
        cover.pairs.push_back(std::move(pc));
      }
    return cover;
  });
}

Json to_json(const BoundaryCover& cover) {
  Json hs = Json::array(), pairs = Json::array();
  for (const auto& h : cover.hyperplanes) hs.push_back(hyperplane_to_json(h));
  for (const auto& p : cover.pairs)
    pairs.push_back(Json{{"i", p.i}, {"j", p.j}, {"hyperplanes", p.hyperplanes}, {"ideal", p.ideal}});
  return Json{{"hyperplanes", hs}, {"pairs", pairs}};
}

Instance parse_instance(const Json& j) {
  return rethrow_as_format([&] {
    Instance inst;
    inst.name = name_of(j);
    long dim = field(j, "dim").get<long>();
    if (dim < 1) throw FormatError("dim must be positive");
    inst.dim = static_cast<std::size_t>(dim);
    inst.box = rational_from_json(field(j, "box"));
    if (sgn(inst.box) <= 0) throw FormatError("box radius must be positive");
    if (j.contains("domains"))
      for (const auto& d : j.at("domains")) inst.domains.push_back(parse_set(d, inst.dim));
    if (j.contains("removed"))
      for (const auto& r : j.at("removed")) {
        // Indefinite quadratics are kept for the oracle only.
        if (field(r, "type").get<std::string>() == "quadratic") {
          auto fn = quadratic_from_json(r, inst.dim);
          if (!ldlt(fn.q).psd) {
            inst.nonconvex_removed.push_back({std::move(fn), name_of(r)});
            continue;
          }
        }
        inst.removed.push_back(parse_set(r, inst.dim));
      }
    std::string semantics = j.value("semantics", std::string("open"));
    if (semantics == "open") inst.semantics = Semantics::Open;
    else if (semantics == "closed") inst.semantics = Semantics::Closed;
    else throw FormatError("semantics must be \"open\" or \"closed\"");
    if (j.contains("cover") && !j.at("cover").is_null()) inst.cover = parse_cover(j.at("cover"), inst.dim);
    return inst;
  });
}

Json to_json(const Instance& inst) {
  Json out{{"name", inst.name}, {"dim", inst.dim}, {"box", to_json(inst.box)}};
  Json domains = Json::array(), removed = Json::array();
  for (const auto& d : inst.domains) domains.push_back(to_json(d));
  for (const auto& r : inst.removed) removed.push_back(to_json(r));
  for (const auto& r : inst.nonconvex_removed) {
    Json q{{"type", "quadratic"}, {"Q", matrix_to_json(r.fn.q)}, {"b", to_json(r.fn.b)}, {"c", to_json(r.fn.c)}};
    if (!r.name.empty()) q["name"] = r.name;
    removed.push_back(q);
  }
  out["domains"] = domains;
  out["removed"] = removed;
  out["semantics"] = inst.semantics == Semantics::Open ? "open" : "closed";
  if (inst.cover) out["cover"] = to_json(*inst.cover);
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

Instance load_instance(const std::string& path) { return parse_instance(read_json_file(path)); }

Arrangement parse_arrangement(const Json& j) {
  return rethrow_as_format([&] {
    long dim = field(j, "dim").get<long>();
    if (dim < 1) throw FormatError("dim must be positive");
    std::vector<Hyperplane> hs;
    for (const auto& h : field(j, "hyperplanes"))
      hs.push_back({vector_from_json(field(h, "a"), static_cast<std::size_t>(dim)), rational_from_json(field(h, "b"))});
    std::optional<Rational> box;
    if (j.contains("box")) box = rational_from_json(j.at("box"));
    return make_arrangement(static_cast<std::size_t>(dim), hs, box);
  });
}

Json to_json(const Verdict& v, bool with_stats) {
  Json out{{"status", v.feasible ? "feasible" : "infeasible"}};
  if (v.witness) out["witness"] = to_json(*v.witness);
  out["path"] = v.path;
  Json trace = Json::array();
  for (const auto& t : v.trace)
    trace.push_back(Json{{"piece", t.provenance}, {"kind", t.kind}, {"outcome", t.outcome}});
  out["trace"] = trace;
  if (with_stats)
    out["stats"] = Json{{"cells", v.stats.cells},
                        {"pieces", v.stats.pieces},
                        {"lp_count", v.stats.lp_count},
                        {"wall_ms", v.stats.wall_ms}};
  return out;
}

Json to_json(const Subdivision& sub) {
  Json convex = Json::array(), concave = Json::array();
  for (const auto& p : sub.convex_pieces) convex.push_back(Json{{"provenance", p.provenance}, {"set", to_json(p.set)}});
  for (const auto& p : sub.concave_pieces)
    concave.push_back(Json{{"provenance", p.provenance},
                           {"polyhedron", to_json(p.polyhedron)},
                           {"removed", to_json(p.removed)},
                           {"removal", p.removal == Removal::Interior ? "interior" : "closed"}});
  return Json{{"dim", sub.dim}, {"box", to_json(sub.box)}, {"convex_pieces", convex}, {"concave_pieces", concave}};
}

Json to_json(const CoverReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations)
    violations.push_back(Json{{"i", v.i}, {"j", v.j}, {"point", to_json(v.point)}, {"detail", v.detail}});
  return Json{{"pairs_checked", report.pairs_checked},
              {"exact_pairs", report.exact_pairs},
              {"sampled_pairs", report.sampled_pairs},
              {"unverified_pairs", report.unverified_pairs},
              {"violations", violations}};
}

}  // namespace rcip
