// rcip: command-line front end for the reverse-convex integer feasibility
// solver.
#include "rcip/int_feasibility.hpp"
#include "rcip/json_io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <random>

using namespace rcip;

namespace {

enum Exit { kFeasible = 0, kInfeasible = 1, kRefused = 2, kInternal = 3 };

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run_solve(const std::string& path, bool verify, bool canonical, bool stats) {
  auto inst = load_instance(path);
  SolveOptions opts;
  opts.verify = verify;
  opts.canonical = canonical;
  auto v = solve(inst, opts);
  print(to_json(v, stats));
  return v.feasible ? kFeasible : kInfeasible;
}

int run_decompose(const std::string& path) {
  auto inst = load_instance(path);
  std::string route;
  SolveStats stats;
  auto sub = build_subdivision(inst, &route, &stats);
  Json out = to_json(sub);
  out["path"] = route;
  out["cells"] = stats.cells;
  print(out);
  return kFeasible;
}

int run_cells(const std::string& path) {
  auto arr = parse_arrangement(read_json_file(path));
  auto cells = maximal_cells(arr);
  Json signs = Json::array();
  for (const auto& c : cells) signs.push_back(c.signs);
  print(Json{{"cells", cells.size()}, {"distinct_hyperplanes", arr.hyperplanes.size()}, {"sign_vectors", signs}});
  return kFeasible;
}

// {"dim", "box", "set": {...}} with a polyhedral set.
int run_hull(const std::string& path) {
  auto j = read_json_file(path);
  if (!j.contains("dim") || !j.contains("box") || !j.contains("set"))
    throw FormatError("hull input needs \"dim\", \"box\" and \"set\"");
  auto set = parse_set(j.at("set"), j.at("dim").get<std::size_t>());
  if (!set.is_polyhedron()) throw FormatError("hull needs a polyhedral set");
  auto pts = enumerate_lattice(set.polyhedron(), rational_from_json(j.at("box")));
  Json out{{"lattice_points", pts.points.size()}};
  if (pts.points.empty()) {
    out["vertices"] = Json::array();
  } else {
    Json vs = Json::array();
    for (const auto& v : hull_vertices(pts).vertices) vs.push_back(to_json(v));
    out["vertices"] = vs;
  }
  print(out);
  return pts.points.empty() ? kInfeasible : kFeasible;
}

int run_check_bhc(const std::string& path, std::size_t samples) {
  auto inst = load_instance(path);
  BoundaryCover cover;
  std::string source = "supplied";
  if (inst.cover) {
    cover = *inst.cover;
  } else {
    std::string why;
    auto built = construct_cover(inst.removed, &why);
    if (!built) throw RefusalError("no boundary hyperplane cover is available: " + why);
    cover = *built;
    source = "constructed";
  }
  auto report = verify_cover(inst.removed, cover, samples);
  Json out = to_json(report);
  out["cover_source"] = source;
  out["cover"] = to_json(cover);
  print(out);
  return report.violations.empty() ? kFeasible : kInfeasible;
}

int run_oracle(const std::string& path) {
  auto inst = load_instance(path);
  auto all = brute_force_all(inst);
  Json out{{"status", all.empty() ? "infeasible" : "feasible"}};
  if (!all.empty()) out["witness"] = to_json(all.front());
  Json ws = Json::array();
  for (const auto& p : all) ws.push_back(to_json(p));
  out["witnesses"] = ws;
  print(out);
  return all.empty() ? kInfeasible : kFeasible;
}

Rational draw(std::mt19937& rng, long range, long den) {
  std::uniform_int_distribution<long> d(-range * den, range * den);
  return frac(d(rng), den);
}

// A random instance: a box domain, and balls or polytopes removed.
int run_generate(unsigned seed, std::size_t dim, long box, std::size_t removed) {
  std::mt19937 rng(seed);
  Instance inst;
  inst.name = "random-" + std::to_string(seed);
  inst.dim = dim;
  inst.box = box;
  for (std::size_t k = 0; k < removed; ++k) {
    RationalVector center(dim);
    for (auto& c : center) c = draw(rng, box / 2, 2);
    if (rng() % 2) {
      inst.removed.push_back(make_ball(center, frac(1, 2) + abs(draw(rng, 2, 4))));
    } else {
      HPolyhedron p(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        RationalVector e(dim);
        e[i] = 1;
        p.rows.push_back({e, center[i] + 1 + abs(draw(rng, 1, 2))});
        e[i] = -1;
        p.rows.push_back({e, -center[i] + 1 + abs(draw(rng, 1, 2))});
      }
      RationalVector cut(dim);
      for (auto& c : cut) c = draw(rng, 3, 1);
      if (!is_zero(cut)) p.rows.push_back({cut, dot(cut, center) + 1});
      inst.removed.push_back(make_polyhedron(std::move(p)));
    }
  }
  print(to_json(inst));
  return kFeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact integer feasibility of a polytope minus a union of convex sets"};
  app.require_subcommand(1);
  std::string file;
  bool verify = false, canonical = false, stats = false;
  std::size_t samples = 256;
  unsigned seed = 0;
  std::size_t dim = 2, removed = 2;
  long box = 6;

  auto* solve_cmd = app.add_subcommand("solve", "decide feasibility through the decomposition");
  solve_cmd->add_option("instance", file, "instance JSON")->required();
  solve_cmd->add_flag("--verify", verify, "cross-check against the brute-force scan");
  solve_cmd->add_flag("--canonical", canonical, "return the lexicographically smallest witness");
  solve_cmd->add_flag("--stats", stats, "include cell, piece, LP and timing counts");

  auto* decompose_cmd = app.add_subcommand("decompose", "print the convex/concave subdivision");
  decompose_cmd->add_option("instance", file, "instance JSON")->required();

  auto* cells_cmd = app.add_subcommand("cells", "count the maximal cells of an arrangement");
  cells_cmd->add_option("arrangement", file, "arrangement JSON")->required();

  auto* hull_cmd = app.add_subcommand("hull", "integer hull vertices of a polyhedron in a box");
  hull_cmd->add_option("input", file, "JSON with dim, box and set")->required();

  auto* check_cmd = app.add_subcommand("check-bhc", "verify the boundary hyperplane cover of the removed sets");
  check_cmd->add_option("instance", file, "instance JSON")->required();
  check_cmd->add_option("--samples", samples, "boundary samples per planar pair");

  auto* oracle_cmd = app.add_subcommand("oracle", "scan every lattice point of the box");
  oracle_cmd->add_option("instance", file, "instance JSON")->required();

  auto* generate_cmd = app.add_subcommand("generate", "print a random instance");
  generate_cmd->add_option("--seed", seed, "random seed")->required();
  generate_cmd->add_option("--dim", dim, "dimension")->check(CLI::Range(1, 4));
  generate_cmd->add_option("--box", box, "box radius")->check(CLI::Range(1, 64));
  generate_cmd->add_option("--removed", removed, "number of removed sets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kRefused;
  }

  try {
    if (*solve_cmd) return run_solve(file, verify, canonical, stats);
    if (*decompose_cmd) return run_decompose(file);
    if (*cells_cmd) return run_cells(file);
    if (*hull_cmd) return run_hull(file);
    if (*check_cmd) return run_check_bhc(file, samples);
    if (*oracle_cmd) return run_oracle(file);
    if (*generate_cmd) return run_generate(seed, dim, box, removed);
  } catch (const RefusalError& e) {
    std::cerr << "rcip: refused: " << e.what() << "\n";
    print(Json{{"status", "refused"}, {"reason", e.what()}});
    return kRefused;
  } catch (const GuardError& e) {
    std::cerr << "rcip: guard: " << e.what() << "\n";
    return kRefused;
  } catch (const DecompositionError& e) {
    std::cerr << "rcip: decomposition failed: " << e.what() << "\n";
    return kRefused;
  } catch (const InternalError& e) {
    std::cerr << "rcip: internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "rcip: invalid input: " << e.what() << "\n";
    return kRefused;
  } catch (const std::exception& e) {
    std::cerr << "rcip: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
