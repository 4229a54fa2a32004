#include <doctest.h>

#include "oracles.hpp"
#include "rcip/int_feasibility.hpp"
#include "rcip/json_io.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace rcip;
using namespace rcip::testing;

namespace {

const std::string kCorpus = RCIP_CORPUS_DIR;

ConvexSet square(const Rational& lo, const Rational& hi) {
  return make_polyhedron(HPolyhedron(RationalMatrix({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}), RationalVector{hi, -lo, hi, -lo}));
}

Instance square_minus(const ConvexSet& ball, Semantics semantics) {
  Instance inst;
  inst.dim = 2;
  inst.box = 2;
  inst.domains.push_back(square(0, 1));
  inst.removed.push_back(ball);
  inst.semantics = semantics;
  return inst;
}

void check_against_scan(const Instance& inst) {
  auto expected = brute_force_verdict(inst);
  auto v = solve(inst);
  CHECK(v.feasible == expected.has_value());
  if (v.witness) CHECK(inst.feasible(to_rational(*v.witness)));
  auto canonical = solve(inst, {false, true});
  CHECK(canonical.witness == expected);
}

struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::string& args) {
  std::string cmd = std::string(RCIP_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r{0, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("solve_subdivision examples") {
  Instance open_box;
  open_box.dim = 2;
  open_box.box = 3;
  auto trivial = solve(open_box);
  CHECK(trivial.path == "convex");
  REQUIRE(trivial.witness);
  CHECK(*trivial.witness == LatticePoint{-3, -3});

  auto small = square_minus(make_ball({frac(1, 2), frac(1, 2)}, frac(1, 2)), Semantics::Open);
  auto corners = solve(small);
  REQUIRE(corners.witness);
  CHECK(corners.path == "single-set");
  CHECK(brute_force_all(small).size() == 4);
  check_against_scan(small);

  // Every corner is strictly inside the radius-1 ball, so open removal
  // already leaves nothing.
  auto unit = square_minus(make_ball({frac(1, 2), frac(1, 2)}, 1), Semantics::Open);
  CHECK_FALSE(solve(unit).feasible);
  CHECK_FALSE(brute_force_verdict(unit));

  auto covering = square_minus(make_ball({frac(1, 2), frac(1, 2)}, frac(5, 4)), Semantics::Closed);
  CHECK_FALSE(solve(covering).feasible);
  CHECK_FALSE(brute_force_verdict(covering));

  auto pentagon = load_instance(kCorpus + "/pentagon.json");
  auto v = solve(pentagon, {true, true});
  CHECK(v.path == "bhc");
  REQUIRE(v.witness);
  CHECK(*v.witness == LatticePoint{1, 1});
}

TEST_CASE("solve_subdivision re-checks witnesses") {
  Instance inst = square_minus(make_ball({0, 0}, frac(1, 2)), Semantics::Closed);
  // A convex piece claiming the removed origin.
  Subdivision bogus{2, 2, {{make_polyhedron(HPolyhedron::box(2, 0)), "bogus"}}, {}};
  CHECK_THROWS_AS(solve_subdivision(bogus, inst), InternalError);
}

TEST_CASE("solve routes and refuses") {
  Instance balls;
  balls.dim = 2;
  balls.box = 2;
  balls.removed = {make_ball({0, 0}, 1), make_ball({1, 0}, 1)};
  auto v = solve(balls);
  CHECK(v.path == "bhc");
  check_against_scan(balls);

  Instance polys;
  polys.dim = 2;
  polys.box = 3;
  polys.removed = {square(-3, 0), square(1, 3)};
  CHECK(solve(polys).path == "removing-polyhedra");
  check_against_scan(polys);
  polys.semantics = Semantics::Closed;
  check_against_scan(polys);

  // A removed segment has no interior under open semantics.
  Instance segment = polys;
  segment.semantics = Semantics::Open;
  segment.removed = {make_polyhedron(HPolyhedron(RationalMatrix({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}),
                                                 RationalVector{0, 0, 3, 3}))};
  CHECK(solve(segment).path == "convex");
  check_against_scan(segment);

  CHECK_THROWS_AS(solve(load_instance(kCorpus + "/two_ellipses_no_cover.json")), RefusalError);
  CHECK_THROWS_AS(solve(load_instance(kCorpus + "/pell_n5.json")), RefusalError);
  CHECK_THROWS_AS(solve(load_instance(kCorpus + "/an1_solvable.json")), RefusalError);
  Instance closed_balls = balls;
  closed_balls.semantics = Semantics::Closed;
  CHECK_THROWS_AS(solve(closed_balls), RefusalError);

  // A curved domain with polyhedral removals uses the cell decomposition.
  Instance curved;
  curved.dim = 2;
  curved.box = 4;
  curved.domains = {make_ball({0, 0}, frac(7, 2))};
  curved.removed = {square(-1, 1), square(2, 3)};
  CHECK(solve(curved).path == "removing-polyhedra");
  check_against_scan(curved);

  Instance lone;
  lone.dim = 2;
  lone.box = 3;
  lone.domains = {make_ball({0, 0}, 3)};
  CHECK(solve(lone).path == "convex");
  check_against_scan(lone);
}

TEST_CASE("solve matches the brute-force scan on random instances") {
  std::mt19937 rng(51);
  int feasible = 0, infeasible = 0;
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t n = 2 + iter % 2;
    auto inst = random_instance(rng, n, n == 2 ? 5 : 3, 1 + iter % 3);
    auto expected = brute_force_verdict(inst);
    auto v = solve(inst);
    CHECK(v.feasible == expected.has_value());
    (v.feasible ? feasible : infeasible)++;
  }
  CHECK(feasible > 0);
}

TEST_CASE("verdict JSON is deterministic") {
  auto inst = load_instance(kCorpus + "/two_balls.json");
  auto a = to_json(solve(inst), false).dump(), b = to_json(solve(inst), false).dump();
  CHECK(a == b);
  CHECK(to_json(solve(inst), true).contains("stats"));
}

TEST_CASE("instance JSON") {
  auto j = Json::parse(R"({"name":"t","dim":2,"box":"5/2","domains":[{"type":"box","lo":[0,"-1/2"],"hi":["2",1]}],
    "removed":[{"type":"ball","center":["1/2","0"],"radius":"3/4"},
               {"type":"quadratic","Q":[["1","0"],["0","-1"]],"b":["0","0"],"c":"0"}],
    "cover":{"hyperplanes":[{"a":["1","0"],"b":"1"}]}})");
  auto inst = parse_instance(j);
  CHECK(inst.box == frac(5, 2));
  CHECK(inst.removed.size() == 1);
  CHECK(inst.nonconvex_removed.size() == 1);
  REQUIRE(inst.cover);
  CHECK(inst.cover->hyperplanes.size() == 1);
  CHECK(contains(inst.domains[0], {2, frac(-1, 2)}));
  CHECK_FALSE(contains(inst.domains[0], {2, frac(-3, 4)}));

  // Round trip.
  auto again = parse_instance(to_json(inst));
  CHECK(to_json(again).dump() == to_json(inst).dump());
  for (const auto& p : box_points(2, 2)) CHECK(again.feasible(to_rational(p)) == inst.feasible(to_rational(p)));

  CHECK(rational_from_json(Json("-6/4")) == frac(-3, 2));
  CHECK(rational_from_json(Json(7)) == 7);
  CHECK(to_json(frac(4, -6)) == Json("-2/3"));
  CHECK_THROWS_AS(rational_from_json(Json(0.5)), FormatError);
  CHECK_THROWS_AS(rational_from_json(Json("1/0x")), FormatError);
  CHECK_THROWS_AS(parse_instance(Json::parse(R"({"dim":2})")), FormatError);
  CHECK_THROWS_AS(parse_instance(Json::parse(R"({"dim":2,"box":"1","removed":[{"type":"ball","center":["0"],"radius":"1"}]})")),
                  FormatError);
  CHECK_THROWS_AS(parse_instance(Json::parse(R"({"dim":2,"box":"1","removed":[{"type":"blob"}]})")), FormatError);
  CHECK_THROWS_AS(parse_instance(Json::parse(R"({"dim":2,"box":"1","semantics":"half"})")), FormatError);

  auto arr = parse_arrangement(read_json_file(kCorpus + "/three_lines.json"));
  CHECK(maximal_cells(arr).size() == 7);
}

TEST_CASE("corpus verdicts match the oracle") {
  for (const auto& entry : std::filesystem::directory_iterator(kCorpus)) {
    auto j = read_json_file(entry.path().string());
    if (!j.contains("removed")) continue;
    auto inst = parse_instance(j);
    CAPTURE(entry.path().string());
    try {
      auto v = solve(inst, {true, true});
      CHECK(v.witness == brute_force_verdict(inst));
    } catch (const RefusalError&) {
      // Refused instances are oracle-only by design.
      bool oracle_only = !inst.nonconvex_removed.empty() || !inst.cover;
      CHECK(oracle_only);
    }
  }
}

TEST_CASE("command line") {
  auto pentagon = run_cli("solve " + kCorpus + "/pentagon.json --canonical");
  CHECK(pentagon.code == 0);
  auto v = Json::parse(pentagon.out);
  CHECK(v["status"] == "feasible");
  CHECK(v["witness"] == Json::parse("[1,1]"));

  auto pell = run_cli("oracle " + kCorpus + "/pell_n5.json");
  CHECK(pell.code == 0);
  CHECK(Json::parse(pell.out)["witness"] == Json::parse("[2,1]"));
  CHECK(run_cli("solve " + kCorpus + "/pell_n5.json").code == 2);

  auto cells = run_cli("cells " + kCorpus + "/three_lines.json");
  CHECK(cells.code == 0);
  CHECK(Json::parse(cells.out)["cells"] == 7);

  CHECK(run_cli("solve " + kCorpus + "/square_closed_ball.json").code == 1);
  CHECK(run_cli("check-bhc " + kCorpus + "/pentagon.json").code == 0);
  CHECK(run_cli("check-bhc " + kCorpus + "/two_ellipses_no_cover.json").code == 2);
  CHECK(Json::parse(run_cli("hull " + kCorpus + "/pentagon_hull.json").out)["vertices"].size() == 5);
  CHECK(run_cli("decompose " + kCorpus + "/two_balls.json").code == 0);

  auto generated = run_cli("generate --seed 7 --dim 2 --box 4 --removed 2");
  CHECK(generated.code == 0);
  CHECK(parse_instance(Json::parse(generated.out)).removed.size() == 2);

  auto bad = std::filesystem::temp_directory_path() / "rcip_malformed.json";
  std::ofstream(bad) << "{\"dim\": 2, \"box\": ";
  CHECK(run_cli("solve " + bad.string()).code == 2);
  CHECK(run_cli("solve /nonexistent/instance.json").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
}
