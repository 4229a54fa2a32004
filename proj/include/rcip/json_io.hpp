// JSON reading and writing for instances, arrangements, verdicts and
// subdivisions. Rationals are strings "p/q" or "p" (plain integers are also
// accepted on input).
#pragma once

#include "rcip/solver.hpp"

#include <json.hpp>

#include <stdexcept>

namespace rcip {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent input.
struct FormatError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Rational rational_from_json(const Json& j);
RationalVector vector_from_json(const Json& j, std::optional<std::size_t> dim = std::nullopt);
Json to_json(const Rational& r);
Json to_json(const RationalVector& v);
Json to_json(const LatticePoint& p);
Json to_json(const HPolyhedron& p);

/// Set types: ball {center, radius}, quadratic {Q, b, c}, polyhedron {A, b},
/// box {lo, hi}, intersection {members}, bhc_form {alpha, h1: {a, c}, h2}.
/// `name` is optional on every set.
ConvexSet parse_set(const Json& j, std::size_t dim);
Json to_json(const ConvexSet& c);

/// {"name", "dim", "box", "domains", "removed", "semantics", "cover"}.
/// A removed quadratic whose Q is not positive semidefinite becomes a
/// non-convex removed region.
Instance parse_instance(const Json& j);
Json to_json(const Instance& inst);
Instance load_instance(const std::string& path);

BoundaryCover parse_cover(const Json& j, std::size_t dim);
Json to_json(const BoundaryCover& cover);

/// {"dim", "hyperplanes": [{"a", "b"}], "box"}; box optional.
Arrangement parse_arrangement(const Json& j);

/// Stats are omitted unless `with_stats`, so verdicts of the same instance
/// compare byte for byte.
Json to_json(const Verdict& v, bool with_stats);
Json to_json(const Subdivision& sub);
Json to_json(const CoverReport& report);

Json read_json_file(const std::string& path);

}  // namespace rcip
