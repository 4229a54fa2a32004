// End-to-end feasibility: routing an instance to a subdivision and
// dispatching every piece to the convex or reverse-convex oracle.
#pragma once

#include "rcip/decompose.hpp"

#include <stdexcept>

namespace rcip {

/// The instance is outside what the exact pipeline handles (non-convex
/// removed sets, no boundary cover, curved domains with curved removals,
/// closed removal of several curved sets).
struct RefusalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolveOptions {
  /// Cross-check the verdict against the brute-force scan; a mismatch throws
  /// InternalError.
  bool verify = false;
  /// Return the lexicographically smallest feasible point overall.
  bool canonical = false;
};

struct TraceEntry {
  std::string provenance;
  std::string kind;     // "convex" or "concave"
  std::string outcome;  // "feasible" or "empty"
};

struct SolveStats {
  std::size_t cells = 0;
  std::size_t pieces = 0;
  std::uint64_t lp_count = 0;
  double wall_ms = 0;
};

struct Verdict {
  bool feasible = false;
  std::optional<LatticePoint> witness;
  std::string path;  // convex, single-set, removing-polyhedra, bhc
  std::vector<TraceEntry> trace;
  SolveStats stats;
};

/// Convex pieces go to convex_int_feasible, concave pieces to
/// reverse_convex_feasible, in order; the first witness wins. With
/// `canonical`, every piece is scanned for its smallest feasible point and
/// the overall smallest is returned. The witness is re-checked against the
/// instance.
Verdict solve_subdivision(const Subdivision& sub, const Instance& instance, bool canonical = false);

/// Builds the subdivision for the instance and solves it. Throws
/// RefusalError, GuardError or DecompositionError when it cannot decide.
Verdict solve(const Instance& instance, const SolveOptions& options = {});

/// The subdivision `solve` would dispatch, with cell and piece counts in
/// `stats` when given.
Subdivision build_subdivision(const Instance& instance, std::string* path = nullptr,
                              SolveStats* stats = nullptr);

}  // namespace rcip
