// Decompositions of a box into polyhedral pieces on which the removed sets
// behave like a single convex set (or vanish), and the resulting
// convex/concave subdivisions.
#pragma once

#include "rcip/arrangement.hpp"
#include "rcip/instance.hpp"
#include "rcip/integer_hull.hpp"

#include <stdexcept>

namespace rcip {

/// A cell of the cover arrangement where the removed sets do not reduce to
/// separable convex unions; points at a bad cover.
struct DecompositionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Cells of the arrangement of the enlarged rows a.x = floor(b) + 1/2 of
/// every Q (a scaled integral with gcd 1) whose interiors miss every
/// enlarged Q. Integer points of K outside all Q are exactly the integer
/// points of K inside the returned cells. Cells are clipped to the box and,
/// when K is a polyhedron, to K.
std::vector<HPolyhedron> decompose_removing_polyhedra(const ConvexSet& k, const std::vector<HPolyhedron>& qs,
                                                      const Rational& box);

/// Members whose interior meets the interior of `cell`, with an edge when
/// two of them have a common interior point inside the cell.
struct IntersectionGraph {
  std::vector<std::size_t> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  /// Connected components, each sorted, ordered by smallest member.
  std::vector<std::vector<std::size_t>> components() const;
};

IntersectionGraph intersection_graph(const HPolyhedron& cell, const std::vector<ConvexSet>& members);

/// cell ∩ (int C_i ∪ ... ) over the component's members.
ConvexSet component_union(const HPolyhedron& cell, const std::vector<ConvexSet>& members,
                          const std::vector<std::size_t>& component);

struct Piece {
  HPolyhedron polyhedron;
  /// Interiors of the piece's members restricted to the piece; absent when
  /// no member interior meets it.
  std::optional<ConvexSet> convex_part;
  std::vector<std::size_t> members;
  std::size_t cell = 0;
  std::vector<int> cell_signs;
  std::optional<std::size_t> component;
  std::optional<std::size_t> subcell;

  std::string provenance() const;
};

struct BhcDecomposition {
  std::vector<Piece> pieces;
  std::size_t cells = 0;
  std::size_t continuous_separations = 0;
  std::size_t integer_separations = 0;
};

/// Piece-count ceiling (m^2 (d + 2n))^n 4^n for m members and d cover
/// hyperplanes.
Integer piece_guard(std::size_t members, std::size_t hyperplanes, std::size_t dim);

/// Splits the box along the cover and, inside each cell, along separating
/// hyperplanes between the connected components of the intersection graph,
/// so every piece meets at most one component. Integer points of the box in
/// some int(C_i) are exactly those in some piece's convex part.
BhcDecomposition decompose_bhc_integer(const std::vector<ConvexSet>& members, const BoundaryCover& cover,
                                       const Rational& box);

struct ConvexPiece {
  ConvexSet set;  // piece ∩ S, convex
  std::string provenance;
};

/// Integer points of `polyhedron` outside `removed` (outside its interior
/// for Removal::Interior).
struct ConcavePiece {
  HPolyhedron polyhedron;
  ConvexSet removed;
  Removal removal = Removal::Closed;
  std::string provenance;
};

struct Subdivision {
  std::size_t dim = 0;
  Rational box;
  std::vector<ConvexPiece> convex_pieces;
  std::vector<ConcavePiece> concave_pieces;
};

/// Intersects every piece with every polyhedral domain of the instance (the
/// box when there are none). Pieces without a convex part become convex
/// pieces.
Subdivision to_subdivision(const std::vector<Piece>& pieces, const Instance& instance);

}  // namespace rcip
