// Maximal cells of a rational hyperplane arrangement inside a polyhedral
// region.
#pragma once

#include "rcip/lp.hpp"

namespace rcip {

struct Arrangement {
  std::size_t dim = 0;
  /// Distinct hyperplanes, first-seen orientation kept.
  std::vector<Hyperplane> hyperplanes;
  /// For each input hyperplane, the index of its representative and +1/-1
  /// for whether the representative has the same or the opposite orientation.
  std::vector<std::size_t> input_to_distinct;
  std::vector<int> input_orientation;
  /// Cells are clipped to this region; no rows means all of R^n.
  HPolyhedron region;
};

/// Throws DimensionError for a zero normal or a size mismatch.
Arrangement make_arrangement(std::size_t dim, const std::vector<Hyperplane>& hyperplanes,
                             HPolyhedron region);
Arrangement make_arrangement(std::size_t dim, const std::vector<Hyperplane>& hyperplanes,
                             std::optional<Rational> box_radius = std::nullopt);

struct Cell {
  /// Per distinct hyperplane: -1 for the a.x <= b side, +1 for a.x >= b.
  std::vector<int> signs;
  /// Closure of the cell: region rows followed by one row per hyperplane.
  HPolyhedron polyhedron;
  /// Strictly inside every row of `polyhedron`.
  RationalVector witness;
};

/// All full-dimensional cells, each exactly once, sorted by sign vector.
/// Breadth-first search from a seed cell, flipping one sign at a time and
/// testing each candidate with an interior-point LP.
std::vector<Cell> maximal_cells(const Arrangement& arr);

/// Indices of the cells whose closure contains x.
std::vector<std::size_t> locate(const std::vector<Cell>& cells, const RationalVector& x);

/// The closed cell polyhedron for a sign vector.
HPolyhedron cell_polyhedron(const Arrangement& arr, const std::vector<int>& signs);

}  // namespace rcip
