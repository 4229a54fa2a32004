// Exact rational scalars, vectors, matrices and the small linear-algebra
// kernels every other module is built on.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rcip {

using Integer = mpz_class;
/// Arbitrary-precision rational; GMP keeps every result in lowest terms with a
/// positive denominator, and `make_rational` canonicalizes parsed input.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
/// Integer lattice point. Coordinates are bounded by the desk-scale box guard.
using LatticePoint = std::vector<std::int64_t>;

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised when a desk-scale guard (dimension, box radius, scan size) trips.
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An invariant the algorithms rely on was observed broken.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

Rational make_rational(const Integer& num, const Integer& den);
/// num/den in lowest terms. Prefer this over the two-argument mpq_class
/// constructor, which does not canonicalize.
Rational frac(long num, long den);
/// Accepts "p", "p/q", "-p/q" and finite decimals such as "0.25".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

Integer floor(const Rational& r);
Integer ceil(const Rational& r);
bool is_integer(const Rational& r);

/// Exact square root when `s` is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& s);
/// Dyadic bounds lo <= sqrt(s) <= hi with hi - lo <= 2^-bits (exact when
/// `s` is a perfect rational square).
Rational sqrt_lower(const Rational& s, unsigned bits = 40);
Rational sqrt_upper(const Rational& s, unsigned bits = 40);

RationalVector to_rational(const LatticePoint& p);
RationalVector zeros(std::size_t n);
RationalVector unit_vector(std::size_t n, std::size_t i);

Rational dot(const RationalVector& u, const RationalVector& v);
Rational norm_sq(const RationalVector& v);
RationalVector add(const RationalVector& u, const RationalVector& v);
RationalVector sub(const RationalVector& u, const RationalVector& v);
RationalVector scale(const RationalVector& v, const Rational& s);
bool is_zero(const RationalVector& v);

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  /// Row-major nested initializer; throws DimensionError if ragged.
  explicit RationalMatrix(const std::vector<RationalVector>& rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const Rational> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  RationalVector row_vector(std::size_t i) const;

  RationalVector multiply(const RationalVector& x) const;
  RationalMatrix transpose() const;
  bool is_symmetric() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct LinearSolve {
  std::optional<RationalVector> solution;  // absent when inconsistent
  std::size_t rank = 0;
};

/// Exact Gaussian elimination. When the system is consistent, returns one
/// solution (free variables set to zero) together with the rank of A.
LinearSolve solve_linear(const RationalMatrix& a, const RationalVector& b);

struct LdltResult {
  bool psd = false;
  bool pd = false;
  std::size_t rank = 0;
  RationalVector pivots;  // positive pivots in elimination order
};

/// Symmetric elimination with diagonal pivoting; decides positive
/// (semi)definiteness exactly. Throws DimensionError on non-square or
/// non-symmetric input.
LdltResult ldlt(const RationalMatrix& symmetric);

}  // namespace rcip
