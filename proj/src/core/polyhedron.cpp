#include "rcip/polyhedron.hpp"

namespace rcip {

HPolyhedron::HPolyhedron(std::size_t n, std::vector<Halfspace> r) : dim(n), rows(std::move(r)) {
  for (const auto& h : rows)
    if (h.a.size() != dim) throw DimensionError("halfspace dimension mismatch");
}

HPolyhedron::HPolyhedron(const RationalMatrix& a, const RationalVector& b) : dim(a.cols()) {
  if (a.rows() != b.size()) throw DimensionError("polyhedron: A and b disagree");
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back({a.row_vector(i), b[i]});
}

HPolyhedron HPolyhedron::box(std::size_t n, const Rational& radius) {
  HPolyhedron p(n);
  for (std::size_t i = 0; i < n; ++i) {
    p.rows.push_back({unit_vector(n, i), radius});
    p.rows.push_back({scale(unit_vector(n, i), -1), radius});
  }
  return p;
}

bool HPolyhedron::contains(const RationalVector& x) const {
  if (x.size() != dim) throw DimensionError("point dimension mismatch");
  for (const auto& h : rows)
    if (!h.contains(x)) return false;
  return true;
}

bool HPolyhedron::contains_strictly(const RationalVector& x) const {
  if (x.size() != dim) throw DimensionError("point dimension mismatch");
  for (const auto& h : rows)
    if (!h.contains_strictly(x)) return false;
  return true;
}

void HPolyhedron::add(Halfspace h) {
  if (h.a.size() != dim) throw DimensionError("halfspace dimension mismatch");
  rows.push_back(std::move(h));
}

HPolyhedron HPolyhedron::intersect(const HPolyhedron& other) const {
  if (other.dim != dim) throw DimensionError("intersecting polyhedra of different dimension");
  HPolyhedron r = *this;
  r.rows.insert(r.rows.end(), other.rows.begin(), other.rows.end());
  return r;
}

bool same_hyperplane(const Hyperplane& h, const Hyperplane& g, bool allow_flip) {
  if (h.a.size() != g.a.size()) return false;
  // Find the ratio g = s * h from the first nonzero coefficient.
  std::size_t k = 0;
  while (k < h.a.size() && sgn(h.a[k]) == 0) ++k;
  if (k == h.a.size() || sgn(g.a[k]) == 0) return false;
  Rational s = g.a[k] / h.a[k];
  if (!allow_flip && sgn(s) < 0) return false;
  for (std::size_t i = 0; i < h.a.size(); ++i)
    if (g.a[i] != s * h.a[i]) return false;
  return g.b == s * h.b;
}

Hyperplane normalize(const Hyperplane& h) {
  Integer l = 1;
  for (const auto& x : h.a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  Integer g = 0;
  for (const auto& x : h.a) {
    Integer v = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (g == 0) throw DimensionError("hyperplane with zero normal");
  Rational s = make_rational(l, g);
  std::size_t k = 0;
  while (sgn(h.a[k]) == 0) ++k;
  if (sgn(h.a[k]) < 0) s = -s;
  return {scale(h.a, s), h.b * s};
}

}  // namespace rcip
