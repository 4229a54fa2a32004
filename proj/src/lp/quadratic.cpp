#include "rcip/lp.hpp"

#include <algorithm>

namespace rcip {

namespace {

Rational quadratic_value(const RationalMatrix& q, const RationalVector& b, const Rational& c,
                         const RationalVector& x) {
  return dot(x, q.multiply(x)) + dot(b, x) + c;
}

bool independent_of(const std::vector<RationalVector>& rows, const RationalVector& a) {
  std::vector<RationalVector> all = rows;
  all.push_back(a);
  RationalMatrix m(all);
  return solve_linear(m, zeros(all.size())).rank == all.size();
}

}  // namespace

QuadraticProgramResult minimize_quadratic(const RationalMatrix& q, const RationalVector& b,
                                          const Rational& c, const HPolyhedron& p) {
  const std::size_t n = p.dim;
  if (q.rows() != n || q.cols() != n || b.size() != n)
    throw DimensionError("quadratic program dimension mismatch");
  if (!ldlt(q).pd) throw std::invalid_argument("minimize_quadratic needs a positive definite Q");

  QuadraticProgramResult out;
  auto start = feasible_point(p);
  if (!start) return out;
  RationalVector x = std::move(*start);

  const std::size_t m = p.rows.size();
  std::vector<std::size_t> working;
  {
    std::vector<RationalVector> picked;
    for (std::size_t i = 0; i < m && picked.size() < n; ++i) {
      if (dot(p.rows[i].a, x) != p.rows[i].b || is_zero(p.rows[i].a)) continue;
      if (!independent_of(picked, p.rows[i].a)) continue;
      picked.push_back(p.rows[i].a);
      working.push_back(i);
    }
  }

  const std::size_t iteration_cap = 1000 + 50 * (m + n);
  for (std::size_t iter = 0; iter < iteration_cap; ++iter) {
    // KKT system [2Q  A_W'; A_W 0] [step; mu] = [-(2Qx + b); 0].
    const std::size_t k = working.size();
    RationalMatrix kkt(n + k, n + k);
    RationalVector rhs(n + k);
    RationalVector grad = add(scale(q.multiply(x), 2), b);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) kkt(i, j) = 2 * q(i, j);
      rhs[i] = -grad[i];
    }
    for (std::size_t w = 0; w < k; ++w) {
      const auto& a = p.rows[working[w]].a;
      for (std::size_t j = 0; j < n; ++j) {
        kkt(n + w, j) = a[j];
        kkt(j, n + w) = a[j];
      }
    }
    auto sol = solve_linear(kkt, rhs);
    if (!sol.solution || sol.rank != n + k) throw InternalError("singular KKT system");
    RationalVector step(sol.solution->begin(), sol.solution->begin() + static_cast<long>(n));

    if (is_zero(step)) {
      std::size_t drop = k;
      for (std::size_t w = 0; w < k; ++w) {
        const Rational& mu = (*sol.solution)[n + w];
        if (sgn(mu) >= 0) continue;
        if (drop == k || mu < (*sol.solution)[n + drop] ||
            (mu == (*sol.solution)[n + drop] && working[w] < working[drop]))
          drop = w;
      }
      if (drop == k) {
        out.status = LpStatus::Optimal;
        out.value = quadratic_value(q, b, c, x);
        out.point = std::move(x);
        return out;
      }
      working.erase(working.begin() + static_cast<long>(drop));
      continue;
    }

    Rational alpha = 1;
    std::size_t blocking = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (std::find(working.begin(), working.end(), i) != working.end()) continue;
      Rational ap = dot(p.rows[i].a, step);
      if (sgn(ap) <= 0) continue;
      Rational t = (p.rows[i].b - dot(p.rows[i].a, x)) / ap;
      if (t < alpha || (t == alpha && blocking == m)) {
        alpha = t;
        blocking = i;
      }
    }
    x = add(x, scale(step, alpha));
    if (blocking != m) working.push_back(blocking);
  }
  throw InternalError("active-set iteration cap reached");
}

}  // namespace rcip
