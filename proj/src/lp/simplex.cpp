#include "rcip/lp.hpp"

#include <atomic>

namespace rcip {

namespace {

std::atomic<std::uint64_t> g_lp_solves{0};

// Condensed tableau for: maximize c.x subject to A x <= b, x >= 0.
// Rows 0..m-1 are constraints, row m is the objective, row m+1 the phase-one
// objective. Column n holds the single artificial variable (label -1) and
// column n+1 the right-hand side. Labels 0..n-1 are structural variables,
// n..n+m-1 slacks.
class Tableau {
 public:
  Tableau(const std::vector<RationalVector>& a, const RationalVector& b, const RationalVector& c)
      : m_(b.size()), n_(c.size()), nonbasic_(n_ + 1), basic_(m_),
        d_(m_ + 2, RationalVector(n_ + 2)) {
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < n_; ++j) d_[i][j] = a[i][j];
    for (std::size_t i = 0; i < m_; ++i) {
      basic_[i] = static_cast<long>(n_ + i);
      d_[i][n_] = -1;
      d_[i][n_ + 1] = b[i];
    }
    for (std::size_t j = 0; j < n_; ++j) {
      nonbasic_[j] = static_cast<long>(j);
      d_[m_][j] = -c[j];
    }
    nonbasic_[n_] = -1;
    d_[m_ + 1][n_] = 1;
  }

  // Returns the optimum status and, when optimal, the structural values.
  LpStatus run(RationalVector& x) {
    std::size_t r = 0;
    for (std::size_t i = 1; i < m_; ++i)
      if (d_[i][n_ + 1] < d_[r][n_ + 1]) r = i;
    if (m_ > 0 && sgn(d_[r][n_ + 1]) < 0) {
      pivot(r, n_);
      if (!simplex(2) || sgn(d_[m_ + 1][n_ + 1]) < 0) return LpStatus::Infeasible;
      for (std::size_t i = 0; i < m_; ++i) {
        if (basic_[i] != -1) continue;
        // Drive the artificial out on any nonzero entry; a row of zeros means
        // it stays basic at value zero and never changes again.
        std::size_t s = n_ + 1;
        for (std::size_t j = 0; j <= n_; ++j)
          if (sgn(d_[i][j]) != 0 && (s == n_ + 1 || nonbasic_[j] < nonbasic_[s])) s = j;
        if (s != n_ + 1) pivot(i, s);
      }
    }
    bool bounded = simplex(1);
    x.assign(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basic_[i] >= 0 && static_cast<std::size_t>(basic_[i]) < n_) x[basic_[i]] = d_[i][n_ + 1];
    return bounded ? LpStatus::Optimal : LpStatus::Unbounded;
  }

 private:
  void pivot(std::size_t r, std::size_t s) {
    Rational inv = 1 / d_[r][s];
    Rational factor, tmp;
    RationalVector& pivot_row = d_[r];
    for (std::size_t i = 0; i < m_ + 2; ++i) {
      if (i == r || sgn(d_[i][s]) == 0) continue;
      RationalVector& row = d_[i];
      mpq_mul(factor.get_mpq_t(), row[s].get_mpq_t(), inv.get_mpq_t());
      for (std::size_t j = 0; j < n_ + 2; ++j) {
        if (j == s || sgn(pivot_row[j]) == 0) continue;
        mpq_mul(tmp.get_mpq_t(), pivot_row[j].get_mpq_t(), factor.get_mpq_t());
        mpq_sub(row[j].get_mpq_t(), row[j].get_mpq_t(), tmp.get_mpq_t());
      }
      mpq_neg(row[s].get_mpq_t(), factor.get_mpq_t());
    }
    for (std::size_t j = 0; j < n_ + 2; ++j)
      if (j != s && sgn(pivot_row[j]) != 0)
        mpq_mul(pivot_row[j].get_mpq_t(), pivot_row[j].get_mpq_t(), inv.get_mpq_t());
    pivot_row[s] = inv;
    std::swap(basic_[r], nonbasic_[s]);
  }

  // Bland's rule: entering column is the smallest label with a negative
  // reduced cost; leaving row is the minimum ratio, ties to the smallest label.
  bool simplex(int phase) {
    const std::size_t x = m_ + static_cast<std::size_t>(phase) - 1;
    Rational lhs, rhs;
    for (;;) {
      std::size_t s = n_ + 1;
      for (std::size_t j = 0; j <= n_; ++j) {
        if (nonbasic_[j] == -phase) continue;
        if (sgn(d_[x][j]) < 0 && (s == n_ + 1 || nonbasic_[j] < nonbasic_[s])) s = j;
      }
      if (s == n_ + 1) return true;
      std::size_t r = m_;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(d_[i][s]) <= 0) continue;
        if (r == m_) {
          r = i;
          continue;
        }
        // Compare d[i][rhs]/d[i][s] against d[r][rhs]/d[r][s].
        mpq_mul(lhs.get_mpq_t(), d_[i][n_ + 1].get_mpq_t(), d_[r][s].get_mpq_t());
        mpq_mul(rhs.get_mpq_t(), d_[r][n_ + 1].get_mpq_t(), d_[i][s].get_mpq_t());
        int cmp = mpq_cmp(lhs.get_mpq_t(), rhs.get_mpq_t());
        if (cmp < 0 || (cmp == 0 && basic_[i] < basic_[r])) r = i;
      }
      if (r == m_) return false;
      pivot(r, s);
    }
  }

  std::size_t m_, n_;
  std::vector<long> nonbasic_, basic_;
  std::vector<RationalVector> d_;
};

}  // namespace

void LinearProgram::add(RationalVector a, Relation rel, Rational b) {
  if (a.size() != dim) throw DimensionError("constraint dimension mismatch");
  constraints.push_back({std::move(a), rel, std::move(b)});
}

void LinearProgram::add(const HPolyhedron& p) {
  for (const auto& h : p.rows) add(h);
}

LpResult solve(const LinearProgram& lp) {
  ++g_lp_solves;
  const std::size_t n = lp.dim;
  if (!lp.nonnegative.empty() && lp.nonnegative.size() != n)
    throw DimensionError("nonnegativity flags do not match dimension");
  if (lp.objective && lp.objective->c.size() != n)
    throw DimensionError("objective dimension mismatch");

  // Column map: each original variable maps to one or two tableau columns.
  std::vector<std::size_t> pos_col(n), neg_col(n, SIZE_MAX);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    pos_col[j] = cols++;
    if (lp.nonnegative.empty() || !lp.nonnegative[j]) neg_col[j] = cols++;
  }
  auto expand = [&](const RationalVector& a, bool negate) {
    RationalVector row(cols);
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = negate ? Rational(-a[j]) : a[j];
      row[pos_col[j]] = v;
      if (neg_col[j] != SIZE_MAX) row[neg_col[j]] = -v;
    }
    return row;
  };

  std::vector<RationalVector> rows;
  RationalVector rhs;
  for (const auto& con : lp.constraints) {
    if (con.a.size() != n) throw DimensionError("constraint dimension mismatch");
    if (con.relation != Relation::GreaterEqual) {
      rows.push_back(expand(con.a, false));
      rhs.push_back(con.b);
    }
    if (con.relation != Relation::LessEqual) {
      rows.push_back(expand(con.a, true));
      rhs.push_back(-con.b);
    }
  }
  RationalVector c(cols);
  if (lp.objective) c = expand(lp.objective->c, lp.objective->sense == Sense::Minimize);

  Tableau tableau(rows, rhs, c);
  RationalVector y;
  LpStatus status = tableau.run(y);
  LpResult out;
  out.status = status;
  if (status != LpStatus::Optimal) return out;
  RationalVector x(n);
  for (std::size_t j = 0; j < n; ++j) {
    x[j] = y[pos_col[j]];
    if (neg_col[j] != SIZE_MAX) x[j] -= y[neg_col[j]];
  }
  for (const auto& con : lp.constraints) {
    Rational lhs = dot(con.a, x);
    bool ok = con.relation == Relation::LessEqual      ? lhs <= con.b
              : con.relation == Relation::GreaterEqual ? lhs >= con.b
                                                       : lhs == con.b;
    if (!ok) throw InternalError("simplex returned a point violating a constraint");
  }
  out.value = lp.objective ? dot(lp.objective->c, x) : Rational(0);
  out.point = std::move(x);
  return out;
}

LpResult optimize(const HPolyhedron& p, const RationalVector& c, Sense sense) {
  LinearProgram lp(p.dim);
  lp.add(p);
  lp.objective = Objective{sense, c};
  return solve(lp);
}

std::optional<RationalVector> feasible_point(const HPolyhedron& p) {
  LinearProgram lp(p.dim);
  lp.add(p);
  auto r = solve(lp);
  if (r.status != LpStatus::Optimal) return std::nullopt;
  return r.point;
}

std::optional<RationalVector> interior_point(const HPolyhedron& p) {
  const std::size_t n = p.dim;
  if (p.rows.empty()) return zeros(n);
  LinearProgram lp(n + 1);
  for (const auto& h : p.rows) {
    RationalVector a = h.a;
    a.push_back(1);
    lp.add(std::move(a), Relation::LessEqual, h.b);
  }
  lp.add(unit_vector(n + 1, n), Relation::LessEqual, 1);
  lp.maximize(unit_vector(n + 1, n));
  auto r = solve(lp);
  if (r.status != LpStatus::Optimal || sgn(*r.value) <= 0) return std::nullopt;
  RationalVector x(r.point->begin(), r.point->begin() + static_cast<long>(n));
  if (!p.contains_strictly(x)) throw InternalError("interior point is not strict");
  return x;
}

std::uint64_t lp_solve_count() { return g_lp_solves.load(); }

}  // namespace rcip
