#include "rcip/core.hpp"

namespace rcip {

namespace {

void require_same_size(const RationalVector& u, const RationalVector& v, const char* what) {
  if (u.size() != v.size())
    throw DimensionError(std::string(what) + ": length " + std::to_string(u.size()) +
                         " vs " + std::to_string(v.size()));
}

}  // namespace

RationalVector zeros(std::size_t n) { return RationalVector(n); }

RationalVector unit_vector(std::size_t n, std::size_t i) {
  RationalVector v(n);
  v.at(i) = 1;
  return v;
}

Rational dot(const RationalVector& u, const RationalVector& v) {
  require_same_size(u, v, "dot");
  Rational s = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (sgn(u[i]) != 0 && sgn(v[i]) != 0) s += u[i] * v[i];
  return s;
}

Rational norm_sq(const RationalVector& v) { return dot(v, v); }

RationalVector add(const RationalVector& u, const RationalVector& v) {
  require_same_size(u, v, "add");
  RationalVector r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] + v[i];
  return r;
}

RationalVector sub(const RationalVector& u, const RationalVector& v) {
  require_same_size(u, v, "sub");
  RationalVector r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] - v[i];
  return r;
}

RationalVector scale(const RationalVector& v, const Rational& s) {
  RationalVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * s;
  return r;
}

bool is_zero(const RationalVector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(const std::vector<RationalVector>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalVector RationalMatrix::row_vector(std::size_t i) const {
  auto r = row(i);
  return {r.begin(), r.end()};
}

RationalVector RationalMatrix::multiply(const RationalVector& x) const {
  if (x.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  RationalVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn((*this)(i, j)) != 0 && sgn(x[j]) != 0) y[i] += (*this)(i, j) * x[j];
  return y;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

LinearSolve solve_linear(const RationalMatrix& a, const RationalVector& b) {
  if (b.size() != a.rows()) throw DimensionError("solve_linear: rhs length mismatch");
  const std::size_t m = a.rows(), n = a.cols();
  RationalMatrix aug(m, n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && sgn(aug(p, col)) == 0) ++p;
    if (p == m) continue;
    if (p != row)
      for (std::size_t j = 0; j <= n; ++j) std::swap(aug(p, j), aug(row, j));
    Rational inv = 1 / aug(row, col);
    for (std::size_t j = col; j <= n; ++j) aug(row, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || sgn(aug(i, col)) == 0) continue;
      Rational f = aug(i, col);
      for (std::size_t j = col; j <= n; ++j) aug(i, j) -= f * aug(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }

  LinearSolve out;
  out.rank = pivot_col.size();
  for (std::size_t i = out.rank; i < m; ++i)
    if (sgn(aug(i, n)) != 0) return out;
  RationalVector x(n);
  for (std::size_t i = 0; i < out.rank; ++i) x[pivot_col[i]] = aug(i, n);
  out.solution = std::move(x);
  return out;
}

LdltResult ldlt(const RationalMatrix& symmetric) {
  if (symmetric.rows() != symmetric.cols()) throw DimensionError("ldlt: matrix not square");
  if (!symmetric.is_symmetric()) throw DimensionError("ldlt: matrix not symmetric");
  const std::size_t n = symmetric.rows();
  RationalMatrix m = symmetric;
  std::vector<bool> done(n, false);
  LdltResult out;

  for (std::size_t step = 0; step < n; ++step) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      if (sgn(m(i, i)) < 0) return out;
      if (p == n && sgn(m(i, i)) > 0) p = i;
    }
    if (p == n) {
      // Every remaining diagonal entry is zero: PSD only if the remaining
      // block vanishes entirely.
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && sgn(m(i, j)) != 0) return out;
      out.psd = true;
      out.pd = false;
      return out;
    }
    done[p] = true;
    const Rational d = m(p, p);
    out.pivots.push_back(d);
    ++out.rank;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || sgn(m(i, p)) == 0) continue;
      Rational f = m(i, p) / d;
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j]) m(i, j) -= f * m(p, j);
    }
  }
  out.psd = true;
  out.pd = true;
  return out;
}

}  // namespace rcip
