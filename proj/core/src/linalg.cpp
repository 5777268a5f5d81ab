#include "courant/linalg.hpp"

#include <algorithm>

#include "courant/errors.hpp"

namespace courant {

RrefResult rref(const Matrix& m) {
  RrefResult out;
  out.m = m;
  Matrix& a = out.m;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows && a.at(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < a.cols; ++c)
        std::swap(a.at(pivot, c), a.at(row, c));
    Scalar inv = Scalar(1) / a.at(row, col);
    for (std::size_t c = col; c < a.cols; ++c) a.at(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows; ++r) {
      if (r == row || a.at(r, col).is_zero()) continue;
      Scalar f = a.at(r, col);
      for (std::size_t c = col; c < a.cols; ++c)
        a.at(r, c) -= f * a.at(row, c);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

LinearSolveResult solve_linear_full(const Matrix& a, const Vec& b) {
  if (a.rows != b.size())
    throw InputError("solve_linear: matrix has " + std::to_string(a.rows) +
                     " rows but right-hand side has " +
                     std::to_string(b.size()) + " entries");
  Matrix aug(a.rows, a.cols + 1);
  for (std::size_t r = 0; r < a.rows; ++r) {
    for (std::size_t c = 0; c < a.cols; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols) = b[r];
  }
  RrefResult red = rref(aug);
  LinearSolveResult res;
  // An inconsistent system reduces to a row 0 ... 0 | c with c != 0, i.e.
  // a pivot in the augmented column.
  for (std::size_t col : red.pivot_cols) {
    if (col == a.cols) {
      res.consistent = false;
      for (std::size_t r = 0; r < red.m.rows; ++r) {
        bool coeffs_zero = true;
        for (std::size_t c = 0; c < a.cols; ++c)
          if (!red.m.at(r, c).is_zero()) { coeffs_zero = false; break; }
        if (coeffs_zero && !red.m.at(r, a.cols).is_zero()) {
          res.residual = red.m.at(r, a.cols);
          break;
        }
      }
      return res;
    }
  }
  res.consistent = true;
  res.solution = zero_vec(a.cols);
  for (std::size_t p = 0; p < red.pivot_cols.size(); ++p)
    res.solution[red.pivot_cols[p]] = red.m.at(p, a.cols);
  return res;
}

std::optional<Vec> solve_linear(const Matrix& a, const Vec& b) {
  LinearSolveResult res = solve_linear_full(a, b);
  if (!res.consistent) return std::nullopt;
  return res.solution;
}

Subspace kernel_basis(const Matrix& a) {
  RrefResult red = rref(a);
  Subspace s;
  s.ambient = a.cols;
  std::vector<bool> is_pivot(a.cols, false);
  for (std::size_t c : red.pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < a.cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(a.cols);
    v[free] = Scalar(1);
    for (std::size_t p = 0; p < red.pivot_cols.size(); ++p)
      v[red.pivot_cols[p]] = -red.m.at(p, free);
    s.basis.push_back(std::move(v));
  }
  return s;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows != m.cols) throw InputError("inverse: matrix not square");
  std::size_t n = m.rows;
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = Scalar(1);
  }
  RrefResult red = rref(aug);
  if (red.rank < n || red.pivot_cols[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = red.m.at(r, n + c);
  return inv;
}

namespace {

Matrix basis_matrix(const Subspace& s) {
  Matrix m(s.basis.size(), s.ambient);
  for (std::size_t r = 0; r < s.basis.size(); ++r)
    for (std::size_t c = 0; c < s.ambient; ++c) m.at(r, c) = s.basis[r][c];
  return m;
}

} // namespace

Subspace canonicalize(const Subspace& s) {
  RrefResult red = rref(basis_matrix(s));
  Subspace out;
  out.ambient = s.ambient;
  for (std::size_t r = 0; r < red.rank; ++r) {
    Vec v(s.ambient);
    for (std::size_t c = 0; c < s.ambient; ++c) v[c] = red.m.at(r, c);
    out.basis.push_back(std::move(v));
  }
  return out;
}

bool subspaces_equal(const Subspace& s, const Subspace& t) {
  if (s.ambient != t.ambient) return false;
  Subspace cs = canonicalize(s), ct = canonicalize(t);
  return cs.basis == ct.basis;
}

bool in_span(const Subspace& s, const Vec& v) {
  if (v.size() != s.ambient) throw InputError("in_span: ambient mismatch");
  if (s.basis.empty()) return is_zero(v);
  return solve_linear(basis_matrix(s).transposed(), v).has_value();
}

Vec span_residual(const Subspace& s, const Vec& v) {
  Subspace canon = canonicalize(s);
  Vec r = v;
  for (const Vec& row : canon.basis) {
    std::size_t lead = 0;
    while (lead < row.size() && row[lead].is_zero()) ++lead;
    if (lead == row.size()) continue;
    Scalar f = r[lead];  // row has leading 1
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < r.size(); ++c) r[c] -= f * row[c];
  }
  return r;
}

Subspace conjugated(const Subspace& s) {
  Subspace out = s;
  for (Vec& v : out.basis)
    for (Scalar& x : v) x = x.conj();
  return out;
}

bool basis_independent(const Subspace& s) {
  return rank(basis_matrix(s)) == s.basis.size();
}

} // namespace courant
