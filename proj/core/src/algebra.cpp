#include "courant/algebra.hpp"

#include "courant/errors.hpp"

namespace courant {

namespace {

Vec bracket_apply(const Tensor3& c, const Vec& x, const Vec& y) {
  Vec r(c.d2);
  for (std::size_t i = 0; i < c.d0; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < c.d1; ++j) {
      if (y[j].is_zero()) continue;
      Scalar f = x[i] * y[j];
      for (std::size_t k = 0; k < c.d2; ++k) r[k] += f * c.at(i, j, k);
    }
  }
  return r;
}

Vec basis_bracket(const Tensor3& c, std::size_t i, std::size_t j) {
  Vec r(c.d2);
  for (std::size_t k = 0; k < c.d2; ++k) r[k] = c.at(i, j, k);
  return r;
}

} // namespace

Vec LeibnizAlgebra::apply(const Vec& x, const Vec& y) const {
  return bracket_apply(bracket, x, y);
}

Vec LieAlgebra::apply(const Vec& x, const Vec& y) const {
  return bracket_apply(bracket, x, y);
}

Matrix Representation::op(std::size_t i) const {
  Matrix m(module_dim, module_dim);
  for (std::size_t a = 0; a < module_dim; ++a)
    for (std::size_t b = 0; b < module_dim; ++b) m.at(a, b) = action.at(i, a, b);
  return m;
}

Matrix Representation::op_of(const Vec& x) const {
  Matrix m(module_dim, module_dim);
  for (std::size_t i = 0; i < algebra.dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t a = 0; a < module_dim; ++a)
      for (std::size_t b = 0; b < module_dim; ++b)
        m.at(a, b) += x[i] * action.at(i, a, b);
  }
  return m;
}

CheckReport check_leibniz(const LeibnizAlgebra& l) {
  CheckReport report;
  const std::size_t n = l.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec lhs = l.apply(unit_vec(n, i), basis_bracket(l.bracket, j, k));
        Vec rhs = l.apply(basis_bracket(l.bracket, i, j), unit_vec(n, k)) +
                  l.apply(unit_vec(n, j), basis_bracket(l.bracket, i, k));
        Vec defect = lhs - rhs;
        if (!is_zero(defect)) {
          report.add_fail("leibniz", {{i, j, k}, defect});
          return report;
        }
      }
  report.add_pass("leibniz");
  return report;
}

CheckReport check_lie(const LieAlgebra& l) {
  CheckReport report;
  const std::size_t n = l.dim;
  bool antisym = true;
  for (std::size_t i = 0; i < n && antisym; ++i)
    for (std::size_t j = i; j < n && antisym; ++j) {
      Vec defect = basis_bracket(l.bracket, i, j) + basis_bracket(l.bracket, j, i);
      if (!is_zero(defect)) {
        report.add_fail("antisymmetry", {{i, j}, defect});
        antisym = false;
      }
    }
  if (antisym) report.add_pass("antisymmetry");

  bool jacobi = true;
  for (std::size_t i = 0; i < n && jacobi; ++i)
    for (std::size_t j = 0; j < n && jacobi; ++j)
      for (std::size_t k = 0; k < n && jacobi; ++k) {
        Vec defect = l.apply(unit_vec(n, i), basis_bracket(l.bracket, j, k)) +
                     l.apply(unit_vec(n, j), basis_bracket(l.bracket, k, i)) +
                     l.apply(unit_vec(n, k), basis_bracket(l.bracket, i, j));
        if (!is_zero(defect)) {
          report.add_fail("jacobi", {{i, j, k}, defect});
          jacobi = false;
        }
      }
  if (jacobi) report.add_pass("jacobi");
  return report;
}

Tensor3 nijenhuis_tensor(const Endomorphism& n, const LeibnizAlgebra& l) {
  if (n.dim != l.dim)
    throw InputError("nijenhuis_tensor: endomorphism dimension " +
                     std::to_string(n.dim) + " does not match algebra dimension " +
                     std::to_string(l.dim));
  const std::size_t d = l.dim;
  Tensor3 t(d, d, d);
  for (std::size_t i = 0; i < d; ++i) {
    Vec ni = n.m * unit_vec(d, i);
    for (std::size_t j = 0; j < d; ++j) {
      Vec nj = n.m * unit_vec(d, j);
      Vec inner = l.apply(ni, unit_vec(d, j)) + l.apply(unit_vec(d, i), nj) -
                  (n.m * basis_bracket(l.bracket, i, j));
      Vec value = l.apply(ni, nj) - (n.m * inner);
      for (std::size_t k = 0; k < d; ++k) t.at(i, j, k) = value[k];
    }
  }
  return t;
}

CheckReport check_complex_structure(const Endomorphism& d, const LieAlgebra& l) {
  if (d.dim != l.dim)
    throw InputError("check_complex_structure: dimension mismatch");
  CheckReport report;
  const std::size_t n = l.dim;

  Matrix sq = d.m * d.m + Matrix::identity(n);
  bool square_ok = sq.is_zero();
  if (square_ok) {
    report.add_pass("square-is-minus-id");
  } else {
    for (std::size_t c = 0; c < n; ++c) {
      Vec col(n);
      for (std::size_t r = 0; r < n; ++r) col[r] = sq.at(r, c);
      if (!is_zero(col)) {
        report.add_fail("square-is-minus-id", {{c}, col});
        break;
      }
    }
  }

  bool compat = true;
  for (std::size_t i = 0; i < n && compat; ++i)
    for (std::size_t j = 0; j < n && compat; ++j) {
      Vec defect = d.m * basis_bracket(l.bracket, i, j) -
                   l.apply(unit_vec(n, i), d.m * unit_vec(n, j));
      if (!is_zero(defect)) {
        report.add_fail("bracket-linearity", {{i, j}, defect});
        compat = false;
      }
    }
  if (compat) report.add_pass("bracket-linearity");
  return report;
}

CheckReport check_representation(const Representation& r) {
  CheckReport report;
  const std::size_t n = r.algebra.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix lhs = r.op_of(basis_bracket(r.algebra.bracket, i, j));
      Matrix rhs = r.op(i) * r.op(j) - r.op(j) * r.op(i);
      Matrix defect = lhs - rhs;
      if (!defect.is_zero()) {
        report.add_fail("representation", {{i, j}, defect.a});
        return report;
      }
    }
  report.add_pass("representation");
  return report;
}

LieAlgebra aff1() {
  Tensor3 c(2, 2, 2);
  c.at(0, 1, 1) = Scalar(1);
  c.at(1, 0, 1) = Scalar(-1);
  return LieAlgebra(2, c);
}

LieAlgebra gl_commutator_algebra(std::size_t n) {
  const std::size_t d = n * n;
  auto idx = [n](std::size_t a, std::size_t b) { return a * n + b; };
  Tensor3 c(d, d, d);
  // [E_(a,i), E_(b,k)] = delta_(i,b) E_(a,k) - delta_(k,a) E_(b,i)
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t k = 0; k < n; ++k) {
          if (i == b) c.at(idx(a, i), idx(b, k), idx(a, k)) += Scalar(1);
          if (k == a) c.at(idx(a, i), idx(b, k), idx(b, i)) -= Scalar(1);
        }
  return LieAlgebra(d, c);
}

Representation adjoint_rep(const LieAlgebra& g) {
  Representation r;
  r.algebra = g;
  r.module_dim = g.dim;
  r.action = Tensor3(g.dim, g.dim, g.dim);
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t a = 0; a < g.dim; ++a)
      for (std::size_t b = 0; b < g.dim; ++b)
        r.action.at(i, a, b) = g.bracket.at(i, b, a);
  return r;
}

Representation trivial_rep(const LieAlgebra& g, std::size_t m) {
  Representation r;
  r.algebra = g;
  r.module_dim = m;
  r.action = Tensor3(g.dim, m, m);
  return r;
}

} // namespace courant
