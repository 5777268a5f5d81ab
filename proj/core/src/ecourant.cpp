#include "courant/ecourant.hpp"

#include "courant/errors.hpp"

namespace courant {

namespace {

Vec tensor_slice(const Tensor3& t, std::size_t i, std::size_t j) {
  Vec r(t.d2);
  for (std::size_t k = 0; k < t.d2; ++k) r[k] = t.at(i, j, k);
  return r;
}

} // namespace

Vec ECourantStructure::bracket_of(const Vec& x, const Vec& y) const {
  Vec r(dim_k);
  for (std::size_t i = 0; i < dim_k; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_k; ++j) {
      if (y[j].is_zero()) continue;
      Scalar f = x[i] * y[j];
      for (std::size_t k = 0; k < dim_k; ++k) r[k] += f * bracket.at(i, j, k);
    }
  }
  return r;
}

Vec ECourantStructure::pairing_of(const Vec& x, const Vec& y) const {
  Vec r(dim_e);
  for (std::size_t i = 0; i < dim_k; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_k; ++j) {
      if (y[j].is_zero()) continue;
      Scalar f = x[i] * y[j];
      for (std::size_t a = 0; a < dim_e; ++a) r[a] += f * pairing.at(i, j, a);
    }
  }
  return r;
}

Matrix ECourantStructure::anchor_of(const Vec& x) const {
  Matrix m(dim_e, dim_e);
  for (std::size_t i = 0; i < dim_k; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t a = 0; a < dim_e; ++a)
      for (std::size_t b = 0; b < dim_e; ++b)
        m.at(a, b) += x[i] * anchor.at(i, a, b);
  }
  return m;
}

Matrix pairing_flat(const ECourantStructure& c) {
  Matrix m(c.dim_k * c.dim_e, c.dim_k);
  for (std::size_t i = 0; i < c.dim_k; ++i)
    for (std::size_t a = 0; a < c.dim_e; ++a)
      for (std::size_t j = 0; j < c.dim_k; ++j)
        m.at(i * c.dim_e + a, j) = Scalar(2) * c.pairing.at(i, j, a);
  return m;
}

namespace {

// Right-hand side of the rho_star system for mu: row (i*dim_e + a) is the
// a-th coordinate of rho(e_i) * mu.
Vec rho_star_rhs(const ECourantStructure& c, const Vec& mu) {
  Vec rhs(c.dim_k * c.dim_e);
  for (std::size_t i = 0; i < c.dim_k; ++i)
    for (std::size_t a = 0; a < c.dim_e; ++a) {
      Scalar v;
      for (std::size_t b = 0; b < c.dim_e; ++b)
        v += c.anchor.at(i, a, b) * mu[b];
      rhs[i * c.dim_e + a] = v;
    }
  return rhs;
}

} // namespace

Vec rho_star(const ECourantStructure& c, const Vec& mu) {
  if (mu.size() != c.dim_e)
    throw InputError("rho_star: argument is not an E-vector");
  LinearSolveResult res = solve_linear_full(pairing_flat(c), rho_star_rhs(c, mu));
  if (!res.consistent)
    throw Error("EC-4 violation: rho_star system is inconsistent");
  return res.solution;
}

std::optional<Matrix> rho_star_matrix(const ECourantStructure& c,
                                      std::size_t* bad_index, Scalar* residual) {
  Matrix flat = pairing_flat(c);
  Matrix out(c.dim_k, c.dim_e);
  for (std::size_t m = 0; m < c.dim_e; ++m) {
    LinearSolveResult res =
        solve_linear_full(flat, rho_star_rhs(c, unit_vec(c.dim_e, m)));
    if (!res.consistent) {
      if (bad_index) *bad_index = m;
      if (residual) *residual = res.residual;
      return std::nullopt;
    }
    for (std::size_t j = 0; j < c.dim_k; ++j) out.at(j, m) = res.solution[j];
  }
  return out;
}

CheckReport check_ec_axioms(const ECourantStructure& c) {
  CheckReport report;
  const std::size_t k = c.dim_k, e = c.dim_e;

  // Pairing symmetry.
  {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i)
      for (std::size_t j = i; j < k && ok; ++j) {
        Vec defect = tensor_slice(c.pairing, i, j) - tensor_slice(c.pairing, j, i);
        if (!is_zero(defect)) {
          report.add_fail("pairing-symmetric", {{i, j}, defect});
          ok = false;
        }
      }
    if (ok) report.add_pass("pairing-symmetric");
  }

  // Nondegeneracy: Y -> 2<.,Y> injective.
  {
    std::size_t r = rank(pairing_flat(c));
    if (r == k) {
      report.add_pass("pairing-nondegenerate");
    } else {
      // A kernel vector of the flat map is the witness.
      Subspace ker = kernel_basis(pairing_flat(c));
      report.add_fail("pairing-nondegenerate", {{r}, ker.basis.front()});
    }
  }

  // Leibniz identity of the bracket.
  {
    CheckReport lr = check_leibniz(LeibnizAlgebra(k, c.bracket));
    report.entries.push_back(lr.entries.front());
  }

  // EC-1: rho[X,Y] = [rho X, rho Y].
  {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i)
      for (std::size_t j = 0; j < k && ok; ++j) {
        Matrix lhs = c.anchor_of(tensor_slice(c.bracket, i, j));
        Matrix ri = c.anchor_of(unit_vec(k, i));
        Matrix rj = c.anchor_of(unit_vec(k, j));
        Matrix defect = lhs - (ri * rj - rj * ri);
        if (!defect.is_zero()) {
          report.add_fail("EC-1", {{i, j}, defect.a});
          ok = false;
        }
      }
    if (ok) report.add_pass("EC-1");
  }

  // The dual anchor, shared by EC-2, EC-4 and EC-5.
  std::size_t bad = 0;
  Scalar residual;
  std::optional<Matrix> rs = rho_star_matrix(c, &bad, &residual);

  // EC-2: [X,X] = rho*(<X,X>) on basis vectors and pairwise sums
  // (complete by polarization: the defect is quadratic in X).
  {
    bool ok = true;
    auto defect_at = [&](const Vec& x) {
      Vec rhs = *rs * c.pairing_of(x, x);
      return c.bracket_of(x, x) - rhs;
    };
    if (!rs) {
      report.add_fail("EC-2", {{bad}, {residual}});
      ok = false;
    } else {
      for (std::size_t i = 0; i < k && ok; ++i) {
        Vec d = defect_at(unit_vec(k, i));
        if (!is_zero(d)) {
          report.add_fail("EC-2", {{i, i}, d});
          ok = false;
        }
      }
      for (std::size_t i = 0; i < k && ok; ++i)
        for (std::size_t j = i + 1; j < k && ok; ++j) {
          Vec d = defect_at(unit_vec(k, i) + unit_vec(k, j));
          if (!is_zero(d)) {
            report.add_fail("EC-2", {{i, j}, d});
            ok = false;
          }
        }
      if (ok) report.add_pass("EC-2");
    }
  }

  // EC-3: rho(X)<Y,Z> = <[X,Y],Z> + <Y,[X,Z]>.
  {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      Matrix ri = c.anchor_of(unit_vec(k, i));
      for (std::size_t j = 0; j < k && ok; ++j)
        for (std::size_t l = 0; l < k && ok; ++l) {
          Vec lhs = ri * tensor_slice(c.pairing, j, l);
          Vec rhs = c.pairing_of(tensor_slice(c.bracket, i, j), unit_vec(k, l)) +
                    c.pairing_of(unit_vec(k, j), tensor_slice(c.bracket, i, l));
          Vec defect = lhs - rhs;
          if (!is_zero(defect)) {
            report.add_fail("EC-3", {{i, j, l}, defect});
            ok = false;
          }
        }
    }
    if (ok) report.add_pass("EC-3");
  }

  // EC-4: solvability of rho_star on every E-basis vector.
  if (rs) {
    report.add_pass("EC-4");
  } else {
    report.add_fail("EC-4", {{bad}, {residual}});
  }

  // EC-5: rho o rho* = 0.
  if (rs) {
    bool ok = true;
    for (std::size_t m = 0; m < e && ok; ++m) {
      Vec col(k);
      for (std::size_t j = 0; j < k; ++j) col[j] = rs->at(j, m);
      Matrix img = c.anchor_of(col);
      if (!img.is_zero()) {
        report.add_fail("EC-5", {{m}, img.a});
        ok = false;
      }
    }
    if (ok) report.add_pass("EC-5");
  } else {
    report.add_fail("EC-5", {{bad}, {residual}});
  }

  return report;
}

CheckReport check_anchor_lemma(const ECourantStructure& c) {
  CheckReport report;
  const std::size_t k = c.dim_k, e = c.dim_e;
  std::size_t bad = 0;
  Scalar residual;
  std::optional<Matrix> rs = rho_star_matrix(c, &bad, &residual);
  if (!rs) {
    report.add_fail("lemma-left", {{bad}, {residual}});
    report.add_fail("lemma-right", {{bad}, {residual}});
    return report;
  }
  auto rho_star_of = [&](const Vec& u) { return *rs * u; };

  bool left_ok = true;
  for (std::size_t i = 0; i < k && left_ok; ++i)
    for (std::size_t m = 0; m < e && left_ok; ++m) {
      Vec x = unit_vec(k, i);
      Vec ru = rho_star_of(unit_vec(e, m));
      Vec lhs = c.bracket_of(x, ru);
      Vec rhs = Scalar(2) * rho_star_of(c.pairing_of(x, ru));
      Vec defect = lhs - rhs;
      if (!is_zero(defect)) {
        report.add_fail("lemma-left", {{i, m}, defect});
        left_ok = false;
      }
    }
  if (left_ok) report.add_pass("lemma-left");

  bool right_ok = true;
  for (std::size_t i = 0; i < k && right_ok; ++i)
    for (std::size_t m = 0; m < e && right_ok; ++m) {
      Vec defect = c.bracket_of(rho_star_of(unit_vec(e, m)), unit_vec(k, i));
      if (!is_zero(defect)) {
        report.add_fail("lemma-right", {{m, i}, defect});
        right_ok = false;
      }
    }
  if (right_ok) report.add_pass("lemma-right");
  return report;
}

Subspace orthogonal_complement(const ECourantStructure& c, const Subspace& s) {
  if (s.ambient != c.dim_k)
    throw InputError("orthogonal_complement: subspace is not inside K");
  Matrix constraints(s.basis.size() * c.dim_e, c.dim_k);
  for (std::size_t r = 0; r < s.basis.size(); ++r)
    for (std::size_t a = 0; a < c.dim_e; ++a)
      for (std::size_t i = 0; i < c.dim_k; ++i) {
        Scalar v;
        for (std::size_t j = 0; j < c.dim_k; ++j)
          v += c.pairing.at(i, j, a) * s.basis[r][j];
        constraints.at(r * c.dim_e + a, i) = v;
      }
  return kernel_basis(constraints);
}

CheckReport dirac_check(const ECourantStructure& c, const Subspace& s) {
  if (s.ambient != c.dim_k)
    throw InputError("dirac_check: subspace is not inside K");
  if (!basis_independent(s))
    throw InputError("dirac_check: subspace basis is linearly dependent");
  CheckReport report;

  Subspace perp = orthogonal_complement(c, s);
  if (subspaces_equal(s, perp)) {
    report.add_pass("self-orthogonal");
  } else {
    // Witness: a vector on one side but not the other.
    Vec defect;
    std::size_t idx = 0;
    for (std::size_t r = 0; r < perp.basis.size(); ++r) {
      Vec res = span_residual(s, perp.basis[r]);
      if (!is_zero(res)) {
        defect = res;
        idx = r;
        break;
      }
    }
    if (defect.empty() || is_zero(defect)) {
      for (std::size_t r = 0; r < s.basis.size(); ++r) {
        Vec res = span_residual(perp, s.basis[r]);
        if (!is_zero(res)) {
          defect = res;
          idx = r;
          break;
        }
      }
    }
    report.add_fail("self-orthogonal", {{idx}, defect});
  }

  bool closed = true;
  for (std::size_t i = 0; i < s.basis.size() && closed; ++i)
    for (std::size_t j = 0; j < s.basis.size() && closed; ++j) {
      Vec br = c.bracket_of(s.basis[i], s.basis[j]);
      if (!in_span(s, br)) {
        report.add_fail("bracket-closure", {{i, j}, span_residual(s, br)});
        closed = false;
      }
    }
  if (closed) report.add_pass("bracket-closure");
  return report;
}

ECourantStructure complexify(const ECourantStructure& c) {
  ECourantStructure out = c;
  out.field = Field::gaussian;
  return out;
}

} // namespace courant
