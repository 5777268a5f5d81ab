#include "courant/gcs.hpp"

#include "courant/errors.hpp"
#include "courant/linalg.hpp"

namespace courant {

namespace {

Vec slice(const Tensor3& t, std::size_t i, std::size_t j) {
  Vec r(t.d2);
  for (std::size_t k = 0; k < t.d2; ++k) r[k] = t.at(i, j, k);
  return r;
}

bool antisymmetric3(const Tensor3& t) {
  for (std::size_t i = 0; i < t.d0; ++i)
    for (std::size_t j = i; j < t.d1; ++j)
      for (std::size_t k = 0; k < t.d2; ++k)
        if (t.at(i, j, k) + t.at(j, i, k) != Scalar(0)) return false;
  return true;
}

// pi^sharp(u) in gl(V): v -> pi(u, v).
Matrix pi_sharp_of(const Tensor3& pi, const Vec& u) {
  const std::size_t n = pi.d0;
  Matrix m(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    if (u[c].is_zero()) continue;
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t a = 0; a < n; ++a)
        m.at(a, b) += u[c] * pi.at(c, b, a);
  }
  return m;
}

Vec gl_vec(const Matrix& m) { return m.a; }

Matrix vec_gl(const Vec& v, std::size_t n) {
  Matrix m(n, n);
  m.a = v;
  return m;
}

// [u,v]_pi = L_{pi u} v - L_{pi v} u - d<pi^sharp(u), v>. At a point base
// the Lie derivative is the matrix action and the jet term cancels the
// first summand, leaving pi(u,v) for antisymmetric pi.
Vec pi_bracket(const Tensor3& pi, const Vec& u, const Vec& v) {
  Vec lie_uv = pi_sharp_of(pi, u) * v;
  Vec lie_vu = pi_sharp_of(pi, v) * u;
  return lie_uv - lie_vu - lie_uv;
}

Witness first_fail_witness(const CheckReport& r) {
  for (const CheckEntry& e : r.entries)
    if (!e.pass && e.witness) return *e.witness;
  return {{0}, {Scalar(1)}};
}

const char* verdict(bool b) { return b ? "pass" : "fail"; }

} // namespace

CheckReport check_gcs_algebraic(const ECourantStructure& c, const Matrix& j) {
  if (j.rows != c.dim_k || j.cols != c.dim_k)
    throw InputError("check_gcs_algebraic: J is not a square matrix on K");
  CheckReport report;
  const std::size_t k = c.dim_k;

  Matrix sq = j * j + Matrix::identity(k);
  if (sq.is_zero()) {
    report.add_pass("square-is-minus-id");
  } else {
    for (std::size_t col = 0; col < k; ++col) {
      Vec v(k);
      for (std::size_t r = 0; r < k; ++r) v[r] = sq.at(r, col);
      if (!is_zero(v)) {
        report.add_fail("square-is-minus-id", {{col}, v});
        break;
      }
    }
  }

  bool pairing_ok = true;
  for (std::size_t a = 0; a < k && pairing_ok; ++a) {
    Vec ja = j * unit_vec(k, a);
    for (std::size_t b = a; b < k && pairing_ok; ++b) {
      Vec defect = c.pairing_of(ja, j * unit_vec(k, b)) -
                   c.pairing_of(unit_vec(k, a), unit_vec(k, b));
      if (!is_zero(defect)) {
        report.add_fail("pairing-invariance", {{a, b}, defect});
        pairing_ok = false;
      }
    }
  }
  if (pairing_ok) report.add_pass("pairing-invariance");

  bool skew_ok = true;
  for (std::size_t a = 0; a < k && skew_ok; ++a)
    for (std::size_t b = a; b < k && skew_ok; ++b) {
      Vec defect = c.pairing_of(j * unit_vec(k, a), unit_vec(k, b)) +
                   c.pairing_of(unit_vec(k, a), j * unit_vec(k, b));
      if (!is_zero(defect)) {
        report.add_fail("skew-adjoint", {{a, b}, defect});
        skew_ok = false;
      }
    }
  if (skew_ok) report.add_pass("skew-adjoint");

  return report;
}

CheckReport check_gcs_integrable(const ECourantStructure& c, const Matrix& j) {
  CheckReport report;
  CheckReport algebraic = check_gcs_algebraic(c, j);
  if (!algebraic.passed()) {
    report.add_fail("algebraic-precondition", first_fail_witness(algebraic));
    return report;
  }
  const std::size_t k = c.dim_k;
  bool ok = true;
  for (std::size_t a = 0; a < k && ok; ++a) {
    Vec ea = unit_vec(k, a);
    Vec ja = j * ea;
    for (std::size_t b = 0; b < k && ok; ++b) {
      Vec eb = unit_vec(k, b);
      Vec jb = j * eb;
      Vec defect = c.bracket_of(ja, jb) - c.bracket_of(ea, eb) -
                   (j * (c.bracket_of(ja, eb) + c.bracket_of(ea, jb)));
      if (!is_zero(defect)) {
        report.add_fail("integrability", {{a, b}, defect});
        ok = false;
      }
    }
  }
  if (ok) report.add_pass("integrability");
  return report;
}

Matrix hom_right_compose(std::size_t dim_a1, std::size_t dim_a0, const Matrix& d) {
  if (d.rows != dim_a0 || d.cols != dim_a0)
    throw InputError("hom_right_compose: D has the wrong shape");
  Matrix m(dim_a1 * dim_a0, dim_a1 * dim_a0);
  for (std::size_t a = 0; a < dim_a1; ++a)
    for (std::size_t i = 0; i < dim_a0; ++i)
      for (std::size_t k = 0; k < dim_a0; ++k)
        m.at(a * dim_a0 + i, a * dim_a0 + k) = d.at(k, i);
  return m;
}

Matrix assemble_omni_j(std::size_t n, const Tensor3& pi, const Matrix& d) {
  const std::size_t k = n * n + n;
  const std::size_t voff = n * n;
  Matrix j(k, k);
  Matrix rd = hom_right_compose(n, n, d);
  for (std::size_t r = 0; r < voff; ++r)
    for (std::size_t c = 0; c < voff; ++c) j.at(r, c) = -rd.at(r, c);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t c = 0; c < n; ++c)
        j.at(a * n + i, voff + c) = pi.at(c, i, a);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) j.at(voff + a, voff + b) = d.at(a, b);
  return j;
}

namespace {

void validate_omni_data(std::size_t n, const OmniGcsData& data) {
  if (data.pi.d0 != n || data.pi.d1 != n || data.pi.d2 != n)
    throw InputError("omni gcs data: pi must have extents [n,n,n]");
  if (!antisymmetric3(data.pi))
    throw InputError("omni gcs data: pi must be antisymmetric");
  if (data.d.rows != n || data.d.cols != n)
    throw InputError("omni gcs data: D must be n x n");
  if (!data.sigma.a.empty()) {
    if (data.sigma.d0 != n * n || data.sigma.d1 != n * n || data.sigma.d2 != n)
      throw InputError("omni gcs data: sigma must have extents [n^2,n^2,n]");
    if (!data.sigma.is_zero())
      throw InputError(
          "omni gcs data: sigma must vanish at a point base; the constrained "
          "space of such forms on gl(V) is zero");
  }
}

} // namespace

GeneralizedComplexStructure build_omni_gcs(std::size_t n, const OmniGcsData& data,
                                           std::size_t max_dim) {
  if (n * n + n > max_dim)
    throw InputError("build_omni_gcs: dimension exceeds the guard");
  validate_omni_data(n, data);
  Matrix sq = data.d * data.d + Matrix::identity(n);
  if (!sq.is_zero())
    throw InputError("build_omni_gcs: not almost complex (D^2 != -id)");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vec lhs = pi_sharp_of(data.pi, data.d * unit_vec(n, a)) * unit_vec(n, b);
      Vec rhs = pi_sharp_of(data.pi, unit_vec(n, a)) * (data.d * unit_vec(n, b));
      if (lhs != rhs)
        throw InputError(
            "build_omni_gcs: not almost complex (pi(Du,v) != pi(u,Dv) at (u,v)=(" +
            std::to_string(a) + "," + std::to_string(b) + "))");
    }
  GeneralizedComplexStructure g;
  g.j = assemble_omni_j(n, data.pi, data.d);
  g.omni = data;
  return g;
}

CheckReport check_complex_lie_correspondence(std::size_t n, const OmniGcsData& data) {
  validate_omni_data(n, data);
  CheckReport report;

  CheckReport pi_lie = check_lie(LieAlgebra(n, data.pi));
  bool direct_pi = pi_lie.passed();
  bool direct_dsq = (data.d * data.d + Matrix::identity(n)).is_zero();
  bool direct_compat = true;
  for (std::size_t a = 0; a < n && direct_compat; ++a)
    for (std::size_t b = 0; b < n && direct_compat; ++b) {
      Vec lhs = data.d * slice(data.pi, a, b);
      Vec rhs = pi_sharp_of(data.pi, unit_vec(n, a)) * (data.d * unit_vec(n, b));
      if (lhs != rhs) direct_compat = false;
    }
  bool direct = direct_pi && direct_dsq && direct_compat;

  ECourantStructure omni = build_omni(n);
  Matrix j = assemble_omni_j(n, data.pi, data.d);
  CheckReport algebraic = check_gcs_algebraic(omni, j);
  CheckReport integrable = check_gcs_integrable(omni, j);
  bool generic = algebraic.passed() && integrable.passed();

  report.add("correspondence-agreement", direct == generic,
             {{direct ? std::size_t(1) : std::size_t(0),
               generic ? std::size_t(1) : std::size_t(0)},
              {Scalar(1)}});
  report.note("direct-pi-jacobi", verdict(direct_pi));
  report.note("direct-d-square", verdict(direct_dsq));
  report.note("direct-d-bracket-compat", verdict(direct_compat));
  report.note("direct-verdict", verdict(direct));
  report.note("generic-algebraic", verdict(algebraic.passed()));
  report.note("generic-integrable", verdict(integrable.passed()));
  report.note("generic-verdict", verdict(generic));
  return report;
}

std::pair<ECourantStructure, GeneralizedComplexStructure> build_nijenhuis_gcs(
    const LieAlgebra& g, const Representation& rep, const Endomorphism& d,
    std::size_t max_dim) {
  if (rep.algebra.dim != g.dim || rep.algebra.bracket != g.bracket)
    throw InputError("build_nijenhuis_gcs: representation is not over g");
  if (d.dim != g.dim)
    throw InputError("build_nijenhuis_gcs: D is not an endomorphism of g");
  if (!(d.m * d.m + Matrix::identity(g.dim)).is_zero())
    throw InputError("build_nijenhuis_gcs: not almost complex (D^2 != -id)");

  ECourantStructure c = build_lie2_courant(module_to_lie2(g, rep), max_dim);
  const std::size_t n0 = g.dim, n1 = rep.module_dim;
  const std::size_t nh = n1 * n0;
  Matrix j(c.dim_k, c.dim_k);
  Matrix rd = hom_right_compose(n1, n0, d.m);
  for (std::size_t r = 0; r < nh; ++r)
    for (std::size_t cc = 0; cc < nh; ++cc) j.at(r, cc) = -rd.at(r, cc);
  for (std::size_t a = 0; a < n0; ++a)
    for (std::size_t b = 0; b < n0; ++b) j.at(nh + a, nh + b) = d.m.at(a, b);

  GeneralizedComplexStructure out;
  out.j = std::move(j);
  return {std::move(c), std::move(out)};
}

LieAlgebra induced_bracket(const ECourantStructure& c, const Matrix& j) {
  CheckReport integ = check_gcs_integrable(c, j);
  if (!integ.passed())
    throw Error("induced_bracket: J is not an integrable generalized complex structure");
  std::optional<Matrix> rs = rho_star_matrix(c);
  if (!rs) throw Error("induced_bracket: EC-4 violation in the ambient structure");
  Tensor3 t(c.dim_e, c.dim_e, c.dim_e);
  for (std::size_t a = 0; a < c.dim_e; ++a) {
    Vec ra(c.dim_k), jra;
    for (std::size_t r = 0; r < c.dim_k; ++r) ra[r] = rs->at(r, a);
    jra = j * ra;
    for (std::size_t b = 0; b < c.dim_e; ++b) {
      Vec rb(c.dim_k);
      for (std::size_t r = 0; r < c.dim_k; ++r) rb[r] = rs->at(r, b);
      Vec value = Scalar(2) * c.pairing_of(jra, rb);
      for (std::size_t k = 0; k < c.dim_e; ++k) t.at(a, b, k) = value[k];
    }
  }
  return LieAlgebra(c.dim_e, t);
}

DiracSubspace eigenbundle(const ECourantStructure& c, const Matrix& j) {
  CheckReport algebraic = check_gcs_algebraic(c, j);
  if (!algebraic.passed())
    throw InputError("eigenbundle: J is not a generalized almost complex structure");
  Matrix m = complexify(j);
  for (std::size_t r = 0; r < m.rows; ++r) m.at(r, r) -= Scalar::i();
  return canonicalize(kernel_basis(m));
}

CheckReport check_automorphism(const ECourantStructure& c, const Matrix& t) {
  if (t.rows != c.dim_k || t.cols != c.dim_k)
    throw InputError("check_automorphism: T is not a square matrix on K");
  std::optional<Matrix> tinv = inverse(t);
  if (!tinv) throw InputError("check_automorphism: T is singular");
  CheckReport report;
  const std::size_t k = c.dim_k, e = c.dim_e;

  // Induced map on E: <Tx, Ty> = g <x, y> as a linear system in g.
  Matrix coeffs(k * k * e, e * e);
  Vec rhs(k * k * e);
  std::vector<Vec> timg(k);
  for (std::size_t i = 0; i < k; ++i) timg[i] = t * unit_vec(k, i);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t jx = 0; jx < k; ++jx) {
      Vec target = c.pairing_of(timg[i], timg[jx]);
      for (std::size_t al = 0; al < e; ++al) {
        std::size_t row = (i * k + jx) * e + al;
        for (std::size_t b = 0; b < e; ++b)
          coeffs.at(row, al * e + b) = c.pairing.at(i, jx, b);
        rhs[row] = target[al];
      }
    }
  LinearSolveResult sol = solve_linear_full(coeffs, rhs);
  std::optional<Matrix> g;
  std::optional<Matrix> ginv;
  if (sol.consistent) {
    Matrix gm(e, e);
    gm.a = sol.solution;
    ginv = inverse(gm);
    if (ginv) {
      g = gm;
      report.add_pass("pairing-induced-map");
    } else {
      Subspace ker = kernel_basis(gm);
      report.add_fail("pairing-induced-map", {{0}, ker.basis.front()});
    }
  } else {
    report.add_fail("pairing-induced-map", {{0}, {sol.residual}});
  }

  bool bracket_ok = true;
  for (std::size_t i = 0; i < k && bracket_ok; ++i)
    for (std::size_t jx = 0; jx < k && bracket_ok; ++jx) {
      Vec defect = t * c.bracket_of(unit_vec(k, i), unit_vec(k, jx)) -
                   c.bracket_of(timg[i], timg[jx]);
      if (!is_zero(defect)) {
        report.add_fail("bracket-preservation", {{i, jx}, defect});
        bracket_ok = false;
      }
    }
  if (bracket_ok) report.add_pass("bracket-preservation");

  if (g) {
    bool anchor_ok = true;
    for (std::size_t i = 0; i < k && anchor_ok; ++i) {
      Matrix defect = c.anchor_of(timg[i]) - (*g) * c.anchor_of(unit_vec(k, i)) * (*ginv);
      if (!defect.is_zero()) {
        report.add_fail("anchor-equivariance", {{i}, defect.a});
        anchor_ok = false;
      }
    }
    if (anchor_ok) report.add_pass("anchor-equivariance");
  } else {
    report.add_fail("anchor-equivariance",
                    {{0}, {Scalar(1)}});
    report.note("anchor-equivariance", "not evaluated: no induced map on E");
  }
  return report;
}

GeneralizedComplexStructure transport_by_automorphism(const ECourantStructure& c,
                                                      const Matrix& t,
                                                      const Matrix& j) {
  CheckReport aut = check_automorphism(c, t);
  if (!aut.passed())
    throw InputError("transport_by_automorphism: T is not an automorphism");
  Matrix tinv = *inverse(t);
  GeneralizedComplexStructure out;
  out.j = t * j * tinv;
  return out;
}

Matrix omni_transport_matrix(std::size_t n, const Matrix& g) {
  if (g.rows != n || g.cols != n)
    throw InputError("omni_transport_matrix: g must be n x n");
  std::optional<Matrix> gi = inverse(g);
  if (!gi) throw InputError("omni_transport_matrix: g is singular");
  const std::size_t voff = n * n;
  Matrix t(voff + n, voff + n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t cc = 0; cc < n; ++cc)
        for (std::size_t d = 0; d < n; ++d)
          t.at(a * n + b, cc * n + d) = g.at(a, cc) * gi->at(d, b);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t.at(voff + a, voff + b) = g.at(a, b);
  return t;
}

std::optional<Matrix> jet_preserving_dual(std::size_t n, const Matrix& n_op) {
  if (n_op.rows != n * n || n_op.cols != n * n)
    throw InputError("jet_preserving_dual: N must act on gl(V)");
  Matrix dual(n, n);
  for (std::size_t m = 0; m < n; ++m) {
    // Solve N(A) e_m = A z for z over all matrix units A = E_(b,k).
    Matrix coeffs(n * n * n, n);
    Vec rhs(n * n * n);
    std::size_t row = 0;
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t al = 0; al < n; ++al) {
          if (al == b) coeffs.at(row, k) = Scalar(1);
          rhs[row] = n_op.at(al * n + m, b * n + k);
          ++row;
        }
    std::optional<Vec> z = solve_linear(coeffs, rhs);
    if (!z) return std::nullopt;
    for (std::size_t r = 0; r < n; ++r) dual.at(r, m) = (*z)[r];
  }
  return dual;
}

namespace {

struct NijenhuisPaths {
  Matrix dual;      // N* restricted to V
  bool right_mult = false;
  bool sharp_compat = false;
  bool c_vanishes = false;
};

NijenhuisPaths compat_paths(std::size_t n, const Tensor3& pi, const Matrix& n_op) {
  std::optional<Matrix> dual = jet_preserving_dual(n, n_op);
  if (!dual)
    throw InputError("algebroid-Nijenhuis: N* does not preserve the jet space");
  NijenhuisPaths p;
  p.dual = *dual;
  p.right_mult = (n_op == hom_right_compose(n, n, p.dual));

  p.sharp_compat = true;
  for (std::size_t m = 0; m < n && p.sharp_compat; ++m) {
    Vec lhs = n_op * gl_vec(pi_sharp_of(pi, unit_vec(n, m)));
    Vec rhs = gl_vec(pi_sharp_of(pi, p.dual * unit_vec(n, m)));
    if (lhs != rhs) p.sharp_compat = false;
  }

  p.c_vanishes = true;
  for (std::size_t a = 0; a < n && p.c_vanishes; ++a)
    for (std::size_t b = 0; b < n && p.c_vanishes; ++b) {
      Vec ea = unit_vec(n, a), eb = unit_vec(n, b);
      Matrix n_pi_sharp = vec_gl(n_op * gl_vec(pi_sharp_of(pi, ea)), n);
      Vec pi_n = n_pi_sharp * eb;  // [u,v]_{pi_N} = <v, N pi^sharp(u)>
      Vec defect = pi_n - pi_bracket(pi, p.dual * ea, eb) -
                   pi_bracket(pi, ea, p.dual * eb) +
                   p.dual * pi_bracket(pi, ea, eb);
      if (!is_zero(defect)) p.c_vanishes = false;
    }
  return p;
}

} // namespace

CheckReport algebroid_nijenhuis_compat(std::size_t n, const Tensor3& pi,
                                       const Matrix& n_op) {
  if (pi.d0 != n || pi.d1 != n || pi.d2 != n)
    throw InputError("algebroid_nijenhuis_compat: pi must have extents [n,n,n]");
  if (!antisymmetric3(pi))
    throw InputError("algebroid_nijenhuis_compat: pi must be antisymmetric");
  NijenhuisPaths p = compat_paths(n, pi, n_op);
  CheckReport report;
  report.add("right-multiplication-form", p.right_mult, {{0}, {Scalar(1)}});
  report.add("sharp-compatibility", p.sharp_compat, {{0}, {Scalar(1)}});
  report.add("compatibility-tensor", p.c_vanishes, {{0}, {Scalar(1)}});
  return report;
}

CheckReport check_equivalence_theorem(std::size_t n, const Tensor3& pi,
                                      const Matrix& n_op) {
  if (pi.d0 != n || pi.d1 != n || pi.d2 != n)
    throw InputError("check_equivalence_theorem: pi must have extents [n,n,n]");
  if (!antisymmetric3(pi))
    throw InputError("check_equivalence_theorem: pi must be antisymmetric");
  NijenhuisPaths p = compat_paths(n, pi, n_op);

  bool a_pi_lie = check_lie(LieAlgebra(n, pi)).passed();
  bool a_nijenhuis =
      nijenhuis_tensor(Endomorphism(n_op), gl_commutator_algebra(n).as_leibniz())
          .is_zero();
  bool a_square = (n_op * n_op + Matrix::identity(n * n)).is_zero();
  bool path_a = a_pi_lie && a_nijenhuis && p.sharp_compat && p.c_vanishes && a_square;

  // Path (b): J = (N, pi^sharp; 0, -N*) on the omni-Lie algebra.
  const std::size_t voff = n * n;
  Matrix j(voff + n, voff + n);
  for (std::size_t r = 0; r < voff; ++r)
    for (std::size_t c = 0; c < voff; ++c) j.at(r, c) = n_op.at(r, c);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t c = 0; c < n; ++c)
        j.at(a * n + i, voff + c) = pi.at(c, i, a);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) j.at(voff + a, voff + b) = -p.dual.at(a, b);

  ECourantStructure omni = build_omni(n);
  CheckReport algebraic = check_gcs_algebraic(omni, j);
  CheckReport integrable = check_gcs_integrable(omni, j);
  bool path_b = algebraic.passed() && integrable.passed();

  CheckReport report;
  report.add("equivalence-agreement", path_a == path_b,
             {{path_a ? std::size_t(1) : std::size_t(0),
               path_b ? std::size_t(1) : std::size_t(0)},
              {Scalar(1)}});
  report.note("a-pi-jacobi", verdict(a_pi_lie));
  report.note("a-nijenhuis-vanishes", verdict(a_nijenhuis));
  report.note("a-sharp-compatibility", verdict(p.sharp_compat));
  report.note("a-compatibility-tensor", verdict(p.c_vanishes));
  report.note("a-n-square", verdict(a_square));
  report.note("a-verdict", verdict(path_a));
  report.note("b-algebraic", verdict(algebraic.passed()));
  report.note("b-integrable", verdict(integrable.passed()));
  report.note("b-verdict", verdict(path_b));
  return report;
}

CheckReport omni_integrability_conditions(std::size_t n, const OmniGcsData& data,
                                          const std::optional<Matrix>& n_op) {
  validate_omni_data(n, data);
  Matrix n_mat, dual;
  if (n_op) {
    std::optional<Matrix> d = jet_preserving_dual(n, *n_op);
    if (!d)
      throw InputError(
          "omni_integrability_conditions: N* does not preserve the jet space "
          "(at a point base an admissible N is a right multiplication)");
    n_mat = *n_op;
    dual = *d;
  } else {
    dual = Scalar(-1) * data.d;  // N = -R_D has N*|_V = -D
    Matrix rd = hom_right_compose(n, n, data.d);
    n_mat = Scalar(-1) * rd;
  }

  CheckReport report;

  // Assembled J = (N, pi^sharp; 0, -N*).
  const std::size_t voff = n * n;
  Matrix j(voff + n, voff + n);
  for (std::size_t r = 0; r < voff; ++r)
    for (std::size_t c = 0; c < voff; ++c) j.at(r, c) = n_mat.at(r, c);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t c = 0; c < n; ++c)
        j.at(a * n + i, voff + c) = data.pi.at(c, i, a);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) j.at(voff + a, voff + b) = -dual.at(a, b);

  ECourantStructure omni = build_omni(n);
  CheckReport algebraic = check_gcs_algebraic(omni, j);
  report.add("almost-complex", algebraic.passed(), first_fail_witness(algebraic));

  bool cond_i = true;
  for (std::size_t a = 0; a < n && cond_i; ++a)
    for (std::size_t b = 0; b < n && cond_i; ++b) {
      Vec br = pi_bracket(data.pi, unit_vec(n, a), unit_vec(n, b));
      Matrix lhs = pi_sharp_of(data.pi, br);
      Matrix pa = pi_sharp_of(data.pi, unit_vec(n, a));
      Matrix pb = pi_sharp_of(data.pi, unit_vec(n, b));
      Matrix defect = lhs - (pa * pb - pb * pa);
      if (!defect.is_zero()) {
        report.add_fail("condition-i", {{a, b}, defect.a});
        cond_i = false;
      }
    }
  if (cond_i) report.add_pass("condition-i");

  bool cond_ii = true;
  for (std::size_t a = 0; a < n && cond_ii; ++a)
    for (std::size_t b = 0; b < n && cond_ii; ++b) {
      Vec ea = unit_vec(n, a), eb = unit_vec(n, b);
      Vec lhs = dual * pi_bracket(data.pi, ea, eb);
      Vec rhs = pi_sharp_of(data.pi, ea) * (dual * eb) -
                pi_sharp_of(data.pi, eb) * (dual * ea) -
                pi_sharp_of(data.pi, dual * ea) * eb;
      Vec defect = lhs - rhs;
      if (!is_zero(defect)) {
        report.add_fail("condition-ii", {{a, b}, defect});
        cond_ii = false;
      }
    }
  if (cond_ii) report.add_pass("condition-ii");

  Tensor3 tn = nijenhuis_tensor(Endomorphism(n_mat),
                                gl_commutator_algebra(n).as_leibniz());
  bool cond_iii = tn.is_zero();
  if (cond_iii) {
    report.add_pass("condition-iii");
  } else {
    bool found = false;
    for (std::size_t a = 0; a < tn.d0 && !found; ++a)
      for (std::size_t b = 0; b < tn.d1 && !found; ++b) {
        Vec v = slice(tn, a, b);
        if (!is_zero(v)) {
          report.add_fail("condition-iii", {{a, b}, v});
          found = true;
        }
      }
  }

  report.add_pass("condition-iv");
  report.note("condition-iv", "vacuous at a point base (sigma = 0)");

  bool conj = cond_i && cond_ii && cond_iii;
  if (algebraic.passed()) {
    CheckReport integrable = check_gcs_integrable(omni, j);
    report.add("matches-generic", conj == integrable.passed(),
               {{conj ? std::size_t(1) : std::size_t(0),
                 integrable.passed() ? std::size_t(1) : std::size_t(0)},
                {Scalar(1)}});
    report.note("generic-integrable", verdict(integrable.passed()));
  } else {
    report.add_pass("matches-generic");
    report.note("matches-generic", "not evaluated: J is not almost complex");
  }
  report.note("conditions-conjunction", verdict(conj));
  return report;
}

} // namespace courant
