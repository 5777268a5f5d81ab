#ifndef COURANT_ALGEBRA_HPP
#define COURANT_ALGEBRA_HPP

#include <cstddef>

#include "courant/check_report.hpp"
#include "courant/tensor.hpp"

namespace courant {

/// A bracket on coordinates, stored as the full structure-constant tensor
/// c.at(i,j,k): [e_i, e_j] = sum_k c.at(i,j,k) e_k. Antisymmetry is never
/// assumed; it is a checked property, so genuinely non-antisymmetric
/// (Leibniz) brackets are first-class.
struct LeibnizAlgebra {
  std::size_t dim = 0;
  Tensor3 bracket;  ///< [dim, dim, dim]

  LeibnizAlgebra() = default;
  LeibnizAlgebra(std::size_t n, Tensor3 c) : dim(n), bracket(std::move(c)) {}

  /// Bracket of two coordinate vectors.
  Vec apply(const Vec& x, const Vec& y) const;
};

struct LieAlgebra {
  std::size_t dim = 0;
  Tensor3 bracket;

  LieAlgebra() = default;
  LieAlgebra(std::size_t n, Tensor3 c) : dim(n), bracket(std::move(c)) {}

  static LieAlgebra abelian(std::size_t n) {
    return LieAlgebra(n, Tensor3(n, n, n));
  }

  Vec apply(const Vec& x, const Vec& y) const;
  LeibnizAlgebra as_leibniz() const { return LeibnizAlgebra(dim, bracket); }
};

/// Action of a Lie algebra g on a module V, as matrices:
/// action.at(i,a,b) is the (a,b) entry of the operator of the i-th g-basis
/// vector.
struct Representation {
  LieAlgebra algebra;
  std::size_t module_dim = 0;
  Tensor3 action;  ///< [dim g, dim V, dim V]

  /// Operator of the i-th basis vector.
  Matrix op(std::size_t i) const;
  /// Operator of an arbitrary algebra element.
  Matrix op_of(const Vec& x) const;
};

struct Endomorphism {
  std::size_t dim = 0;
  Matrix m;

  Endomorphism() = default;
  explicit Endomorphism(Matrix mat) : dim(mat.rows), m(std::move(mat)) {}
};

/// Left Leibniz identity [x,[y,z]] = [[x,y],z] + [y,[x,z]] on all basis
/// triples; reports the lexicographically first failing (i,j,k).
CheckReport check_leibniz(const LeibnizAlgebra& l);

/// Antisymmetry on all pairs plus the Jacobi identity on all triples.
CheckReport check_lie(const LieAlgebra& l);

/// Nijenhuis tensor T(N)(x,y) = [Nx,Ny] - N([Nx,y] + [x,Ny] - N[x,y]),
/// returned as a bilinear-map tensor in the same index convention as a
/// bracket. Throws InputError on dimension mismatch.
Tensor3 nijenhuis_tensor(const Endomorphism& n, const LeibnizAlgebra& l);

/// D is a complex Lie algebra structure: D^2 = -id and D[u,v] = [u,Dv].
CheckReport check_complex_structure(const Endomorphism& d, const LieAlgebra& l);

/// rho([x,y]) = rho(x) rho(y) - rho(y) rho(x) on all basis pairs.
CheckReport check_representation(const Representation& r);

/// The two-dimensional nonabelian Lie algebra, [e1,e2] = e2.
LieAlgebra aff1();

/// gl(V) for dim V = n as a Lie algebra under the commutator, in the
/// row-major matrix-unit basis E_(a,b) at index a*n + b.
LieAlgebra gl_commutator_algebra(std::size_t n);

/// Adjoint representation of g on itself.
Representation adjoint_rep(const LieAlgebra& g);

/// Trivial (zero) action of g on a module of dimension m.
Representation trivial_rep(const LieAlgebra& g, std::size_t m);

} // namespace courant

#endif
