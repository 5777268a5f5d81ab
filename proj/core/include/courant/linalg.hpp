#ifndef COURANT_LINALG_HPP
#define COURANT_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "courant/tensor.hpp"

namespace courant {

/// Default cap on ambient dimensions; keeps the exhaustive basis loops of the
/// checkers at desk scale. Builders take it as a parameter so the CLI can
/// override with --max-dim.
inline constexpr std::size_t kDefaultMaxDim = 64;

struct RrefResult {
  Matrix m;                            ///< reduced row echelon form
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

/// Gauss-Jordan reduction over the exact field; deterministic (first nonzero
/// pivot, no magnitude heuristics).
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

struct LinearSolveResult {
  bool consistent = false;
  Vec solution;     ///< one particular solution when consistent
  Scalar residual;  ///< nonzero right-hand side of the first inconsistent
                    ///< reduced row; 0 when consistent
};

/// Solves A x = b exactly, A not necessarily square.
/// Throws InputError when rows(A) != len(b).
LinearSolveResult solve_linear_full(const Matrix& a, const Vec& b);

/// Convenience wrapper: a solution vector, or nullopt when inconsistent.
std::optional<Vec> solve_linear(const Matrix& a, const Vec& b);

/// Basis of the nullspace {x : A x = 0}, in the canonical RREF
/// parametrization (one vector per free column, in increasing column order).
Subspace kernel_basis(const Matrix& a);

/// Gauss-Jordan inverse; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Canonical form of a subspace: RREF of its basis rows with zero rows
/// dropped. Two subspaces are equal iff their canonical forms are equal.
Subspace canonicalize(const Subspace& s);
bool subspaces_equal(const Subspace& s, const Subspace& t);
bool in_span(const Subspace& s, const Vec& v);

/// Residual of v after eliminating against the subspace basis; zero iff
/// v lies in the span. Deterministic, used for counterexample witnesses.
Vec span_residual(const Subspace& s, const Vec& v);

/// Entrywise conjugate of every basis vector.
Subspace conjugated(const Subspace& s);

/// Checks that the basis rows are linearly independent.
bool basis_independent(const Subspace& s);

/// Field extension embeddings. Scalars always carry room for an imaginary
/// part, so these are entrywise copies; the Field tag lives on structures
/// and documents. Kept as named operations so call sites say what they mean.
inline Matrix complexify(const Matrix& m) { return m; }
inline Tensor3 complexify(const Tensor3& t) { return t; }
inline Tensor4 complexify(const Tensor4& t) { return t; }

} // namespace courant

#endif
