#ifndef COURANT_GCS_HPP
#define COURANT_GCS_HPP

#include <cstddef>
#include <optional>
#include <utility>

#include "courant/algebra.hpp"
#include "courant/check_report.hpp"
#include "courant/constructions.hpp"
#include "courant/ecourant.hpp"

namespace courant {

/// Block data of a generalized complex structure on an omni-Lie algebra:
/// an antisymmetric pi : V ^ V -> V (bracket-tensor layout) and D in gl(V).
/// sigma : gl(V) ^ gl(V) -> V may be supplied (extents [n^2, n^2, n]) but is
/// forced to vanish at a point base; any nonzero sigma is rejected.
struct OmniGcsData {
  Tensor3 pi;
  Matrix d;
  Tensor3 sigma;  ///< empty means zero
};

/// An endomorphism J of K, optionally remembering the omni block data it was
/// assembled from.
struct GeneralizedComplexStructure {
  Matrix j;
  std::optional<OmniGcsData> omni;
};

/// J^2 = -id and pairing invariance <JX,JY> = <X,Y> on all basis pairs;
/// also reports the skew-adjointness consequence <JX,Y> + <X,JY> = 0.
CheckReport check_gcs_algebraic(const ECourantStructure& c, const Matrix& j);

/// Integrability defect [JX,JY] - [X,Y] - J([JX,Y] + [X,JY]) on all basis
/// pairs. When check_gcs_algebraic fails, the report carries the single
/// entry "algebraic-precondition" instead.
CheckReport check_gcs_integrable(const ECourantStructure& c, const Matrix& j);

/// The matrix of (A,u) -> (-A.D + pi^sharp(u), Du) on gl(V) + V, assembled
/// without any validation. Basis layout as in build_omni.
Matrix assemble_omni_j(std::size_t n, const Tensor3& pi, const Matrix& d);

/// Right composition Phi -> Phi . D as a matrix on Hom(A0, A1) coordinates
/// F_(a,i) -> a*dim(A0)+i, for D in gl(A0).
Matrix hom_right_compose(std::size_t dim_a1, std::size_t dim_a0, const Matrix& d);

/// Validating constructor for the omni form (-R_D, pi^sharp; 0, D):
/// requires pi antisymmetric, sigma = 0, D^2 = -id and pi(Du,v) = pi(u,Dv);
/// throws InputError ("not almost complex") otherwise. The result passes
/// check_gcs_algebraic on build_omni(n).
GeneralizedComplexStructure build_omni_gcs(std::size_t n, const OmniGcsData& data,
                                           std::size_t max_dim = kDefaultMaxDim);

/// Both sides of the omni-Lie correspondence: the direct conditions
/// (pi satisfies Jacobi, D^2 = -id, D[u,v]_pi = [u,Dv]_pi) versus the
/// generic algebraic+integrability verdict on the assembled J. The single
/// pass entry is their agreement; both verdicts are reported as notes.
CheckReport check_complex_lie_correspondence(std::size_t n, const OmniGcsData& data);

/// The block structure J_D = (-R_D, 0; 0, D) on Hom(g,V) + g for a g-module
/// V, together with its ambient structure built along the Lie 2-algebra
/// path. Requires D^2 = -id ("not almost complex" otherwise). Integrability
/// of the result is equivalent to the vanishing of the Nijenhuis tensor of
/// D on g.
std::pair<ECourantStructure, GeneralizedComplexStructure> build_nijenhuis_gcs(
    const LieAlgebra& g, const Representation& rep, const Endomorphism& d,
    std::size_t max_dim = kDefaultMaxDim);

/// Bracket [u,v]_E = 2 <J rho*(u), rho*(v)> on E, returned as a Lie algebra.
/// Throws Error when J is not integrable.
LieAlgebra induced_bracket(const ECourantStructure& c, const Matrix& j);

/// The +i eigenspace of J inside the complexified K, as the kernel of
/// J - i*id over the Gaussian rationals. Requires only the algebraic checks
/// (a non-integrable J is accepted so the failure of Dirac closure stays
/// observable). Throws InputError when the algebraic checks fail.
DiracSubspace eigenbundle(const ECourantStructure& c, const Matrix& j);

/// An automorphism candidate T of K: the pairing must transform by some
/// invertible induced map g on E, the bracket must be preserved, and the
/// anchor must be g-conjugated. Throws InputError on singular T.
CheckReport check_automorphism(const ECourantStructure& c, const Matrix& t);

/// Conjugated structure T J T^-1. Requires check_automorphism to pass,
/// else throws InputError. Every check verdict is invariant under this
/// transport.
GeneralizedComplexStructure transport_by_automorphism(const ECourantStructure& c,
                                                      const Matrix& t,
                                                      const Matrix& j);

/// The K-automorphism of build_omni(n) induced by g in GL(V):
/// A -> g A g^-1 on gl(V) and u -> g u on V. Throws InputError on singular g.
Matrix omni_transport_matrix(std::size_t n, const Matrix& g);

/// Dual of N restricted to the jet space: the unique D~ with
/// N(A) u = A (D~ u) for all A, when it exists. Solved per basis vector of
/// V; nullopt when N* does not preserve V.
std::optional<Matrix> jet_preserving_dual(std::size_t n, const Matrix& n_op);

/// Compatibility of pi with an admissible N on gl(V):
///   N . pi^sharp = pi^sharp . N*   and   C(pi,N) = 0, where
///   C(pi,N)(u,v) = [u,v]_{pi_N} - ([N*u,v]_pi + [u,N*v]_pi - N*[u,v]_pi)
/// and pi_N(u,v) = <v, N pi^sharp(u)>. Point-base brackets [.,.]_pi
/// evaluate to pi(.,.). Also records that an admissible N is forced to be a
/// right multiplication. Throws InputError when pi is not antisymmetric or
/// N* does not preserve the jet space.
CheckReport algebroid_nijenhuis_compat(std::size_t n, const Tensor3& pi,
                                       const Matrix& n_op);

/// Equivalence of (a) algebroid-Nijenhuis structure plus N^2 = -id with
/// (b) J = (N, pi^sharp; 0, -N*) a generalized complex structure, evaluated
/// through both routes on build_omni(n). The pass entry is the agreement of
/// the two verdicts. Throws InputError on inadmissible N.
CheckReport check_equivalence_theorem(std::size_t n, const Tensor3& pi,
                                      const Matrix& n_op);

/// The itemized integrability conditions for the omni form:
///   (i)   pi^sharp([u,v]_pi) = [pi^sharp u, pi^sharp v] in gl(V)
///   (ii)  N*[u,v]_pi = L_{pi u}(N*v) - L_{pi v}(N*u) - d pi(N*u, v)
///   (iii) T(N) = 0 on gl(V)
///   (iv)  vacuous at a point base (sigma = 0)
/// plus the property that their conjunction equals the generic
/// integrability verdict on the assembled J whenever J is almost complex.
/// N defaults to -R_D for D = data.d; a supplied N must be admissible.
CheckReport omni_integrability_conditions(std::size_t n, const OmniGcsData& data,
                                          const std::optional<Matrix>& n_op = {});

} // namespace courant

#endif
