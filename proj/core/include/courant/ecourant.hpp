#ifndef COURANT_ECOURANT_HPP
#define COURANT_ECOURANT_HPP

#include <cstddef>
#include <optional>

#include "courant/algebra.hpp"
#include "courant/check_report.hpp"
#include "courant/linalg.hpp"
#include "courant/tensor.hpp"

namespace courant {

/// An E-Courant structure over a point: a coordinate space K with a bracket,
/// a symmetric E-valued pairing, and an anchor into gl(E).
///
/// Point-base conventions, fixed once for the whole library:
///   - the covariant differential operators of E reduce to gl(E), the jet
///     space reduces to E itself, and the jet prolongation of a section is
///     the identity map on E;
///   - the E-valued pairing of a jet u with an operator A in gl(E) is A*u.
///
/// Tensor layout:
///   bracket.at(i,j,k)  e_k coefficient of [e_i, e_j]
///   pairing.at(i,j,a)  a-th E-coordinate of <e_i, e_j>; symmetric in (i,j)
///   anchor.at(i,a,b)   (a,b) entry of the gl(E) matrix of rho(e_i)
struct ECourantStructure {
  std::size_t dim_k = 0;
  std::size_t dim_e = 0;
  Tensor3 bracket;  ///< [k, k, k]
  Tensor3 pairing;  ///< [k, k, e]
  Tensor3 anchor;   ///< [k, e, e]
  Field field = Field::rational;

  Vec bracket_of(const Vec& x, const Vec& y) const;
  Vec pairing_of(const Vec& x, const Vec& y) const;  ///< E-vector
  Matrix anchor_of(const Vec& x) const;              ///< gl(E) matrix
};

/// A subspace of K whose Dirac property (S equal to its pairing-orthogonal
/// and closed under the bracket) has been or is to be established by
/// dirac_check.
using DiracSubspace = Subspace;

/// Matrix of the map Y -> 2<.,Y> from K into Hom(K,E); row (i*dim_e + a),
/// column j holds the a-th E-coordinate of 2<e_i, e_j>. Injectivity of this
/// matrix is the nondegeneracy of the pairing.
Matrix pairing_flat(const ECourantStructure& c);

/// The unique Y with 2<Y,X> = mu(rho(X)) for all X, i.e. the dual anchor
/// applied to mu in E. Throws Error("EC-4 violation...") when the linear
/// system is inconsistent.
Vec rho_star(const ECourantStructure& c, const Vec& mu);

/// Dual anchor on every E-basis vector at once; columns are rho_star of the
/// basis vectors. Nullopt when some basis solve is inconsistent, with the
/// failing basis index and residual reported via the out-parameters.
std::optional<Matrix> rho_star_matrix(const ECourantStructure& c,
                                      std::size_t* bad_index = nullptr,
                                      Scalar* residual = nullptr);

/// Full axiom sweep: pairing symmetry and nondegeneracy, the Leibniz
/// identity of the bracket, and EC-1 through EC-5, each quantified over all
/// basis tuples. EC-2 is checked on basis vectors and pairwise sums, which
/// is complete by polarization.
CheckReport check_ec_axioms(const ECourantStructure& c);

/// The two derived identities
///   [X, rho*(u)] = 2 rho*(<X, rho*(u)>)   and   [rho*(u), X] = 0,
/// quantified over basis X in K and u in E. A consequence of the EC axioms;
/// advisory when they do not hold.
CheckReport check_anchor_lemma(const ECourantStructure& c);

/// S-perp = {X : <X,s> = 0 for all s in S}.
Subspace orthogonal_complement(const ECourantStructure& c, const Subspace& s);

/// S = S-perp and bracket closure on all basis pairs of S.
CheckReport dirac_check(const ECourantStructure& c, const Subspace& s);

/// Same structure constants viewed over the Gaussian rationals.
ECourantStructure complexify(const ECourantStructure& c);

} // namespace courant

#endif
