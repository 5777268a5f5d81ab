#ifndef COURANT_CONSTRUCTIONS_HPP
#define COURANT_CONSTRUCTIONS_HPP

#include <cstddef>

#include "courant/algebra.hpp"
#include "courant/check_report.hpp"
#include "courant/ecourant.hpp"

namespace courant {

/// A crossed module of Lie algebras (m, g, phi, act):
///   phi : m -> g         stored as a (dim g) x (dim m) matrix
///   act : g x m -> m     stored like a representation action,
///                        act.at(i,a,b) the (a,b) entry of the operator of
///                        the i-th g-basis vector
/// subject to act being a representation by derivations of the m-bracket,
/// phi(xi) act eta = [xi,eta]_m, and phi(x act xi) = [x, phi(xi)]_g.
struct CrossedModule {
  LieAlgebra m;
  LieAlgebra g;
  Matrix phi;
  Tensor3 act;
};

/// A 2-term homotopy Lie algebra (A_0, A_-1, l1, l2 = l2_0 + l2_1, l3):
///   l1   : A_-1 -> A_0            (dim A_0) x (dim A_-1) matrix
///   l2_0 : A_0 ^ A_0 -> A_0       bracket tensor on A_0
///   l2_1 : A_0 x A_-1 -> A_-1     operator tensor, l2_1.at(i,a,b)
///   l3   : A_0 ^3 -> A_-1         l3.at(i,j,k,a)
struct LieTwoAlgebra {
  std::size_t dim_a0 = 0;
  std::size_t dim_a1 = 0;
  Matrix l1;
  Tensor3 l2_0;
  Tensor3 l2_1;
  Tensor4 l3;

  /// Value of l2_1 on a basis pair, as an A_-1 vector.
  Vec l2_1_of(std::size_t i, const Vec& a) const;
};

/// Both crossed-module axioms plus the representation and derivation
/// properties of the action, each on all basis tuples. Component algebras
/// are re-checked with check_lie first.
CheckReport check_crossed_module(const CrossedModule& cm);

/// Omni-Lie algebra of an n-dimensional space V: K = gl(V) + V with
///   [A+u, B+v] = [A,B] + Av,   <A+u, B+v> = (Av + Bu)/2,
/// anchor the projection to gl(V). Basis layout: matrix units E_(a,b) at
/// index a*n + b, then the V-basis at offset n^2.
ECourantStructure build_omni(std::size_t n, std::size_t max_dim = kDefaultMaxDim);

/// m-Courant structure of a crossed module on Hom(g,m) + g, built directly
/// from the four bracket formulas
///   [u,v] = [u,v]_g
///   [A,B] = A.phi.B - B.phi.A
///   [A,v] = A.ad0_v - ad1_v.A + (. act Av) + phi(Av)
///   [v,A] = ad1_v.A - A.ad0_v
/// with pairing (A+u, B+v) = (Av+Bu)/2 and anchor rho(A+u) = A.phi + (u act .).
/// Hom(g,m) basis layout: F_(a,i) (the map e_i -> m_a) at index a*dim(g) + i,
/// then the g-basis. Throws InputError when check_crossed_module fails.
ECourantStructure build_crossed_courant(const CrossedModule& cm,
                                        std::size_t max_dim = kDefaultMaxDim);

/// 2-term homotopy identities on all basis tuples:
///   antisymmetry of l2_0, total antisymmetry of l3,
///   l1(l2_1(u,a)) = l2_0(u, l1 a),
///   l2_1(l1 a, b) + l2_1(l1 b, a) = 0,
///   l2_1(u,l2_1(v,a)) - l2_1(v,l2_1(u,a)) - l2_1(l2_0(u,v),a) = l3(u,v,l1 a),
///   l2_0(u,l2_0(v,w)) - l2_0(v,l2_0(u,w)) - l2_0(l2_0(u,v),w) = l1(l3(u,v,w)),
///   and the coherence of l3 (the Chevalley-Eilenberg-style 4-point identity).
/// This sign convention is the one under which build_lie2_courant satisfies
/// every EC axiom; the test suite pins it.
CheckReport check_lie_two(const LieTwoAlgebra& t);

/// Strictification of a crossed module: l1 = phi, l2_0 = g-bracket,
/// l2_1 = act, l3 = 0.
LieTwoAlgebra crossed_to_lie2(const CrossedModule& cm);

/// A_-1-Courant structure of a Lie 2-algebra on Hom(A_0, A_-1) + A_0:
///   [u,v]  = l2_0(u,v) + l3(u,v,.)
///   [D,D'] = D.l1.D' - D'.l1.D
///   [D,v]  = -l2_1(v,D(.)) + D(l2_0(v,.)) + l2_1(., D(v)) + l1(D(v))
///   [v,D]  = l2_1(v,D(.)) - D(l2_0(v,.))
/// with pairing (D+u, D'+v) = (Dv + D'u)/2 and anchor
/// rho(D+u) = D.l1 + l2_1(u,.). Same basis layout as build_crossed_courant.
/// Throws InputError when check_lie_two fails.
ECourantStructure build_lie2_courant(const LieTwoAlgebra& t,
                                     std::size_t max_dim = kDefaultMaxDim);

/// A g-module as an abelian 2-term algebra: l1 = 0, l2_0 the g-bracket,
/// l2_1 the action, l3 = 0.
LieTwoAlgebra module_to_lie2(const LieAlgebra& g, const Representation& rep);

} // namespace courant

#endif
