#ifndef COURANT_TESTS_CORPUS_HPP
#define COURANT_TESTS_CORPUS_HPP

#include <string>
#include <vector>

#include "courant/algebra.hpp"
#include "courant/constructions.hpp"
#include "courant/gcs.hpp"

namespace corpus {

using namespace courant;

LieAlgebra heis3();
LieAlgebra sl2();

/// Structure constants of l transported to the basis f_a = sum_i P(i,a) e_i.
LieAlgebra change_basis(const LieAlgebra& l, const Matrix& p);

/// The one-dimensional representation of aff1 with e1 acting by a, e2 by 0.
Representation aff1_scaling_rep(const Scalar& a);

struct NamedCrossedModule {
  std::string name;
  CrossedModule cm;
};

/// At least 20 valid crossed modules with dims <= 3, including the
/// (g, g, id, ad) and abelian-m, phi = 0 families.
std::vector<NamedCrossedModule> crossed_modules();

struct NamedLieTwo {
  std::string name;
  LieTwoAlgebra t;
};

/// At least 10 valid Lie 2-algebras, including the det-form skeletal one.
std::vector<NamedLieTwo> lie_two_algebras();

struct NijenhuisTriple {
  std::string name;
  LieAlgebra g;
  Representation rep;
  Endomorphism d;
};

/// At least 50 triples (g, module, D) with D^2 = -id and dims <= 3.
std::vector<NijenhuisTriple> nijenhuis_triples();

/// Dimension-4 two-step nilpotent triples whose D has T(D) != 0, giving
/// almost complex but non-integrable block structures.
std::vector<NijenhuisTriple> nijenhuis_negative_triples();

/// All integer 2x2 matrices with entries in {-2..2} and D^2 = -id.
std::vector<Matrix> d2_square_roots();

/// Deterministic invertible rational 2x2 matrices.
std::vector<Matrix> random_gl2(std::size_t count, unsigned seed);

/// The 4-dimensional rational form of the complex aff(1) algebra together
/// with its multiplication-by-i operator; the unique-at-this-scale source of
/// an integrable omni structure with nonzero pi.
LieAlgebra complex_aff1_rational();
Matrix complex_aff1_i();

/// Independent oracle for the module structure on Hom(g,V) + g:
///   [u + Phi, v + Psi] = [u,v]_g + L_u Psi - L_v Phi + rho*(Phi(v))
/// expanded directly from the displayed formula, with
/// (L_u Psi)(w) = u.(Psi w) - Psi([u,w]) and rho*(w)(x) = x.w. Written
/// without the two-term machinery so it can stand against it in tests.
Tensor3 direct_module_bracket(const LieAlgebra& g, const Representation& rep);

} // namespace corpus

#endif
