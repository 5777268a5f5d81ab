#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "courant/constructions.hpp"
#include "courant/errors.hpp"
#include "courant/io.hpp"

using namespace courant;

namespace {

bool same_structure(const ECourantStructure& a, const ECourantStructure& b) {
  return a.dim_k == b.dim_k && a.dim_e == b.dim_e && a.bracket == b.bracket &&
         a.pairing == b.pairing && a.anchor == b.anchor;
}

} // namespace

TEST_CASE("build_omni values for n = 1") {
  ECourantStructure c = build_omni(1);
  CHECK(c.dim_k == 2);
  CHECK(c.dim_e == 1);
  // [(2,3), (5,7)] = (0, 2*7) and <(2,3), (5,7)> = (2*7 + 5*3)/2
  Vec x = {Scalar(2), Scalar(3)}, y = {Scalar(5), Scalar(7)};
  CHECK(c.bracket_of(x, y) == Vec{Scalar(0), Scalar(14)});
  CHECK(c.pairing_of(x, y) == Vec{Scalar(29, 2)});
  CHECK_THROWS_AS(build_omni(0), InputError);
  CHECK_THROWS_AS(build_omni(10, 64), InputError);  // 110 > guard
}

TEST_CASE("omni squares match the dual anchor") {
  ECourantStructure c = build_omni(2);
  auto rs = rho_star_matrix(c);
  REQUIRE(rs.has_value());
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int round = 0; round < 25; ++round) {
    Vec x(c.dim_k);
    for (Scalar& s : x) s = Scalar(coeff(rng));
    CHECK(c.bracket_of(x, x) == *rs * c.pairing_of(x, x));
  }
}

TEST_CASE("check_crossed_module") {
  for (const auto& [name, cm] : corpus::crossed_modules()) {
    INFO(name);
    CHECK(check_crossed_module(cm).passed());
  }

  // phi = 0 with a nonabelian m violates the first Peiffer identity at
  // the first nonabelian pair
  CrossedModule bad{aff1(), aff1(), Matrix::zero(2, 2), adjoint_rep(aff1()).action};
  CheckReport r = check_crossed_module(bad);
  REQUIRE_FALSE(r.passed());
  const CheckEntry* p1 = r.find("peiffer-1");
  REQUIRE(p1 != nullptr);
  CHECK_FALSE(p1->pass);
  CHECK(p1->witness->indices == std::vector<std::size_t>{0, 1});
}

TEST_CASE("build_crossed_courant") {
  CrossedModule cm{aff1(), aff1(), Matrix::identity(2), adjoint_rep(aff1()).action};
  ECourantStructure c = build_crossed_courant(cm);
  CHECK(c.dim_k == 6);
  CHECK(c.dim_e == 2);
  CHECK(check_ec_axioms(c).passed());

  // abelian m with phi = 0 kills [A,B]
  CrossedModule flat{LieAlgebra::abelian(2), aff1(), Matrix::zero(2, 2),
                     adjoint_rep(aff1()).action};
  ECourantStructure fc = build_crossed_courant(flat);
  const std::size_t nh = 2 * 2;
  for (std::size_t a = 0; a < nh; ++a)
    for (std::size_t b = 0; b < nh; ++b)
      CHECK(is_zero(fc.bracket_of(unit_vec(fc.dim_k, a), unit_vec(fc.dim_k, b))));

  // [v,A] + [A,v] = rho*(Av) entrywise on the basis
  auto rs = rho_star_matrix(c);
  REQUIRE(rs.has_value());
  for (std::size_t h = 0; h < 4; ++h)
    for (std::size_t j = 0; j < 2; ++j) {
      Vec a_vec = unit_vec(6, h), v_vec = unit_vec(6, 4 + j);
      Vec sum = c.bracket_of(a_vec, v_vec) + c.bracket_of(v_vec, a_vec);
      // Av for A = F_(alpha,i) and v = e_j is delta_(i,j) mu_alpha
      std::size_t alpha = h / 2, i = h % 2;
      Vec av = zero_vec(2);
      if (i == j) av[alpha] = Scalar(1);
      CHECK(sum == *rs * av);
    }

  CrossedModule invalid{aff1(), aff1(), Matrix::zero(2, 2),
                        adjoint_rep(aff1()).action};
  CHECK_THROWS_AS(build_crossed_courant(invalid), InputError);
}

TEST_CASE("check_lie_two") {
  // vanishing l1, l2 with any alternating l3 satisfies everything
  LieTwoAlgebra t;
  t.dim_a0 = 3;
  t.dim_a1 = 1;
  t.l1 = Matrix::zero(3, 1);
  t.l2_0 = Tensor3(3, 3, 3);
  t.l2_1 = Tensor3(3, 1, 1);
  t.l3 = l3_preset("det3", 3, 1);
  CHECK(check_lie_two(t).passed());

  for (const auto& [name, l2] : corpus::lie_two_algebras()) {
    INFO(name);
    CHECK(check_lie_two(l2).passed());
  }
  for (const auto& [name, cm] : corpus::crossed_modules()) {
    INFO(name);
    CHECK(check_lie_two(crossed_to_lie2(cm)).passed());
  }

  // aff1 on A_0 with a spectator A_-1
  LieTwoAlgebra spectator;
  spectator.dim_a0 = 2;
  spectator.dim_a1 = 1;
  spectator.l1 = Matrix::zero(2, 1);
  spectator.l2_0 = aff1().bracket;
  spectator.l2_1 = Tensor3(2, 1, 1);
  spectator.l3 = Tensor4(2, 2, 2, 1);
  CHECK(check_lie_two(spectator).passed());

  // non-antisymmetric l2_0 is rejected, not repaired
  LieTwoAlgebra bad = spectator;
  bad.l2_0.at(1, 0, 1) = Scalar(1);  // breaks antisymmetry
  CheckReport r = check_lie_two(bad);
  CHECK_FALSE(r.find("l2_0-antisymmetric")->pass);
  CHECK_THROWS_AS(build_lie2_courant(bad), InputError);

  // a Jacobi failure with l1 = 0 shows up in the jacobiator entry
  LieTwoAlgebra nonjacobi = spectator;
  nonjacobi.dim_a0 = 3;
  nonjacobi.l1 = Matrix::zero(3, 1);
  nonjacobi.l2_1 = Tensor3(3, 1, 1);
  nonjacobi.l3 = Tensor4(3, 3, 3, 1);
  Tensor3 c(3, 3, 3);
  c.at(0, 1, 0) = Scalar(1);
  c.at(1, 0, 0) = Scalar(-1);
  c.at(1, 2, 1) = Scalar(1);
  c.at(2, 1, 1) = Scalar(-1);
  nonjacobi.l2_0 = c;
  bool jacobi_ok = check_lie(LieAlgebra(3, c)).passed();
  CHECK(check_lie_two(nonjacobi).passed() == jacobi_ok);
}

TEST_CASE("crossed_to_lie2 and construction agreement") {
  CrossedModule cm{aff1(), aff1(), Matrix::identity(2), adjoint_rep(aff1()).action};
  LieTwoAlgebra t = crossed_to_lie2(cm);
  CHECK(t.l1 == Matrix::identity(2));
  CHECK(t.l2_0 == aff1().bracket);
  CHECK(t.l2_1 == cm.act);
  CHECK(t.l3.is_zero());

  for (const auto& [name, named_cm] : corpus::crossed_modules()) {
    INFO(name);
    ECourantStructure direct = build_crossed_courant(named_cm);
    ECourantStructure via_lie2 = build_lie2_courant(crossed_to_lie2(named_cm));
    CHECK(same_structure(direct, via_lie2));
  }
}

TEST_CASE("build_lie2_courant on the skeletal determinant example") {
  LieTwoAlgebra t;
  t.dim_a0 = 3;
  t.dim_a1 = 1;
  t.l1 = Matrix::zero(3, 1);
  t.l2_0 = Tensor3(3, 3, 3);
  t.l2_1 = Tensor3(3, 1, 1);
  t.l3 = l3_preset("det3", 3, 1);
  ECourantStructure c = build_lie2_courant(t);
  CHECK(c.dim_k == 6);
  CHECK(check_ec_axioms(c).passed());

  // [e1, e2] = det(e1, e2, .) = the functional dual to e3
  Vec br = c.bracket_of(unit_vec(6, 3 + 0), unit_vec(6, 3 + 1));
  Vec expected = zero_vec(6);
  expected[2] = Scalar(1);  // F_(0,2)
  CHECK(br == expected);
}

TEST_CASE("module path reproduces the direct module-structure bracket") {
  std::vector<std::pair<LieAlgebra, Representation>> cases = {
      {aff1(), adjoint_rep(aff1())},
      {aff1(), corpus::aff1_scaling_rep(Scalar(1))},
      {corpus::sl2(), trivial_rep(corpus::sl2(), 2)},
      {corpus::heis3(), adjoint_rep(corpus::heis3())},
  };
  for (const auto& [g, rep] : cases) {
    ECourantStructure via_lie2 = build_lie2_courant(module_to_lie2(g, rep));
    CHECK(via_lie2.bracket == corpus::direct_module_bracket(g, rep));
  }
}

TEST_CASE("the omni-Lie algebra is the identity-l1 two-term structure") {
  for (std::size_t n = 1; n <= 2; ++n) {
    LieTwoAlgebra t;
    t.dim_a0 = n;
    t.dim_a1 = n;
    t.l1 = Matrix::identity(n);
    t.l2_0 = Tensor3(n, n, n);
    t.l2_1 = Tensor3(n, n, n);
    t.l3 = Tensor4(n, n, n, n);
    CHECK(same_structure(build_lie2_courant(t), build_omni(n)));
  }
}

TEST_CASE("builder soundness across the corpus") {
  for (const auto& [name, t] : corpus::lie_two_algebras()) {
    INFO(name);
    ECourantStructure c = build_lie2_courant(t);
    CHECK(check_ec_axioms(c).passed());
  }
}
