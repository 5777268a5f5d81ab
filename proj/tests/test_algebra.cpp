#include <doctest.h>

#include <optional>
#include <random>

#include "corpus.hpp"
#include "courant/algebra.hpp"
#include "courant/errors.hpp"

using namespace courant;

namespace {

// Independent oracle: first triple violating the left Leibniz identity, by
// direct expansion without going through the checker's code path.
std::optional<std::array<std::size_t, 3>> leibniz_oracle(const Tensor3& c) {
  std::size_t n = c.d0;
  auto bracket = [&](const Vec& x, const Vec& y) {
    Vec r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) r[k] += x[i] * y[j] * c.at(i, j, k);
    return r;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec ei = unit_vec(n, i), ej = unit_vec(n, j), ek = unit_vec(n, k);
        Vec lhs = bracket(ei, bracket(ej, ek));
        Vec rhs = bracket(bracket(ei, ej), ek) + bracket(ej, bracket(ei, ek));
        if (!is_zero(lhs - rhs)) return std::array<std::size_t, 3>{i, j, k};
      }
  return std::nullopt;
}

Tensor3 random_bracket(std::mt19937& rng, std::size_t n, bool antisymmetrize) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  Tensor3 c(n, n, n);
  for (Scalar& s : c.a) s = Scalar(coeff(rng));
  if (antisymmetrize)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j)
        for (std::size_t k = 0; k < n; ++k)
          c.at(i, j, k) = i == j ? Scalar(0) : -c.at(j, i, k);
  return c;
}

} // namespace

TEST_CASE("check_leibniz") {
  CHECK(check_leibniz(LeibnizAlgebra(3, Tensor3(3, 3, 3))).passed());
  CHECK(check_leibniz(aff1().as_leibniz()).passed());
  CHECK_FALSE(leibniz_oracle(aff1().bracket).has_value());

  // [e1,e2] = e1 and [e2,e1] = 0 is not Leibniz; the checker must agree
  // with the oracle on the first failing triple.
  Tensor3 c(2, 2, 2);
  c.at(0, 1, 0) = Scalar(1);
  auto bad = leibniz_oracle(c);
  REQUIRE(bad.has_value());
  CheckReport r = check_leibniz(LeibnizAlgebra(2, c));
  REQUIRE_FALSE(r.passed());
  REQUIRE(r.entries.front().witness.has_value());
  const Witness& w = *r.entries.front().witness;
  CHECK(w.indices == std::vector<std::size_t>{(*bad)[0], (*bad)[1], (*bad)[2]});
  CHECK_FALSE(is_zero(w.defect));
}

TEST_CASE("check_lie") {
  CHECK(check_lie(LieAlgebra::abelian(4)).passed());
  CHECK(check_lie(aff1()).passed());
  CHECK(check_lie(corpus::heis3()).passed());
  CHECK(check_lie(corpus::sl2()).passed());

  // [e1,e2] = e1, [e2,e3] = e3, [e1,e3] = 0, antisymmetrized: the verdict
  // comes from the brute-force oracle, not from a guess.
  Tensor3 c(3, 3, 3);
  c.at(0, 1, 0) = Scalar(1);
  c.at(1, 0, 0) = Scalar(-1);
  c.at(1, 2, 2) = Scalar(1);
  c.at(2, 1, 2) = Scalar(-1);
  bool oracle_ok = !leibniz_oracle(c).has_value();
  CHECK(check_lie(LieAlgebra(3, c)).passed() == oracle_ok);

  Tensor3 bad(2, 2, 2);
  bad.at(0, 1, 0) = Scalar(1);  // not antisymmetric
  CheckReport r = check_lie(LieAlgebra(2, bad));
  CHECK_FALSE(r.find("antisymmetry")->pass);
}

TEST_CASE("leibniz and lie agree on antisymmetric brackets") {
  std::mt19937 rng(31);
  for (int round = 0; round < 60; ++round) {
    Tensor3 c = random_bracket(rng, 3, true);
    LieAlgebra l(3, c);
    CHECK(check_lie(l).passed() == check_leibniz(l.as_leibniz()).passed());
  }
}

TEST_CASE("nijenhuis_tensor") {
  LieAlgebra g = aff1();
  CHECK(nijenhuis_tensor(Endomorphism(Matrix::identity(2)), g.as_leibniz()).is_zero());
  Matrix rot(2, 2);
  rot.at(0, 1) = Scalar(-1);
  rot.at(1, 0) = Scalar(1);
  CHECK(nijenhuis_tensor(Endomorphism(rot), LieAlgebra::abelian(2).as_leibniz())
            .is_zero());

  // aff1 with the rotation: all four terms of T(e1,e2) cancel
  Tensor3 t = nijenhuis_tensor(Endomorphism(rot), g.as_leibniz());
  CHECK(t.is_zero());
  {
    // direct expansion of T(e1,e2) as the independent route
    Vec d1 = rot * unit_vec(2, 0), d2 = rot * unit_vec(2, 1);
    Vec inner = g.apply(d1, unit_vec(2, 1)) + g.apply(unit_vec(2, 0), d2) -
                rot * g.apply(unit_vec(2, 0), unit_vec(2, 1));
    Vec direct = g.apply(d1, d2) - rot * inner;
    CHECK(is_zero(direct));
  }

  CHECK_THROWS_AS(nijenhuis_tensor(Endomorphism(Matrix::identity(3)), g.as_leibniz()),
                  InputError);

  // antisymmetric in its arguments whenever the bracket is
  std::mt19937 rng(17);
  for (int round = 0; round < 20; ++round) {
    Tensor3 c = random_bracket(rng, 3, true);
    Tensor3 nm = random_bracket(rng, 3, false);  // reuse as a random matrix source
    Matrix n(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) n.at(i, j) = nm.at(i, j, 0);
    Tensor3 t2 = nijenhuis_tensor(Endomorphism(n), LeibnizAlgebra(3, c));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k)
          CHECK(t2.at(i, j, k) == -t2.at(j, i, k));
  }
}

TEST_CASE("check_complex_structure") {
  Matrix rot(2, 2);
  rot.at(0, 1) = Scalar(-1);
  rot.at(1, 0) = Scalar(1);
  CHECK(check_complex_structure(Endomorphism(rot), LieAlgebra::abelian(2)).passed());
  CHECK_FALSE(check_complex_structure(Endomorphism(Matrix::identity(2)), aff1())
                  .find("square-is-minus-id")
                  ->pass);

  // no rational complex structure on aff1: exhaustive over {-2..2} entries
  int candidates = 0;
  for (const Matrix& d : corpus::d2_square_roots()) {
    ++candidates;
    CHECK_FALSE(check_complex_structure(Endomorphism(d), aff1()).passed());
  }
  CHECK(candidates == 10);

  // pass implies vanishing Nijenhuis tensor; aff1 + rotation witnesses that
  // the converse fails
  CHECK(nijenhuis_tensor(Endomorphism(rot), aff1().as_leibniz()).is_zero());
  CHECK_FALSE(check_complex_structure(Endomorphism(rot), aff1()).passed());
  for (const Matrix& d : corpus::d2_square_roots()) {
    if (check_complex_structure(Endomorphism(d), LieAlgebra::abelian(2)).passed())
      CHECK(nijenhuis_tensor(Endomorphism(d), LieAlgebra::abelian(2).as_leibniz())
                .is_zero());
  }

  // the rational form of complex aff(1) does carry one
  CHECK(check_complex_structure(Endomorphism(corpus::complex_aff1_i()),
                                corpus::complex_aff1_rational())
            .passed());
}

TEST_CASE("check_representation") {
  CHECK(check_representation(trivial_rep(corpus::sl2(), 2)).passed());
  CHECK(check_representation(adjoint_rep(aff1())).passed());
  CHECK(check_representation(adjoint_rep(corpus::sl2())).passed());

  Representation bad;
  bad.algebra = aff1();
  bad.module_dim = 1;
  bad.action = Tensor3(2, 1, 1);
  bad.action.at(0, 0, 0) = Scalar(1);
  bad.action.at(1, 0, 0) = Scalar(1);
  CheckReport r = check_representation(bad);
  REQUIRE_FALSE(r.passed());
  CHECK(r.entries.front().witness->indices == std::vector<std::size_t>{0, 1});
}

TEST_CASE("gl(V) commutator algebra") {
  LieAlgebra gl2 = gl_commutator_algebra(2);
  CHECK(gl2.dim == 4);
  CHECK(check_lie(gl2).passed());
  // [E00, E01] = E01
  Vec br = gl2.apply(unit_vec(4, 0), unit_vec(4, 1));
  CHECK(br == Vec{Scalar(0), Scalar(1), Scalar(0), Scalar(0)});
}
