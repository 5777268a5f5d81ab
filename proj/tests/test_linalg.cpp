#include <doctest.h>

#include <random>

#include "courant/errors.hpp"
#include "courant/linalg.hpp"

using namespace courant;

namespace {

Matrix from_rows(std::vector<std::vector<long>> rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = Scalar(rows[r][c]);
  return m;
}

} // namespace

TEST_CASE("solve_linear on the stated instances") {
  Vec b = {Scalar(3), Scalar(-1, 2)};
  auto x = solve_linear(Matrix::identity(2), b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  Matrix a = from_rows({{1, 1}, {2, 2}});
  CHECK_FALSE(solve_linear(a, {Scalar(1), Scalar(3)}).has_value());

  auto y = solve_linear(a, {Scalar(1), Scalar(2)});
  REQUIRE(y.has_value());
  CHECK((*y)[0] + (*y)[1] == Scalar(1));
  CHECK(a * *y == Vec{Scalar(1), Scalar(2)});

  CHECK_THROWS_AS(solve_linear(a, {Scalar(1)}), InputError);
}

TEST_CASE("kernel_basis on the stated instances") {
  CHECK(kernel_basis(Matrix::identity(3)).dim() == 0);
  CHECK(kernel_basis(Matrix::zero(2, 2)).dim() == 2);

  Matrix a = from_rows({{1, 1}});
  Subspace k = kernel_basis(a);
  REQUIRE(k.dim() == 1);
  CHECK(is_zero(a * k.basis[0]));
  CHECK(rank(a) == 1);
  Subspace expected;
  expected.ambient = 2;
  expected.basis = {{Scalar(1), Scalar(-1)}};
  CHECK(subspaces_equal(k, expected));
}

TEST_CASE("complexify and Gaussian kernels") {
  CHECK(complexify(Matrix::identity(2)) == Matrix::identity(2));

  // kernel of [[i, 1]] is the line through (1, -i)
  Matrix a(1, 2);
  a.at(0, 0) = Scalar::i();
  a.at(0, 1) = Scalar(1);
  Subspace k = kernel_basis(a);
  REQUIRE(k.dim() == 1);
  CHECK(is_zero(a * k.basis[0]));
  Subspace expected;
  expected.ambient = 2;
  expected.basis = {{Scalar(1), -Scalar::i()}};
  CHECK(subspaces_equal(k, expected));
}

TEST_CASE("solve and kernel round-trip on random exact systems") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> dim(1, 8);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int round = 0; round < 40; ++round) {
    std::size_t r = dim(rng), c = dim(rng);
    Matrix a(r, c);
    for (Scalar& s : a.a) s = Scalar(coeff(rng));
    Subspace k = kernel_basis(a);
    CHECK(k.dim() == c - rank(a));
    for (const Vec& v : k.basis) CHECK(is_zero(a * v));
    Vec b(r);
    for (Scalar& s : b) s = Scalar(coeff(rng));
    auto x = solve_linear(a, b);
    if (x) CHECK(a * *x == b);
  }
}

TEST_CASE("rational results embed in the Gaussian field unchanged") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coeff(-3, 3);
  Matrix a(4, 4);
  for (Scalar& s : a.a) s = Scalar(coeff(rng));
  Vec b(4);
  for (Scalar& s : b) s = Scalar(coeff(rng));
  auto over_q = solve_linear(a, b);
  auto over_qi = solve_linear(complexify(a), b);
  REQUIRE(over_q.has_value() == over_qi.has_value());
  if (over_q) {
    CHECK(*over_q == *over_qi);
    for (const Scalar& s : *over_qi) CHECK(s.is_real());
  }
}

TEST_CASE("inverse and rref") {
  Matrix a = from_rows({{2, 1, 0}, {0, 1, 0}, {1, 0, 1}});
  auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK(a * *inv == Matrix::identity(3));
  CHECK_FALSE(inverse(from_rows({{1, 2}, {2, 4}})).has_value());

  RrefResult red = rref(from_rows({{0, 2, 4}, {1, 1, 1}}));
  CHECK(red.rank == 2);
  CHECK(red.pivot_cols == std::vector<std::size_t>{0, 1});
  CHECK(rref(red.m).m == red.m);
}

TEST_CASE("span utilities") {
  Subspace s;
  s.ambient = 3;
  s.basis = {{Scalar(1), Scalar(0), Scalar(1)}, {Scalar(0), Scalar(1), Scalar(0)}};
  CHECK(basis_independent(s));
  CHECK(in_span(s, {Scalar(2), Scalar(3), Scalar(2)}));
  CHECK_FALSE(in_span(s, {Scalar(0), Scalar(0), Scalar(1)}));
  CHECK(is_zero(span_residual(s, {Scalar(2), Scalar(3), Scalar(2)})));
  CHECK_FALSE(is_zero(span_residual(s, {Scalar(0), Scalar(0), Scalar(1)})));

  Subspace t = s;
  t.basis.push_back({Scalar(1), Scalar(1), Scalar(1)});
  CHECK_FALSE(basis_independent(t));
}
