#ifndef COURANT_TENSOR_HPP
#define COURANT_TENSOR_HPP

#include <cstddef>
#include <vector>

#include "courant/scalar.hpp"

namespace courant {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix of exact scalars.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Scalar> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Scalar& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t r, std::size_t c) { return Matrix(r, c); }

  bool is_zero() const;
  Matrix transposed() const;
  Matrix conjugated() const;

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }
};

Matrix operator+(const Matrix& x, const Matrix& y);
Matrix operator-(const Matrix& x, const Matrix& y);
Matrix operator*(const Matrix& x, const Matrix& y);
Matrix operator*(const Scalar& s, const Matrix& x);
Vec operator*(const Matrix& x, const Vec& v);

/// Dense 3-index tensor. The meaning of each slot is documented at every use
/// site; e.g. a bracket tensor c has c.at(i,j,k) the e_k coefficient of
/// [e_i, e_j], and an operator-valued tensor t has t.at(i,a,b) the (a,b)
/// matrix entry of the operator attached to basis vector e_i.
struct Tensor3 {
  std::size_t d0 = 0, d1 = 0, d2 = 0;
  std::vector<Scalar> a;

  Tensor3() = default;
  Tensor3(std::size_t n0, std::size_t n1, std::size_t n2)
      : d0(n0), d1(n1), d2(n2), a(n0 * n1 * n2) {}

  Scalar& at(std::size_t i, std::size_t j, std::size_t k) {
    return a[(i * d1 + j) * d2 + k];
  }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
    return a[(i * d1 + j) * d2 + k];
  }

  bool is_zero() const;

  friend bool operator==(const Tensor3& x, const Tensor3& y) {
    return x.d0 == y.d0 && x.d1 == y.d1 && x.d2 == y.d2 && x.a == y.a;
  }
  friend bool operator!=(const Tensor3& x, const Tensor3& y) { return !(x == y); }
};

/// Dense 4-index tensor (used for the 3-ary bracket of a Lie 2-algebra:
/// l3.at(i,j,k,m) is the coefficient of the m-th degree -1 basis vector in
/// l3(e_i, e_j, e_k)).
struct Tensor4 {
  std::size_t d0 = 0, d1 = 0, d2 = 0, d3 = 0;
  std::vector<Scalar> a;

  Tensor4() = default;
  Tensor4(std::size_t n0, std::size_t n1, std::size_t n2, std::size_t n3)
      : d0(n0), d1(n1), d2(n2), d3(n3), a(n0 * n1 * n2 * n3) {}

  Scalar& at(std::size_t i, std::size_t j, std::size_t k, std::size_t m) {
    return a[((i * d1 + j) * d2 + k) * d3 + m];
  }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k,
                   std::size_t m) const {
    return a[((i * d1 + j) * d2 + k) * d3 + m];
  }

  bool is_zero() const;

  friend bool operator==(const Tensor4& x, const Tensor4& y) {
    return x.d0 == y.d0 && x.d1 == y.d1 && x.d2 == y.d2 && x.d3 == y.d3 &&
           x.a == y.a;
  }
  friend bool operator!=(const Tensor4& x, const Tensor4& y) { return !(x == y); }
};

/// A subspace of an ambient coordinate space, given by a list of linearly
/// independent basis vectors (rows).
struct Subspace {
  std::size_t ambient = 0;
  std::vector<Vec> basis;

  std::size_t dim() const { return basis.size(); }
};

Vec operator+(const Vec& x, const Vec& y);
Vec operator-(const Vec& x, const Vec& y);
Vec operator*(const Scalar& s, const Vec& v);
bool is_zero(const Vec& v);
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t k);

} // namespace courant

#endif
