#include "courant/tensor.hpp"

#include <algorithm>

#include "courant/errors.hpp"

namespace courant {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::transposed() const {
  Matrix t(cols, rows);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::conjugated() const {
  Matrix t = *this;
  for (Scalar& s : t.a) s = s.conj();
  return t;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw InputError("matrix addition: shape mismatch");
  Matrix r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw InputError("matrix subtraction: shape mismatch");
  Matrix r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols != y.rows) throw InputError("matrix product: shape mismatch");
  Matrix r(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const Scalar& xik = x.at(i, k);
      if (xik.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols; ++j)
        r.at(i, j) += xik * y.at(k, j);
    }
  return r;
}

Matrix operator*(const Scalar& s, const Matrix& x) {
  Matrix r = x;
  for (Scalar& v : r.a) v *= s;
  return r;
}

Vec operator*(const Matrix& x, const Vec& v) {
  if (x.cols != v.size()) throw InputError("matrix-vector product: shape mismatch");
  Vec r(x.rows);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) r[i] += x.at(i, j) * v[j];
  return r;
}

bool Tensor3::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Tensor4::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec operator+(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw InputError("vector addition: length mismatch");
  Vec r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}

Vec operator-(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw InputError("vector subtraction: length mismatch");
  Vec r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
  return r;
}

Vec operator*(const Scalar& s, const Vec& v) {
  Vec r = v;
  for (Scalar& x : r) x *= s;
  return r;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t k) {
  Vec v(n);
  v[k] = Scalar(1);
  return v;
}

} // namespace courant
