#ifndef COURANT_SCALAR_HPP
#define COURANT_SCALAR_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace courant {

/// Ground field marker. Scalars store a real and an imaginary rational part
/// in every case; a Field tag on structures and documents records whether the
/// imaginary parts are allowed to be nonzero.
enum class Field { rational, gaussian };

/// Exact Gaussian-rational number re + im*i with arbitrary-precision
/// rational components. Rational values are the special case im == 0.
///
/// Both components are kept in canonical form (denominator > 0, reduced);
/// mpq_class guarantees this is preserved by arithmetic.
///
/// Text encoding: "p/q" with q > 0 and gcd(|p|,q) = 1, or "p" meaning p/1.
/// Gaussian values with im != 0 are written "<re>+<|im|>i" or "<re>-<|im|>i",
/// e.g. "1/2-3/4i". Parsing is strict: non-canonical fractions ("4/6"),
/// zero denominators, leading zeros, and "+" signs on the real part are
/// rejected, as is an explicit zero imaginary part.
class Scalar {
 public:
  Scalar() : re_(0), im_(0) {}
  Scalar(long n) : re_(n), im_(0) {}                // NOLINT(runtime/explicit)
  Scalar(long num, long den);
  Scalar(const mpq_class& re, const mpq_class& im);

  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);  ///< throws Error on division by zero

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Canonical text form; inverse of parse on all outputs.
  std::string str() const;

  /// Strict canonical parser. Returns nullopt on any malformed or
  /// non-canonical input.
  static std::optional<Scalar> parse(std::string_view text);

 private:
  mpq_class re_;
  mpq_class im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace courant

#endif
