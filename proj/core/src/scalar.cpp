#include "courant/scalar.hpp"

#include <cstdlib>
#include <ostream>

#include "courant/errors.hpp"

namespace courant {

Scalar::Scalar(long num, long den) : re_(num, den), im_(0) {
  if (den == 0) throw Error("scalar: zero denominator");
  re_.canonicalize();
}

Scalar::Scalar(const mpq_class& re, const mpq_class& im) : re_(re), im_(im) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = re;
  im_ = im;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  // (a+bi)/(c+di) = (a+bi)(c-di)/(c^2+d^2); the norm vanishes only at 0.
  mpq_class norm = o.re_ * o.re_ + o.im_ * o.im_;
  if (sgn(norm) == 0) throw Error("scalar: division by zero");
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / norm;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / norm;
  re_ = re;
  im_ = im;
  return *this;
}

namespace {

std::string rational_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Canonical unsigned integer: "0" or no leading zero.
bool parse_uint(std::string_view t, size_t& pos, mpz_class& out) {
  size_t start = pos;
  while (pos < t.size() && t[pos] >= '0' && t[pos] <= '9') ++pos;
  if (pos == start) return false;
  std::string_view digits = t.substr(start, pos - start);
  if (digits.size() > 1 && digits[0] == '0') return false;
  out = mpz_class(std::string(digits), 10);
  return true;
}

// RAT := INT | INT "/" DEN, DEN >= 1, gcd(|num|, den) = 1.
bool parse_rational(std::string_view t, size_t& pos, bool allow_sign,
                    mpq_class& out) {
  bool neg = false;
  if (allow_sign && pos < t.size() && t[pos] == '-') {
    neg = true;
    ++pos;
  }
  mpz_class num;
  if (!parse_uint(t, pos, num)) return false;
  if (neg && sgn(num) == 0) return false;  // "-0" is not canonical
  mpz_class den(1);
  if (pos < t.size() && t[pos] == '/') {
    ++pos;
    if (!parse_uint(t, pos, den)) return false;
    if (sgn(den) == 0) return false;  // zero denominator
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) return false;  // "4/6" and friends
  }
  if (neg) num = -num;
  out = mpq_class(num, den);
  out.canonicalize();
  return true;
}

} // namespace

std::string Scalar::str() const {
  if (is_real()) return rational_str(re_);
  std::string s = rational_str(re_);
  s += sgn(im_) < 0 ? '-' : '+';
  s += rational_str(abs(im_));
  s += 'i';
  return s;
}

std::optional<Scalar> Scalar::parse(std::string_view text) {
  size_t pos = 0;
  mpq_class re;
  if (!parse_rational(text, pos, /*allow_sign=*/true, re)) return std::nullopt;
  if (pos == text.size()) return Scalar(re, mpq_class(0));
  // Imaginary part: SIGN URAT "i", magnitude strictly positive.
  if (text[pos] != '+' && text[pos] != '-') return std::nullopt;
  bool neg = text[pos] == '-';
  ++pos;
  mpq_class mag;
  if (!parse_rational(text, pos, /*allow_sign=*/false, mag)) return std::nullopt;
  if (sgn(mag) == 0) return std::nullopt;  // "1+0i" is not canonical
  if (pos != text.size() - 1 || text[pos] != 'i') return std::nullopt;
  return Scalar(re, neg ? mpq_class(-mag) : mag);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

} // namespace courant
