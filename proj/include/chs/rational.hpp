#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace chs {

/// Exact rational number. GMP keeps numerator/denominator coprime with a
/// positive denominator once canonicalized; every constructor below does so.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Parses "num/den", an integer, or a finite decimal ("0.25", "-1.5e-2").
/// Decimal input converts exactly (0.25 -> 1/4). Throws DomainError otherwise.
Rational parse_rational(std::string_view text);

/// "num/den" with the denominator always present ("1/1", "-3/4").
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// value^k with 0^0 = 1.
Rational pow(const Rational& value, unsigned k);

mpz_class binomial(unsigned n, unsigned k);

/// a + b i with rational a, b.
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}
  GaussianRational(long re) : re_(re) {}
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  std::complex<double> to_complex() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

private:
  Rational re_{0};
  Rational im_{0};
};

/// "re + im i" in num/den form, for diagnostics.
std::string to_string(const GaussianRational& value);

} // namespace chs
