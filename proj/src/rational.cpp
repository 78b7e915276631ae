#include "chs/rational.hpp"

#include <cctype>
#include <sstream>

#include "chs/error.hpp"

namespace chs {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw DomainError("not an integer: '" + std::string(s) + "'");
  mpz_class v(std::string(s), 10);
  return neg ? mpz_class(-v) : v;
}

[[noreturn]] void reject(std::string_view text) {
  throw DomainError("cannot parse rational '" + std::string(text) +
                    "': use num/den or a finite decimal such as 0.25");
}

} // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) reject(text);

  try {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      mpz_class num = parse_integer(text.substr(0, slash));
      mpz_class den = parse_integer(text.substr(slash + 1));
      if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
      Rational r(num, den);
      r.canonicalize();
      return r;
    }

    std::string_view mantissa = text;
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = text.substr(0, e);
      mpz_class ex = parse_integer(text.substr(e + 1));
      if (!ex.fits_slong_p() || abs(ex) > 4096) reject(text);
      exponent = ex.get_si();
    }

    bool neg = false;
    if (!mantissa.empty() && (mantissa.front() == '+' || mantissa.front() == '-')) {
      neg = mantissa.front() == '-';
      mantissa.remove_prefix(1);
    }
    std::string digits;
    long frac_digits = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      std::string_view ip = mantissa.substr(0, dot);
      std::string_view fp = mantissa.substr(dot + 1);
      if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty()))
        reject(text);
      digits = std::string(ip) + std::string(fp);
      frac_digits = static_cast<long>(fp.size());
    } else {
      if (!all_digits(mantissa)) reject(text);
      digits = std::string(mantissa);
    }

    mpz_class num(digits, 10);
    if (neg) num = -num;
    long shift = exponent - frac_digits;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    Rational r = shift < 0 ? Rational(num, scale) : Rational(num * scale);
    r.canonicalize();
    return r;
  } catch (const DomainError&) {
    reject(text);
  }
}

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double to_double(const Rational& value) { return value.get_d(); }

Rational pow(const Rational& value, unsigned k) {
  Rational out(1);
  mpz_pow_ui(out.get_num_mpz_t(), value.get_num_mpz_t(), k);
  mpz_pow_ui(out.get_den_mpz_t(), value.get_den_mpz_t(), k);
  // num/den stay coprime and den > 0 under powering
  return out;
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::complex<double> GaussianRational::to_complex() const { return {re_.get_d(), im_.get_d()}; }

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational n = o.norm();
  if (sgn(n) == 0) throw DomainError("division by zero Gaussian rational");
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string to_string(const GaussianRational& value) {
  std::ostringstream os;
  os << to_string(value.re());
  if (!value.is_real()) os << (sgn(value.im()) < 0 ? " - " : " + ") << to_string(abs(value.im())) << " i";
  return os.str();
}

} // namespace chs
