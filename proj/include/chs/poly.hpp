#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chs/rational.hpp"

namespace chs {

inline constexpr std::size_t kMaxVariables = 3;

/// Exponent vector. Only the first `arity` slots of the owning polynomial are
/// meaningful; the rest stay zero so comparison can ignore arity.
struct Monomial {
  std::array<std::uint32_t, kMaxVariables> exp{};

  unsigned degree() const { return exp[0] + exp[1] + exp[2]; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return {{a.exp[0] + b.exp[0], a.exp[1] + b.exp[1], a.exp[2] + b.exp[2]}};
  }
};

/// Graded lexicographic, greatest first. Iterating a term map yields the
/// canonical (serialization) order and begin() is the leading term.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.exp > b.exp;
  }
};

/// Sparse polynomial in up to three named variables with Gaussian-rational
/// coefficients. Values are immutable; every operation returns a new one.
class MultiPoly {
public:
  using Terms = std::map<Monomial, GaussianRational, GradedLexGreater>;

  explicit MultiPoly(std::vector<std::string> variables);
  /// Zero coefficients in `terms` are dropped.
  MultiPoly(std::vector<std::string> variables, Terms terms);

  static MultiPoly constant(std::vector<std::string> variables, GaussianRational c);
  static MultiPoly variable(std::vector<std::string> variables, const std::string& name);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t arity() const { return vars_.size(); }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  /// Largest monomial degree; -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  /// Index of `name` in the variable list; throws DomainError when absent.
  std::size_t index_of(const std::string& name) const;

  GaussianRational coefficient(const Monomial& m) const;
  /// Coefficient of the first term in canonical order. Requires nonzero.
  const GaussianRational& leading_coefficient() const;

  MultiPoly scaled(const GaussianRational& c) const;

  friend MultiPoly operator+(const MultiPoly& p, const MultiPoly& q);
  friend MultiPoly operator-(const MultiPoly& p, const MultiPoly& q);
  friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q);
  friend MultiPoly operator-(const MultiPoly& p);
  friend bool operator==(const MultiPoly& p, const MultiPoly& q) {
    return p.vars_ == q.vars_ && p.terms_ == q.terms_;
  }

private:
  std::vector<std::string> vars_;
  Terms terms_;
};

MultiPoly add(const MultiPoly& p, const MultiPoly& q);
MultiPoly mul(const MultiPoly& p, const MultiPoly& q);
MultiPoly pow(const MultiPoly& p, unsigned k);

/// Replaces `var` by `expr`. `expr` may use any subset of p's variables.
MultiPoly substitute(const MultiPoly& p, const std::string& var, const MultiPoly& expr);

/// p(x, y) of degree N -> x0^N p(x1/x0, x2/x0) over {new_var, x1, x2}.
MultiPoly homogenize(const MultiPoly& p, const std::string& new_var = "x0");

/// Sets the first variable to 1 and renames the remaining two.
MultiPoly dehomogenize(const MultiPoly& p, std::vector<std::string> affine = {"x", "y"});

/// Removes a variable that does not occur in any term.
MultiPoly drop_variable(const MultiPoly& p, const std::string& var);

/// Sum of the terms of minimal total degree.
MultiPoly lowest_form(const MultiPoly& p);

/// Largest k such that var^k divides p. Defaults to the first variable.
unsigned vanishing_order(const MultiPoly& p);
unsigned vanishing_order(const MultiPoly& p, const std::string& var);

/// Scales p so that its coefficients are Gaussian integers with unit content
/// and the leading coefficient has positive real part (or zero real part and
/// positive imaginary part). Real polynomials end with a positive leading
/// integer coefficient.
MultiPoly primitive_part(const MultiPoly& p);

/// True iff p = c q for some nonzero Gaussian rational c.
bool proportional(const MultiPoly& p, const MultiPoly& q);

double max_abs_coefficient(const MultiPoly& p);

std::complex<double> eval_complex(const MultiPoly& p, std::span<const std::complex<double>> point);

/// Floating-point snapshot of a polynomial for repeated evaluation.
class NumericPoly {
public:
  explicit NumericPoly(const MultiPoly& p);

  std::size_t arity() const { return arity_; }
  int degree() const { return degree_; }
  double max_abs_coefficient() const { return max_abs_; }

  std::complex<double> operator()(std::span<const std::complex<double>> point) const;
  /// Real evaluation of the real part of the coefficients; used by the
  /// residual kernels on real sample points.
  double eval_real(double x, double y) const;

private:
  std::size_t arity_;
  int degree_;
  double max_abs_ = 0.0;
  std::vector<Monomial> monomials_;
  std::vector<std::complex<double>> coefficients_;
};

nlohmann::json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& j);

/// Human-readable rendering, e.g. "x^2 + y^2 - x".
std::string to_string(const MultiPoly& p);

} // namespace chs
