#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "chs/poly.hpp"

namespace chs::test {

inline const std::vector<std::string> XY{"x", "y"};
inline const std::vector<std::string> H{"x0", "x1", "x2"};

/// Polynomial over `vars` from (e0, e1, e2, coefficient) rows.
inline MultiPoly poly(const std::vector<std::string>& vars,
                      std::initializer_list<std::tuple<unsigned, unsigned, unsigned, GaussianRational>> rows) {
  MultiPoly::Terms t;
  for (const auto& [a, b, c, k] : rows) t[Monomial{{a, b, c}}] += k;
  return MultiPoly(vars, std::move(t));
}

inline MultiPoly xy(std::initializer_list<std::tuple<unsigned, unsigned, long>> rows) {
  MultiPoly::Terms t;
  for (const auto& [a, b, k] : rows) t[Monomial{{a, b, 0}}] += GaussianRational(k);
  return MultiPoly(XY, std::move(t));
}

/// Small random polynomial: up to `terms` terms of degree <= `deg`,
/// coefficients num/den with |num| <= 5, den <= 4, optionally Gaussian.
inline MultiPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, int terms, unsigned deg,
                             bool gaussian) {
  std::uniform_int_distribution<unsigned> e(0, deg);
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  MultiPoly::Terms t;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    unsigned left = deg;
    for (std::size_t v = 0; v < vars.size(); ++v) {
      m.exp[v] = std::min(e(rng), left);
      left -= m.exp[v];
    }
    GaussianRational c(make_rational(num(rng), den(rng)), gaussian ? make_rational(num(rng), den(rng)) : Rational(0));
    t[m] += c;
  }
  return MultiPoly(vars, std::move(t));
}

} // namespace chs::test
