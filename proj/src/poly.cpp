#include "chs/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "chs/error.hpp"

namespace chs {

namespace {

void require_same_variables(const MultiPoly& p, const MultiPoly& q) {
  if (p.variables() != q.variables()) throw DomainError("variable-list mismatch");
}

void accumulate(MultiPoly::Terms& terms, const Monomial& m, const GaussianRational& c) {
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

void require_nonzero(const MultiPoly& p, const char* what) {
  if (p.is_zero()) throw DomainError(std::string(what) + ": zero polynomial");
}

} // namespace

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {
  if (vars_.empty() || vars_.size() > kMaxVariables)
    throw DomainError("polynomials take 1 to 3 variables");
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t k = i + 1; k < vars_.size(); ++k)
      if (vars_[i] == vars_[k]) throw DomainError("duplicate variable '" + vars_[i] + "'");
}

MultiPoly::MultiPoly(std::vector<std::string> variables, Terms terms)
    : MultiPoly(std::move(variables)) {
  std::erase_if(terms, [](const auto& kv) { return kv.second.is_zero(); });
  for (const auto& [m, c] : terms)
    for (std::size_t i = vars_.size(); i < kMaxVariables; ++i)
      if (m.exp[i] != 0) throw DomainError("monomial exceeds polynomial arity");
  terms_ = std::move(terms);
}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, GaussianRational c) {
  Terms t;
  t.emplace(Monomial{}, std::move(c));
  return MultiPoly(std::move(variables), std::move(t));
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, const std::string& name) {
  MultiPoly p(std::move(variables));
  Monomial m;
  m.exp[p.index_of(name)] = 1;
  p.terms_.emplace(m, GaussianRational(1));
  return p;
}

int MultiPoly::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

std::size_t MultiPoly::index_of(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw DomainError("unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - vars_.begin());
}

GaussianRational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational{} : it->second;
}

const GaussianRational& MultiPoly::leading_coefficient() const {
  require_nonzero(*this, "leading_coefficient");
  return terms_.begin()->second;
}

MultiPoly MultiPoly::scaled(const GaussianRational& c) const {
  if (c.is_zero()) return MultiPoly(vars_);
  Terms t;
  for (const auto& [m, v] : terms_) t.emplace_hint(t.end(), m, v * c);
  return MultiPoly(vars_, std::move(t));
}

MultiPoly operator+(const MultiPoly& p, const MultiPoly& q) {
  require_same_variables(p, q);
  MultiPoly::Terms t = p.terms_;
  for (const auto& [m, c] : q.terms_) accumulate(t, m, c);
  return MultiPoly(p.vars_, std::move(t));
}

MultiPoly operator-(const MultiPoly& p) { return p.scaled(GaussianRational(-1)); }

MultiPoly operator-(const MultiPoly& p, const MultiPoly& q) { return p + (-q); }

MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
  require_same_variables(p, q);
  MultiPoly::Terms t;
  for (const auto& [mp, cp] : p.terms_)
    for (const auto& [mq, cq] : q.terms_) accumulate(t, mp * mq, cp * cq);
  return MultiPoly(p.vars_, std::move(t));
}

MultiPoly add(const MultiPoly& p, const MultiPoly& q) { return p + q; }
MultiPoly mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }

MultiPoly pow(const MultiPoly& p, unsigned k) {
  MultiPoly result = MultiPoly::constant(p.variables(), GaussianRational(1));
  MultiPoly base = p;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

MultiPoly substitute(const MultiPoly& p, const std::string& var, const MultiPoly& expr) {
  const std::size_t target = p.index_of(var);

  // Re-express expr over p's variable list.
  MultiPoly::Terms embedded;
  for (const auto& [m, c] : expr.terms()) {
    Monomial e;
    for (std::size_t i = 0; i < expr.arity(); ++i)
      if (m.exp[i] != 0) e.exp[p.index_of(expr.variables()[i])] = m.exp[i];
    accumulate(embedded, e, c);
  }
  const MultiPoly value(p.variables(), std::move(embedded));

  std::uint32_t max_power = 0;
  for (const auto& [m, c] : p.terms()) max_power = std::max(max_power, m.exp[target]);
  std::vector<MultiPoly> powers;
  powers.reserve(max_power + 1);
  powers.push_back(MultiPoly::constant(p.variables(), GaussianRational(1)));
  for (std::uint32_t k = 1; k <= max_power; ++k) powers.push_back(powers.back() * value);

  MultiPoly::Terms out;
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    rest.exp[target] = 0;
    for (const auto& [mv, cv] : powers[m.exp[target]].terms()) accumulate(out, rest * mv, c * cv);
  }
  return MultiPoly(p.variables(), std::move(out));
}

MultiPoly homogenize(const MultiPoly& p, const std::string& new_var) {
  require_nonzero(p, "homogenize");
  if (p.arity() != 2) throw DomainError("homogenize expects a polynomial in two variables");
  if (new_var == "x1" || new_var == "x2") throw DomainError("homogenizing variable clashes with x1/x2");
  const unsigned n = static_cast<unsigned>(p.total_degree());
  MultiPoly::Terms t;
  for (const auto& [m, c] : p.terms()) t.emplace(Monomial{{n - m.degree(), m.exp[0], m.exp[1]}}, c);
  return MultiPoly({new_var, "x1", "x2"}, std::move(t));
}

MultiPoly dehomogenize(const MultiPoly& p, std::vector<std::string> affine) {
  if (p.arity() != 3 || affine.size() != 2) throw DomainError("dehomogenize expects three variables");
  MultiPoly::Terms t;
  for (const auto& [m, c] : p.terms()) accumulate(t, Monomial{{m.exp[1], m.exp[2], 0}}, c);
  return MultiPoly(std::move(affine), std::move(t));
}

MultiPoly drop_variable(const MultiPoly& p, const std::string& var) {
  const std::size_t idx = p.index_of(var);
  if (p.arity() == 1) throw DomainError("cannot drop the only variable");
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < p.arity(); ++i)
    if (i != idx) vars.push_back(p.variables()[i]);
  MultiPoly::Terms t;
  for (const auto& [m, c] : p.terms()) {
    if (m.exp[idx] != 0) throw DomainError("variable '" + var + "' still occurs");
    Monomial r;
    for (std::size_t i = 0, k = 0; i < p.arity(); ++i)
      if (i != idx) r.exp[k++] = m.exp[i];
    t.emplace(r, c);
  }
  return MultiPoly(std::move(vars), std::move(t));
}

MultiPoly lowest_form(const MultiPoly& p) {
  require_nonzero(p, "lowest_form");
  const unsigned low = p.terms().rbegin()->first.degree();
  MultiPoly::Terms t;
  for (const auto& [m, c] : p.terms())
    if (m.degree() == low) t.emplace(m, c);
  return MultiPoly(p.variables(), std::move(t));
}

unsigned vanishing_order(const MultiPoly& p) {
  require_nonzero(p, "vanishing_order");
  return vanishing_order(p, p.variables().front());
}

unsigned vanishing_order(const MultiPoly& p, const std::string& var) {
  require_nonzero(p, "vanishing_order");
  const std::size_t idx = p.index_of(var);
  std::uint32_t k = std::numeric_limits<std::uint32_t>::max();
  for (const auto& [m, c] : p.terms()) k = std::min(k, m.exp[idx]);
  return k;
}

MultiPoly primitive_part(const MultiPoly& p) {
  if (p.is_zero()) return p;
  mpz_class den = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.im().get_den_mpz_t());
  }
  mpz_class content = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_class re = c.re().get_num() * (den / c.re().get_den());
    mpz_class im = c.im().get_num() * (den / c.im().get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), re.get_mpz_t());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), im.get_mpz_t());
  }
  Rational scale(den, content);
  scale.canonicalize();
  const GaussianRational& lead = p.leading_coefficient();
  if (sgn(lead.re()) < 0 || (sgn(lead.re()) == 0 && sgn(lead.im()) < 0)) scale = -scale;
  return p.scaled(GaussianRational(scale));
}

bool proportional(const MultiPoly& p, const MultiPoly& q) {
  if (p.variables() != q.variables() || p.is_zero() || q.is_zero()) return false;
  if (p.term_count() != q.term_count()) return false;
  const GaussianRational ratio = p.leading_coefficient() / q.leading_coefficient();
  auto it = q.terms().begin();
  for (const auto& [m, c] : p.terms()) {
    if (!(it->first == m) || !(c == it->second * ratio)) return false;
    ++it;
  }
  return true;
}

double max_abs_coefficient(const MultiPoly& p) {
  double best = 0.0;
  for (const auto& [m, c] : p.terms()) best = std::max(best, std::abs(c.to_complex()));
  return best;
}

std::complex<double> eval_complex(const MultiPoly& p, std::span<const std::complex<double>> point) {
  return NumericPoly(p)(point);
}

NumericPoly::NumericPoly(const MultiPoly& p) : arity_(p.arity()), degree_(p.total_degree()) {
  monomials_.reserve(p.term_count());
  coefficients_.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) {
    monomials_.push_back(m);
    coefficients_.push_back(c.to_complex());
    max_abs_ = std::max(max_abs_, std::abs(coefficients_.back()));
  }
}

std::complex<double> NumericPoly::operator()(std::span<const std::complex<double>> point) const {
  if (point.size() != arity_) throw DomainError("evaluation point has wrong dimension");
  if (monomials_.empty()) return {0.0, 0.0};
  // Power tables per variable, then one product per term.
  const std::size_t top = static_cast<std::size_t>(std::max(degree_, 0)) + 1;
  std::array<std::vector<std::complex<double>>, kMaxVariables> powers;
  for (std::size_t v = 0; v < arity_; ++v) {
    powers[v].resize(top);
    powers[v][0] = 1.0;
    for (std::size_t k = 1; k < top; ++k) powers[v][k] = powers[v][k - 1] * point[v];
  }
  std::complex<double> sum = 0.0;
  for (std::size_t t = 0; t < monomials_.size(); ++t) {
    std::complex<double> term = coefficients_[t];
    for (std::size_t v = 0; v < arity_; ++v) term *= powers[v][monomials_[t].exp[v]];
    sum += term;
  }
  return sum;
}

double NumericPoly::eval_real(double x, double y) const {
  if (arity_ != 2) throw DomainError("eval_real expects two variables");
  if (monomials_.empty()) return 0.0;
  const std::size_t top = static_cast<std::size_t>(degree_) + 1;
  std::vector<double> px(top), py(top);
  px[0] = py[0] = 1.0;
  for (std::size_t k = 1; k < top; ++k) {
    px[k] = px[k - 1] * x;
    py[k] = py[k - 1] * y;
  }
  double sum = 0.0;
  for (std::size_t t = 0; t < monomials_.size(); ++t)
    sum += coefficients_[t].real() * px[monomials_[t].exp[0]] * py[monomials_[t].exp[1]];
  return sum;
}

nlohmann::json to_json(const MultiPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json exp = nlohmann::json::array();
    for (std::size_t i = 0; i < p.arity(); ++i) exp.push_back(m.exp[i]);
    terms.push_back({{"exp", exp}, {"re", to_string(c.re())}, {"im", to_string(c.im())}});
  }
  return {{"vars", p.variables()}, {"terms", terms}};
}

MultiPoly poly_from_json(const nlohmann::json& j) {
  try {
    auto vars = j.at("vars").get<std::vector<std::string>>();
    MultiPoly::Terms terms;
    for (const auto& t : j.at("terms")) {
      const auto& exp = t.at("exp");
      if (exp.size() != vars.size()) throw DomainError("exponent vector length does not match vars");
      Monomial m;
      for (std::size_t i = 0; i < exp.size(); ++i) m.exp[i] = exp[i].get<std::uint32_t>();
      GaussianRational c(parse_rational(t.at("re").get<std::string>()),
                         parse_rational(t.at("im").get<std::string>()));
      accumulate(terms, m, c);
    }
    return MultiPoly(std::move(vars), std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::string coef;
    bool negative = false;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      Rational a = abs(c.re());
      coef = a.get_den() == 1 ? a.get_num().get_str() : a.get_str();
    } else {
      coef = "(" + to_string(c) + ")";
    }
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < p.arity(); ++i) {
      if (m.exp[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += p.variables()[i];
      if (m.exp[i] > 1) mono += "^" + std::to_string(m.exp[i]);
    }
    if (mono.empty())
      os << coef;
    else if (coef == "1")
      os << mono;
    else
      os << coef << "*" << mono;
  }
  return os.str();
}

} // namespace chs
