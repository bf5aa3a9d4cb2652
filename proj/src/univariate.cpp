#include "splinedim/univariate.hpp"

#include <sstream>

#include "splinedim/errors.hpp"
#include "splinedim/parser.hpp"

namespace splinedim {

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

void UnivariatePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UnivariatePolynomial UnivariatePolynomial::constant(const Rational& c) { return UnivariatePolynomial({c}); }

UnivariatePolynomial UnivariatePolynomial::binomial(int shift, int k) {
  if (k < 0) return {};
  std::vector<Rational> acc{1};
  for (int i = 0; i < k; ++i) {
    // multiply by (d + shift - i)
    const Rational root(shift - i);
    std::vector<Rational> next(acc.size() + 1, Rational(0));
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j + 1] += acc[j];
      next[j] += acc[j] * root;
    }
    acc = std::move(next);
  }
  Integer fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  for (auto& c : acc) c /= fact;
  return UnivariatePolynomial(std::move(acc));
}

Rational UnivariatePolynomial::operator()(const Rational& d) const {
  Rational v = 0;
  for (std::size_t i = coeffs_.size(); i > 0; --i) v = v * d + coeffs_[i - 1];
  return v;
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator-=(const UnivariatePolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator*=(const Rational& c) {
  Rational k = c;
  k.canonicalize();
  for (auto& x : coeffs_) x *= k;
  trim();
  return *this;
}

std::string UnivariatePolynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i > 0; --i) {
    const std::size_t e = i - 1;
    Rational c = coeffs_[e];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (c < 0) c = -c;
    if (e == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << '*';
    os << var;
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

UnivariatePolynomial parse_univariate(const std::string& source, const std::string& var) {
  const Polynomial p = parse_polynomial(source, VariableSet::single(var));
  std::vector<Rational> coeffs;
  for (const auto& t : p.terms()) {
    const auto e = static_cast<std::size_t>(t.monomial[0]);
    if (coeffs.size() <= e) coeffs.resize(e + 1, Rational(0));
    coeffs[e] = t.coefficient;
  }
  return UnivariatePolynomial(std::move(coeffs));
}

}  // namespace splinedim
