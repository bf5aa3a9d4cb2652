#pragma once

#include <string>
#include <vector>

#include "splinedim/polynomial.hpp"

namespace splinedim {

/// Polynomial in one variable with rational coefficients, lowest degree first.
/// Used for Hilbert polynomials in d.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Rational> coefficients);

  static UnivariatePolynomial constant(const Rational& c);
  /// C(d + shift, k) = (d + shift)(d + shift - 1)...(d + shift - k + 1) / k!.
  static UnivariatePolynomial binomial(int shift, int k);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational operator()(const Rational& d) const;

  UnivariatePolynomial& operator+=(const UnivariatePolynomial& other);
  UnivariatePolynomial& operator-=(const UnivariatePolynomial& other);
  UnivariatePolynomial& operator*=(const Rational& c);
  friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a += b; }
  friend UnivariatePolynomial operator-(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a -= b; }
  friend UnivariatePolynomial operator*(UnivariatePolynomial a, const Rational& c) { return a *= c; }
  friend UnivariatePolynomial operator*(const Rational& c, UnivariatePolynomial a) { return a *= c; }
  friend bool operator==(const UnivariatePolynomial& a, const UnivariatePolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// "3/2*d^2 - 1/2*d + 1"; "0" for zero.
  std::string to_string(const std::string& var = "d") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Reads a polynomial printed by to_string (any expression in `var` accepted).
UnivariatePolynomial parse_univariate(const std::string& source, const std::string& var = "d");

}  // namespace splinedim
