#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "splinedim/monomial.hpp"

namespace splinedim {

using Integer = mpz_class;
/// mpq_class keeps itself canonical once constructed through arithmetic;
/// values built from raw numerator/denominator pairs go through canonicalize().
using Rational = mpq_class;

std::string to_string(const Rational& q);

struct Term {
  Monomial monomial;
  Rational coefficient;

  friend bool operator==(const Term& a, const Term& b) {
    return a.monomial == b.monomial && a.coefficient == b.coefficient;
  }
};

/// Integer weights, one per variable.
struct WeightVector {
  std::vector<int> weights;

  int weight(const Monomial& m) const;
};

/// Sparse polynomial over Q. Terms are stored in descending grevlex order
/// with no zero coefficients; the zero polynomial has no terms.
class Polynomial {
 public:
  Polynomial() : Polynomial(VariableSet::xyz()) {}
  explicit Polynomial(VarsPtr vars) : vars_(std::move(vars)) {}

  static Polynomial constant(const Rational& c, VarsPtr vars = VariableSet::xyz());
  static Polynomial variable(std::size_t index, VarsPtr vars = VariableSet::xyz());
  static Polynomial monomial(const Monomial& m, const Rational& c = 1, VarsPtr vars = VariableSet::xyz());
  /// Combines like terms, drops zeros and sorts.
  static Polynomial from_terms(VarsPtr vars, std::vector<Term> terms);

  const VarsPtr& variables() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

  Rational coefficient(const Monomial& m) const;

  /// Largest total degree among the terms; throws ZeroPolynomialError on zero.
  int total_degree() const;
  /// Largest exponent of variable i (0 for the zero polynomial).
  int degree_in(std::size_t i) const;

  /// Relabel onto another variable set. `vars` must contain every variable
  /// that occurs, at the same position.
  Polynomial with_variables(VarsPtr vars) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  Polynomial multiply_monomial(const Monomial& m, const Rational& c = 1) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Value at a rational point (one entry per variable).
  Rational evaluate(const std::vector<Rational>& point) const;

  std::string to_string() const;

 private:
  VarsPtr vars_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

Polynomial pow(const Polynomial& base, int exponent);

/// Common total degree of all terms, or nullopt if the terms disagree.
/// Throws ZeroPolynomialError for the zero polynomial.
std::optional<int> homogeneity(const Polynomial& f);
bool is_homogeneous(const Polynomial& f);

/// f over {x, y} (or over {x, y, z} without z) to a form over {x, y, z}
/// of degree total_degree(f).
Polynomial homogenize(const Polynomial& f);
/// Substitutes z = 1; the result lives over {x, y}.
Polynomial dehomogenize(const Polynomial& F);

/// Sum of the terms of maximal weight. Throws on zero input.
Polynomial initial_form(const Polynomial& f, const WeightVector& w);

/// For a form G over {x, y, z} of degree n vanishing at [0:0:1], the
/// coefficient of z^(n-1): a linear form in x, y (kept over {x, y, z}).
/// Zero means G is singular at the vertex. Throws if G has a z^n term.
Polynomial linear_part_at_vertex(const Polynomial& G);

/// The x,y-form multiplying the highest power of z in G (over {x, y, z}).
Polynomial tangent_cone_form(const Polynomial& G);

/// f(images[0], images[1], ...); images share one variable set.
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images);

/// Exact quotient f / g; throws InvalidArgument when g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

/// Divides by the leading (grevlex) coefficient.
Polynomial make_monic(const Polynomial& f);

/// Scales so coefficients are coprime integers with positive leading coefficient.
Polynomial primitive_part(const Polynomial& f);

/// True iff a = c*b for some nonzero rational c (both nonzero).
bool proportional(const Polynomial& a, const Polynomial& b);

}  // namespace splinedim
