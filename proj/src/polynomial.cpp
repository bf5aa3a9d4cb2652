#include "splinedim/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "splinedim/errors.hpp"

namespace splinedim {

namespace {

bool term_greater(const Term& a, const Term& b) { return grevlex_compare(a.monomial, b.monomial) > 0; }

void require_same(const VarsPtr& a, const VarsPtr& b) {
  if (!same_variables(a, b)) throw VariableMismatch("polynomials live over different variable sets");
}

}  // namespace

std::string to_string(const Rational& q) { return q.get_str(); }

int WeightVector::weight(const Monomial& m) const {
  int w = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) w += weights[i] * m[i];
  return w;
}

Polynomial Polynomial::constant(const Rational& c, VarsPtr vars) {
  return monomial(Monomial{}, c, std::move(vars));
}

Polynomial Polynomial::variable(std::size_t index, VarsPtr vars) {
  if (index >= vars->size()) throw InvalidArgument("variable index out of range");
  return monomial(Monomial::variable(index), 1, std::move(vars));
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c, VarsPtr vars) {
  if (m.support_size() > vars->size()) throw VariableMismatch("monomial uses variables outside the set");
  Polynomial p(std::move(vars));
  Rational k = c;
  k.canonicalize();
  if (k != 0) p.terms_.push_back({m, k});
  return p;
}

Polynomial Polynomial::from_terms(VarsPtr vars, std::vector<Term> terms) {
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(terms.size());
  for (auto& t : terms) {
    if (t.monomial.support_size() > vars->size()) throw VariableMismatch("monomial uses variables outside the set");
    acc[t.monomial] += t.coefficient;
  }
  for (auto& [m, c] : acc) c.canonicalize();
  Polynomial p(std::move(vars));
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({m, c});
  std::sort(p.terms_.begin(), p.terms_.end(), term_greater);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return grevlex_compare(t.monomial, key) > 0;
  });
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return 0;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) throw ZeroPolynomialError("the zero polynomial has no degree");
  return terms_.front().monomial.degree();
}

int Polynomial::degree_in(std::size_t i) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[i]);
  return d;
}

Polynomial Polynomial::with_variables(VarsPtr vars) const {
  for (std::size_t i = 0; i < std::min(vars->size(), vars_->size()); ++i)
    if (vars->name(i) != vars_->name(i)) throw VariableMismatch("variable sets are not prefix-compatible");
  for (const auto& t : terms_)
    if (t.monomial.support_size() > vars->size())
      throw VariableMismatch("polynomial uses a variable missing from the target set");
  Polynomial p(std::move(vars));
  p.terms_ = terms_;
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same(vars_, other.vars_);
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    int cmp;
    if (a == terms_.end())
      cmp = -1;
    else if (b == other.terms_.end())
      cmp = 1;
    else
      cmp = grevlex_compare(a->monomial, b->monomial);
    if (cmp > 0) {
      out.push_back(std::move(*a++));
    } else if (cmp < 0) {
      out.push_back(*b++);
    } else {
      Rational c = a->coefficient + b->coefficient;
      if (c != 0) out.push_back({a->monomial, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  Rational k = c;
  k.canonicalize();
  for (auto& t : terms_) t.coefficient *= k;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same(a.vars_, b.vars_);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.vars_);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc[s.monomial * t.monomial] += s.coefficient * t.coefficient;
  Polynomial p(a.vars_);
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({m, c});
  std::sort(p.terms_.begin(), p.terms_.end(), term_greater);
  return p;
}

Polynomial Polynomial::multiply_monomial(const Monomial& m, const Rational& c) const {
  Polynomial p(vars_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coefficient * c});
  if (m.support_size() > vars_->size()) throw VariableMismatch("monomial uses variables outside the set");
  return p;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_variables(a.vars_, b.vars_) && a.terms_ == b.terms_;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != vars_->size()) throw InvalidArgument("evaluation point has the wrong length");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coefficient;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (int k = 0; k < t.monomial[i]; ++k) v *= point[i];
    sum += v;
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coefficient;
    if (first) {
      if (c < 0) {
        os << '-';
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (t.monomial.is_one()) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << '*';
      os << splinedim::to_string(t.monomial, *vars_);
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Polynomial pow(const Polynomial& base, int exponent) {
  if (exponent < 0) throw InvalidArgument("negative exponent");
  Polynomial result = Polynomial::constant(1, base.variables());
  Polynomial b = base;
  while (exponent > 0) {
    if (exponent & 1) result = result * b;
    exponent >>= 1;
    if (exponent > 0) b = b * b;
  }
  return result;
}

std::optional<int> homogeneity(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomialError("homogeneity of the zero polynomial is undefined");
  const int d = f.terms().front().monomial.degree();
  for (const auto& t : f.terms())
    if (t.monomial.degree() != d) return std::nullopt;
  return d;
}

bool is_homogeneous(const Polynomial& f) { return f.is_zero() || homogeneity(f).has_value(); }

Polynomial homogenize(const Polynomial& f) {
  const auto& vars = *f.variables();
  if (vars.size() < 2 || vars.name(0) != "x" || vars.name(1) != "y" ||
      (vars.size() == 3 && vars.name(2) != "z") || vars.size() > 3)
    throw VariableMismatch("homogenize expects a polynomial in x, y");
  if (vars.size() == 3 && f.degree_in(2) > 0) throw VariableMismatch("homogenize expects no z");
  auto xyz = VariableSet::xyz();
  if (f.is_zero()) return Polynomial(xyz);
  const int n = f.total_degree();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) terms.push_back({t.monomial.with_exponent(2, n - t.monomial.degree()), t.coefficient});
  return Polynomial::from_terms(xyz, std::move(terms));
}

Polynomial dehomogenize(const Polynomial& F) {
  if (!same_variables(F.variables(), VariableSet::xyz())) throw VariableMismatch("dehomogenize expects x, y, z");
  std::vector<Term> terms;
  for (const auto& t : F.terms()) terms.push_back({t.monomial.with_exponent(2, 0), t.coefficient});
  return Polynomial::from_terms(VariableSet::xy(), std::move(terms));
}

Polynomial initial_form(const Polynomial& f, const WeightVector& w) {
  if (f.is_zero()) throw ZeroPolynomialError("initial form of the zero polynomial");
  if (w.weights.size() != f.variables()->size()) throw InvalidArgument("weight vector length mismatch");
  int best = w.weight(f.terms().front().monomial);
  for (const auto& t : f.terms()) best = std::max(best, w.weight(t.monomial));
  std::vector<Term> terms;
  for (const auto& t : f.terms())
    if (w.weight(t.monomial) == best) terms.push_back(t);
  return Polynomial::from_terms(f.variables(), std::move(terms));
}

Polynomial linear_part_at_vertex(const Polynomial& G) {
  if (!same_variables(G.variables(), VariableSet::xyz())) throw VariableMismatch("expected a form in x, y, z");
  auto n = homogeneity(G);
  if (!n) throw InvalidArgument("form is not homogeneous");
  if (G.coefficient(Monomial{0, 0, *n}) != 0) throw InvalidArgument("form does not vanish at [0:0:1]");
  std::vector<Term> terms;
  for (const auto& t : G.terms())
    if (t.monomial[2] == *n - 1) terms.push_back({t.monomial.with_exponent(2, 0), t.coefficient});
  return Polynomial::from_terms(G.variables(), std::move(terms));
}

Polynomial tangent_cone_form(const Polynomial& G) {
  if (G.is_zero()) throw ZeroPolynomialError("tangent cone of the zero polynomial");
  const int c = G.degree_in(2);
  std::vector<Term> terms;
  for (const auto& t : G.terms())
    if (t.monomial[2] == c) terms.push_back({t.monomial.with_exponent(2, 0), t.coefficient});
  return Polynomial::from_terms(G.variables(), std::move(terms));
}

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images) {
  if (images.size() != f.variables()->size()) throw InvalidArgument("substitute needs one image per variable");
  if (images.empty()) return f;
  const auto& target = images.front().variables();
  for (const auto& img : images) require_same(img.variables(), target);
  // Cache powers of each image.
  std::vector<std::vector<Polynomial>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    powers[i].push_back(Polynomial::constant(1, target));
    const int top = f.degree_in(i);
    for (int k = 1; k <= top; ++k) powers[i].push_back(powers[i].back() * images[i]);
  }
  Polynomial result(target);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(t.coefficient, target);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.monomial[i] > 0) term = term * powers[i][t.monomial[i]];
    result += term;
  }
  return result;
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  require_same(f.variables(), g.variables());
  if (g.is_zero()) throw ZeroPolynomialError("division by zero polynomial");
  const Term& lead = g.terms().front();
  Polynomial remainder = f;
  std::vector<Term> out;
  while (!remainder.is_zero()) {
    const Term& top = remainder.terms().front();
    if (!divides(lead.monomial, top.monomial)) throw InvalidArgument("divisor does not divide dividend");
    Term q{quotient(top.monomial, lead.monomial), top.coefficient / lead.coefficient};
    remainder -= g.multiply_monomial(q.monomial, q.coefficient);
    out.push_back(std::move(q));
  }
  return Polynomial::from_terms(f.variables(), std::move(out));
}

Polynomial make_monic(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomialError("cannot normalize the zero polynomial");
  return f * Rational(1 / f.terms().front().coefficient);
}

Polynomial primitive_part(const Polynomial& f) {
  if (f.is_zero()) return f;
  Integer den_lcm = 1;
  for (const auto& t : f.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coefficient.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& t : f.terms()) {
    Integer v = t.coefficient.get_num() * (den_lcm / t.coefficient.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (f.terms().front().coefficient < 0) scale = -scale;
  return f * scale;
}

bool proportional(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return false;
  return make_monic(a) == make_monic(b);
}

}  // namespace splinedim
