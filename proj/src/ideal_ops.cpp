#include <algorithm>
#include <limits>
#include <sstream>

#include "splinedim/errors.hpp"
#include "splinedim/groebner.hpp"

namespace splinedim {

Ideal::Ideal(VarsPtr vars, std::vector<Polynomial> generators) : vars_(std::move(vars)) {
  for (auto& g : generators) {
    if (!same_variables(g.variables(), vars_)) throw VariableMismatch("ideal generator over a different variable set");
    if (g.is_zero()) continue;
    if (std::find(gens_.begin(), gens_.end(), g) != gens_.end()) continue;
    gens_.push_back(std::move(g));
  }
}

Ideal::Ideal(std::vector<Polynomial> generators)
    : Ideal(generators.empty() ? VariableSet::xyz() : generators.front().variables(), std::move(generators)) {}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return splinedim::is_homogeneous(g); });
}

std::string Ideal::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? ", " : "") << gens_[i];
  os << '>';
  return os.str();
}

bool same_ideal(const Ideal& I, const Ideal& J) {
  if (!same_variables(I.variables(), J.variables())) return false;
  return buchberger(I).basis() == buchberger(J).basis();
}

bool is_subset(const Ideal& I, const Ideal& J) {
  const GroebnerBasis G = buchberger(J);
  return std::all_of(I.generators().begin(), I.generators().end(),
                     [&](const Polynomial& f) { return contains(G, f); });
}

namespace {

Polynomial single_variable(const Polynomial& f, std::size_t* index) {
  if (f.size() != 1 || f.terms().front().monomial.degree() != 1) return Polynomial(f.variables());
  const Monomial& m = f.terms().front().monomial;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (m[i] == 1) *index = i;
  return f;
}

bool is_variable(const Polynomial& f, std::size_t* index) { return !single_variable(f, index).is_zero(); }

bool is_unit_ideal(const Ideal& I) {
  return std::any_of(I.generators().begin(), I.generators().end(),
                     [](const Polynomial& g) { return g.is_constant() && !g.is_zero(); });
}

Ideal unit_ideal(const VarsPtr& vars) { return Ideal(vars, {Polynomial::constant(1, vars)}); }

/// Largest k with v^k dividing every term of g.
int variable_power(const Polynomial& g, std::size_t v) {
  int k = std::numeric_limits<int>::max();
  for (const auto& t : g.terms()) k = std::min(k, t.monomial[v]);
  return k;
}

Polynomial strip_variable(const Polynomial& g, std::size_t v, int k) {
  if (k == 0) return g;
  std::vector<Term> terms;
  terms.reserve(g.size());
  for (const auto& t : g.terms()) terms.push_back({t.monomial.with_exponent(v, t.monomial[v] - k), t.coefficient});
  return Polynomial::from_terms(g.variables(), std::move(terms));
}

/// For homogeneous I, a grevlex basis with v last gives (I : v^k) by
/// stripping at most k powers of v from each element (k < 0: all of them).
Ideal colon_variable_power(const Ideal& I, std::size_t v, int k) {
  const GroebnerBasis G = buchberger(I, MonomialOrder::grevlex_last(v));
  std::vector<Polynomial> gens;
  for (const auto& g : G.basis()) {
    int p = variable_power(g, v);
    if (k >= 0) p = std::min(p, k);
    gens.push_back(strip_variable(g, v, p));
  }
  return Ideal(I.variables(), std::move(gens));
}

}  // namespace

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& block, const VarsPtr& target) {
  const GroebnerBasis G = buchberger(I, MonomialOrder::elimination(block));
  std::vector<Polynomial> kept;
  for (const auto& g : G.basis()) {
    bool free = true;
    for (auto v : block) free = free && g.degree_in(v) == 0;
    if (free) kept.push_back(g.with_variables(target));
  }
  return Ideal(target, std::move(kept));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  if (!same_variables(I.variables(), J.variables())) throw VariableMismatch("intersect: different variable sets");
  const VarsPtr& base = I.variables();
  if (I.is_zero() || J.is_zero()) return Ideal(base);
  if (is_unit_ideal(I)) return J;
  if (is_unit_ideal(J)) return I;
  const VarsPtr ext = VariableSet::extended(base);
  const std::size_t t_index = base->size();
  const Polynomial t = Polynomial::variable(t_index, ext);
  const Polynomial one_minus_t = Polynomial::constant(1, ext) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) gens.push_back(t * f.with_variables(ext));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * g.with_variables(ext));
  return eliminate(Ideal(ext, std::move(gens)), {t_index}, base);
}

Ideal colon_ideal(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomialError("colon by the zero polynomial");
  if (!same_variables(I.variables(), f.variables())) throw VariableMismatch("colon_ideal: different variable sets");
  if (f.is_constant() || I.is_zero()) return I;
  if (is_unit_ideal(I)) return unit_ideal(I.variables());
  std::size_t v = 0;
  if (I.is_homogeneous() && is_variable(f, &v)) return colon_variable_power(I, v, 1);
  const Ideal meet = intersect(I, Ideal(I.variables(), {f}));
  std::vector<Polynomial> gens;
  for (const auto& g : meet.generators()) gens.push_back(divide_exact(g, f));
  return Ideal(I.variables(), std::move(gens));
}

Ideal colon_ideal_ideal(const Ideal& I, const Ideal& J) {
  if (J.is_zero()) throw InvalidArgument("colon by the zero ideal");
  std::optional<Ideal> acc;
  for (const auto& g : J.generators()) {
    Ideal part = colon_ideal(I, g);
    acc = acc ? intersect(*acc, part) : part;
  }
  return *acc;
}

Ideal saturate_by_elimination(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomialError("saturation by the zero polynomial");
  if (!same_variables(I.variables(), f.variables())) throw VariableMismatch("saturate: different variable sets");
  const VarsPtr& base = I.variables();
  if (f.is_constant() || I.is_zero()) return I;
  const VarsPtr ext = VariableSet::extended(base);
  const std::size_t t_index = base->size();
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.with_variables(ext));
  gens.push_back(Polynomial::constant(1, ext) - Polynomial::variable(t_index, ext) * f.with_variables(ext));
  return eliminate(Ideal(ext, std::move(gens)), {t_index}, base);
}

Ideal saturate(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomialError("saturation by the zero polynomial");
  if (!same_variables(I.variables(), f.variables())) throw VariableMismatch("saturate: different variable sets");
  if (f.is_constant() || I.is_zero()) return I;
  if (is_unit_ideal(I)) return unit_ideal(I.variables());
  std::size_t v = 0;
  if (I.is_homogeneous() && is_variable(f, &v)) return colon_variable_power(I, v, -1);
  return saturate_by_elimination(I, f);
}

Ideal saturate_irrelevant(const Ideal& I, bool supported_at_vertex) {
  const VarsPtr& vars = I.variables();
  if (I.is_zero() || is_unit_ideal(I)) return I;
  if (supported_at_vertex) {
    const std::size_t z = vars->index_of("z");
    if (z == vars->size()) throw VariableMismatch("vertex shortcut needs a variable named z");
    return saturate(I, Polynomial::variable(z, vars));
  }
  std::optional<Ideal> acc;
  for (std::size_t v = 0; v < vars->size(); ++v) {
    Ideal part = saturate(I, Polynomial::variable(v, vars));
    acc = acc ? intersect(*acc, part) : part;
  }
  return Ideal(vars, buchberger(*acc).basis());
}

Ideal initial_ideal(const Ideal& I, const WeightVector& w) {
  if (w.weights.size() != I.variables()->size()) throw InvalidArgument("weight vector length mismatch");
  const GroebnerBasis G = buchberger(I, MonomialOrder::weighted(w));
  std::vector<Polynomial> gens;
  for (const auto& g : G.basis()) gens.push_back(initial_form(g, w));
  return Ideal(I.variables(), std::move(gens));
}

}  // namespace splinedim
