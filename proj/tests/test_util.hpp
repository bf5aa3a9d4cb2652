#pragma once

#include <random>
#include <string>

#include "splinedim/groebner.hpp"
#include "splinedim/parser.hpp"

namespace splinedim::testing {

inline Polynomial P(const std::string& s) { return parse_polynomial(s); }

inline Ideal ideal_of(std::initializer_list<const char*> gens) {
  std::vector<Polynomial> v;
  for (const char* g : gens) v.push_back(P(g));
  return Ideal(VariableSet::xyz(), std::move(v));
}

/// Random polynomial with small integer coefficients; `homogeneous_degree`
/// >= 0 restricts to one degree.
inline Polynomial random_polynomial(std::mt19937& rng, int max_degree, int max_terms, int homogeneous_degree = -1,
                                    VarsPtr vars = VariableSet::xyz()) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> count(1, max_terms);
  std::vector<Term> terms;
  const int n = count(rng);
  for (int k = 0; k < n; ++k) {
    const int d = homogeneous_degree >= 0 ? homogeneous_degree : std::uniform_int_distribution<int>(0, max_degree)(rng);
    auto mons = monomials_of_degree(vars->size(), d);
    const auto& m = mons[std::uniform_int_distribution<std::size_t>(0, mons.size() - 1)(rng)];
    terms.push_back({m, Rational(coef(rng))});
  }
  return Polynomial::from_terms(vars, std::move(terms));
}

}  // namespace splinedim::testing
