#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "splinedim/monomial_order.hpp"
#include "splinedim/polynomial.hpp"

namespace splinedim {

/// Generator list over one variable set. Zero generators and exact
/// duplicates are dropped on construction.
class Ideal {
 public:
  explicit Ideal(VarsPtr vars = VariableSet::xyz()) : vars_(std::move(vars)) {}
  Ideal(VarsPtr vars, std::vector<Polynomial> generators);
  /// Variable set taken from the first generator (x, y, z when empty).
  explicit Ideal(std::vector<Polynomial> generators);

  const VarsPtr& variables() const { return vars_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_homogeneous() const;

  std::string to_string() const;

 private:
  VarsPtr vars_;
  std::vector<Polynomial> gens_;
};

struct BuchbergerOptions {
  /// For homogeneous input: stop once every remaining pair lives above this
  /// degree. The basis is then only valid in degrees <= the limit.
  std::optional<int> degree_limit;
};

/// Reduced Groebner basis: monic elements sorted by increasing leading monomial.
class GroebnerBasis {
 public:
  struct Impl;

  const std::vector<Polynomial>& basis() const;
  const std::vector<Monomial>& leading_monomials() const;
  const MonomialOrder& order() const;
  const VarsPtr& variables() const;
  /// Set when the computation was truncated by degree.
  std::optional<int> degree_limit() const;
  bool is_unit() const;
  bool is_zero() const { return basis().empty(); }
  Ideal ideal() const { return Ideal(variables(), basis()); }

  explicit GroebnerBasis(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  const Impl& impl() const { return *impl_; }

 private:
  std::shared_ptr<const Impl> impl_;
};

/// Buchberger with Gebauer-Moeller pair pruning and the sugar selection
/// strategy. Coefficients stay integral during the run (content removed as
/// it grows); the result is the reduced basis over Q.
GroebnerBasis buchberger(const Ideal& I, const MonomialOrder& order = MonomialOrder::grevlex(),
                         const BuchbergerOptions& options = {});

/// Fully reduced remainder of f modulo G; zero iff f lies in the ideal
/// (for truncated bases: iff the homogeneous f lies in it and deg f <= limit).
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);
bool contains(const GroebnerBasis& G, const Polynomial& f);
bool contains(const Ideal& I, const Polynomial& f);

/// Ideal equality through reduced grevlex bases.
bool same_ideal(const Ideal& I, const Ideal& J);
bool is_subset(const Ideal& I, const Ideal& J);

/// Elements of I free of the variables in `block`, expressed over `target`
/// (a prefix of I's variable set containing every surviving variable).
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& block, const VarsPtr& target);

Ideal intersect(const Ideal& I, const Ideal& J);
Ideal colon_ideal(const Ideal& I, const Polynomial& f);
/// (I : J) as the intersection of (I : g) over the generators g of J.
Ideal colon_ideal_ideal(const Ideal& I, const Ideal& J);
/// (I : f^inf). Homogeneous I saturated by a variable takes the grevlex-last
/// shortcut; everything else eliminates t from I + <1 - t f>.
Ideal saturate(const Ideal& I, const Polynomial& f);
/// The same saturation, always through the auxiliary variable. Kept for cross-checks.
Ideal saturate_by_elimination(const Ideal& I, const Polynomial& f);
/// (I : m^inf) for m = <x, y, z>. With `supported_at_vertex` the caller asserts
/// that the scheme of I lives at [0:0:1], so saturating by z alone suffices.
Ideal saturate_irrelevant(const Ideal& I, bool supported_at_vertex = false);
/// <in_w(g) : g in GB_w(I)>.
Ideal initial_ideal(const Ideal& I, const WeightVector& w);

}  // namespace splinedim
