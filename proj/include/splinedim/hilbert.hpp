#pragma once

#include <optional>
#include <vector>

#include "splinedim/groebner.hpp"
#include "splinedim/univariate.hpp"

namespace splinedim {

/// Numerator N(t) of HS(S/M) = N(t) / (1 - t)^nvars for a monomial ideal,
/// by pivot recursion N(M) = N(M + <p>) + t^deg(p) N(M : p).
std::vector<Integer> hilbert_series_numerator(const std::vector<Monomial>& generators, std::size_t nvars);
/// Same for an Ideal; every generator must be a monomial (InvalidArgument otherwise).
std::vector<Integer> hilbert_series_numerator(const Ideal& M);

/// Everything the Hilbert series of S/I determines.
struct HilbertData {
  std::size_t nvars = 0;
  /// N(t), lowest degree first.
  std::vector<Integer> numerator;
  /// Q(t) = N(t) / (1 - t)^(nvars - dimension).
  std::vector<Integer> reduced_numerator;
  /// Krull dimension of S/I; -1 when I is the unit ideal.
  int dimension = 0;
  UnivariatePolynomial polynomial;
  /// Largest d >= 0 with HF(d) != HP(d), or -1.
  int postulation = -1;
  /// Constant value of HP when dimension <= 1; empty when the projective
  /// scheme is positive-dimensional.
  std::optional<Integer> multiplicity;

  Integer function(int d) const;
  Integer polynomial_value(int d) const;
};

HilbertData hilbert_data_from_series(std::vector<Integer> numerator, std::size_t nvars);
/// Uses the lead monomials of G; G must not be degree-truncated.
HilbertData hilbert_data(const GroebnerBasis& G);
/// Homogeneous I only (InvalidArgument otherwise). Bases are cached.
HilbertData hilbert_data(const Ideal& I);

/// Count of standard monomials of degree d, from a basis truncated at d.
Integer hilbert_function(const Ideal& I, int d);
/// HF(S/I, 0..d_max) from one basis truncated at d_max.
std::vector<Integer> hilbert_function_values(const Ideal& I, int d_max);
UnivariatePolynomial hilbert_polynomial(const Ideal& I);
int postulation_number(const Ideal& I);
std::optional<Integer> multiplicity(const Ideal& I);

/// Reduced grevlex basis, memoized by generator list and degree limit.
/// Safe to call from several threads.
GroebnerBasis cached_basis(const Ideal& I, std::optional<int> degree_limit = std::nullopt);

/// Binomial C(n, k) with the truncated convention: 0 when n < k or n < 0.
Integer binomial_truncated(long n, long k);

}  // namespace splinedim
