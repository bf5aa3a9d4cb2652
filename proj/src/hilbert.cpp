#include "splinedim/hilbert.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <string>

#include "splinedim/errors.hpp"

namespace splinedim {

namespace {

using Series = std::vector<Integer>;

void trim(Series& s) {
  while (s.size() > 1 && s.back() == 0) s.pop_back();
}

Series multiply(const Series& a, const Series& b) {
  Series out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

Series add_shifted(Series a, const Series& b, int shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, Integer(0));
  for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] += b[j];
  trim(a);
  return a;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return grevlex_compare(a, b) > 0;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

Series numerator_rec(std::vector<Monomial> gens, std::size_t nvars) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {0};
  // Count occurrences; pairwise coprime generators give a product.
  std::vector<int> count(nvars, 0);
  for (const auto& g : gens)
    for (std::size_t v = 0; v < nvars; ++v)
      if (g[v] > 0) ++count[v];
  const auto best = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  if (count[best] <= 1) {
    Series out{1};
    for (const auto& g : gens) {
      Series factor(g.degree() + 1, Integer(0));
      factor[0] = 1;
      factor[g.degree()] = -1;
      out = multiply(out, factor);
    }
    return out;
  }
  int e = std::numeric_limits<int>::max();
  for (const auto& g : gens)
    if (g[best] > 0) e = std::min(e, g[best]);
  const Monomial pivot = Monomial::variable(best, e);
  std::vector<Monomial> plus = gens;
  plus.push_back(pivot);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) colon.push_back(quotient(g, gcd(g, pivot)));
  return add_shifted(numerator_rec(std::move(plus), nvars), numerator_rec(std::move(colon), nvars), e);
}

}  // namespace

Integer binomial_truncated(long n, long k) {
  if (k < 0 || n < k || n < 0) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

std::vector<Integer> hilbert_series_numerator(const std::vector<Monomial>& generators, std::size_t nvars) {
  return numerator_rec(generators, nvars);
}

std::vector<Integer> hilbert_series_numerator(const Ideal& M) {
  std::vector<Monomial> gens;
  for (const auto& g : M.generators()) {
    if (g.size() != 1) throw InvalidArgument("hilbert_series_numerator needs monomial generators, got " + g.to_string());
    gens.push_back(g.terms().front().monomial);
  }
  return hilbert_series_numerator(gens, M.variables()->size());
}

Integer HilbertData::function(int d) const {
  if (d < 0) return 0;
  if (dimension < 0) return 0;
  Integer sum = 0;
  for (std::size_t j = 0; j < reduced_numerator.size() && static_cast<int>(j) <= d; ++j) {
    if (dimension == 0) {
      if (static_cast<int>(j) == d) sum += reduced_numerator[j];
      continue;
    }
    sum += reduced_numerator[j] * binomial_truncated(d - static_cast<long>(j) + dimension - 1, dimension - 1);
  }
  return sum;
}

Integer HilbertData::polynomial_value(int d) const {
  const Rational v = polynomial(Rational(d));
  return v.get_num();
}

HilbertData hilbert_data_from_series(std::vector<Integer> numerator, std::size_t nvars) {
  HilbertData h;
  h.nvars = nvars;
  trim(numerator);
  h.numerator = numerator;
  if (numerator.size() == 1 && numerator[0] == 0) {
    h.dimension = -1;
    h.reduced_numerator = {0};
    h.multiplicity = Integer(0);
    return h;
  }
  // Divide out (1 - t) while N(1) = 0.
  Series q = numerator;
  int divided = 0;
  while (static_cast<std::size_t>(divided) < nvars) {
    Integer at_one = 0;
    for (const auto& c : q) at_one += c;
    if (at_one != 0) break;
    Series next(q.size() - 1, Integer(0));
    Integer running = 0;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      running += q[i];
      next[i] = running;
    }
    q = std::move(next);
    trim(q);
    ++divided;
  }
  h.reduced_numerator = q;
  h.dimension = static_cast<int>(nvars) - divided;
  const int D = h.dimension;
  if (D > 0) {
    for (std::size_t j = 0; j < q.size(); ++j)
      h.polynomial += UnivariatePolynomial::binomial(D - 1 - static_cast<int>(j), D - 1) * Rational(q[j]);
  }
  if (D == 0) {
    h.multiplicity = Integer(0);
  } else if (D == 1) {
    Integer sum = 0;
    for (const auto& c : q) sum += c;
    h.multiplicity = sum;
  }
  h.postulation = -1;
  const int top = static_cast<int>(q.size()) - 1 - D;
  for (int d = top; d >= 0; --d) {
    if (h.function(d) != h.polynomial(Rational(d))) {
      h.postulation = d;
      break;
    }
  }
  return h;
}

HilbertData hilbert_data(const GroebnerBasis& G) {
  if (G.degree_limit()) throw InvalidArgument("Hilbert data needs a complete Groebner basis");
  return hilbert_data_from_series(hilbert_series_numerator(G.leading_monomials(), G.variables()->size()),
                                  G.variables()->size());
}

namespace {

void require_homogeneous(const Ideal& I) {
  if (!I.is_homogeneous()) throw InvalidArgument("Hilbert functions need a homogeneous ideal: " + I.to_string());
}

std::string fingerprint(const Ideal& I, std::optional<int> limit) {
  std::vector<std::string> parts;
  for (const auto& g : I.generators()) parts.push_back(make_monic(g).to_string());
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (const auto& name : I.variables()->names()) key += name + ",";
  key += limit ? std::to_string(*limit) : "full";
  for (const auto& p : parts) key += "|" + p;
  return key;
}

}  // namespace

GroebnerBasis cached_basis(const Ideal& I, std::optional<int> degree_limit) {
  static std::mutex mutex;
  static std::map<std::string, GroebnerBasis> cache;
  const std::string key = fingerprint(I, degree_limit);
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    if (degree_limit) {
      auto full = cache.find(fingerprint(I, std::nullopt));
      if (full != cache.end()) return full->second;
    }
  }
  BuchbergerOptions options;
  options.degree_limit = degree_limit;
  GroebnerBasis G = buchberger(I, MonomialOrder::grevlex(), options);
  std::lock_guard<std::mutex> lock(mutex);
  if (cache.size() > 4096) cache.clear();
  cache.emplace(key, G);
  return G;
}

HilbertData hilbert_data(const Ideal& I) {
  require_homogeneous(I);
  return hilbert_data(cached_basis(I));
}

Integer hilbert_function(const Ideal& I, int d) {
  require_homogeneous(I);
  if (d < 0) return 0;
  const GroebnerBasis G = cached_basis(I, d);
  Integer count = 0;
  for (const auto& m : monomials_of_degree(I.variables()->size(), d)) {
    bool standard = true;
    for (const auto& lm : G.leading_monomials())
      if (divides(lm, m)) {
        standard = false;
        break;
      }
    if (standard) ++count;
  }
  return count;
}

std::vector<Integer> hilbert_function_values(const Ideal& I, int d_max) {
  require_homogeneous(I);
  std::vector<Integer> out;
  if (d_max < 0) return out;
  const GroebnerBasis G = cached_basis(I, d_max);
  std::vector<Monomial> leads;
  for (const auto& m : G.leading_monomials())
    if (m.degree() <= d_max) leads.push_back(m);
  const HilbertData h = hilbert_data_from_series(hilbert_series_numerator(leads, I.variables()->size()),
                                                 I.variables()->size());
  for (int d = 0; d <= d_max; ++d) out.push_back(h.function(d));
  return out;
}

UnivariatePolynomial hilbert_polynomial(const Ideal& I) { return hilbert_data(I).polynomial; }
int postulation_number(const Ideal& I) { return hilbert_data(I).postulation; }
std::optional<Integer> multiplicity(const Ideal& I) { return hilbert_data(I).multiplicity; }

}  // namespace splinedim
