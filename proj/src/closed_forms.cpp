#include "splinedim/closed_forms.hpp"

#include <algorithm>

#include "splinedim/errors.hpp"
#include "splinedim/hilbert.hpp"

namespace splinedim {

namespace {

Integer binom2(long m) { return binomial_truncated(m, 2); }

// C(d + shift, 2) as a polynomial in d.
UnivariatePolynomial binom2_poly(int shift) { return UnivariatePolynomial::binomial(shift, 2); }

int ceil_div(int p, int q) { return (p + q - 1) / q; }

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgument(message);
}

}  // namespace

PowerResolutionData power_resolution(int t, int r) {
  require(t >= 2, "power_resolution needs t >= 2");
  require(r >= 0, "smoothness must be non-negative");
  PowerResolutionData p;
  p.t = t;
  p.r = r;
  p.a = (r + 1) / (t - 1);
  p.s1 = (t - 1) * p.a + t - r - 2;
  p.s2 = r + 1 - (t - 1) * p.a;
  p.regularity = r + ceil_div(r + 1, t - 1) - 1;
  return p;
}

Integer multiplicity_linear_powers(int t, int r) {
  const PowerResolutionData p = power_resolution(t, r);
  return binom2(p.a + r + 2) - t * binom2(p.a + 1);
}

Integer PencilStructure::hilbert_function(int d) const {
  if (d < 0) return 0;
  Integer sum = 0;
  for (int k : summand_degrees) sum += binom2(d - k + 2);
  return sum;
}

PencilStructure pencil_structure(int N, int s, int n, int r) {
  require(s >= 2, "a pencil needs at least two distinct curves");
  require(N >= s, "N must be at least s");
  require(n >= 1, "pencil degree must be positive");
  PencilStructure p;
  p.N = N;
  p.s = s;
  p.n = n;
  p.r = r;
  p.t = std::min(s, r + 2);
  const PowerResolutionData res = power_resolution(p.t, r);
  p.a = res.a;
  p.s1 = res.s1;
  p.s2 = res.s2;
  p.summand_degrees.push_back(0);
  p.summand_degrees.insert(p.summand_degrees.end(), N - p.t, (r + 1) * n);
  p.summand_degrees.insert(p.summand_degrees.end(), p.s1, (r + 1 + p.a) * n);
  p.summand_degrees.insert(p.summand_degrees.end(), p.s2, (r + 2 + p.a) * n);
  p.multiplicity = n * n * multiplicity_linear_powers(p.t, r);
  p.postulation = (r + 1 + ceil_div(r + 1, p.t - 1)) * n - 3;
  p.hilbert_polynomial = static_cast<Rational>(N) * binom2_poly(2 - (r + 1) * n) +
                         UnivariatePolynomial::constant(Rational(p.multiplicity));
  return p;
}

DistinctTangentHP distinct_tangent_hp(const std::vector<int>& degrees, int r) {
  require(degrees.size() >= 2, "distinct_tangent_hp needs at least two edges");
  DistinctTangentHP out;
  out.t = std::min(static_cast<int>(degrees.size()), r + 2);
  out.a = power_resolution(out.t, r).a;
  out.multiplicity = multiplicity_linear_powers(out.t, r);
  out.polynomial = UnivariatePolynomial::constant(Rational(out.multiplicity));
  for (int n : degrees) out.polynomial += binom2_poly(2 - (r + 1) * n);
  return out;
}

ValidityThresholds validity_thresholds(const std::vector<int>& degrees, int r) {
  require(!degrees.empty(), "no degrees given");
  ValidityThresholds v;
  const int n = *std::max_element(degrees.begin(), degrees.end());
  v.general = 3 * n * (r + 1) - 2;
  if (degrees.size() == 3 && n >= 2) {
    const int sum = degrees[0] + degrees[1] + degrees[2];
    v.three_curve = (sum - 1) * (r + 1) - 2;
  }
  return v;
}

Integer linked_hilbert_function(int n1, int n2, int n3, int d) {
  require(n1 >= 1 && n2 >= 1 && n3 >= 1, "degrees must be positive");
  if (d < 0) return 0;
  if (d >= n1 + n2 + n3 - 2) return 1;
  // Complete intersection of degrees n1, n2 (Koszul alternating sum).
  auto ci = [&](int e) -> Integer {
    if (e < 0) return 0;
    return binom2(e + 2) - binom2(e - n1 + 2) - binom2(e - n2 + 2) + binom2(e - n1 - n2 + 2);
  };
  return ci(d) - ci(d - n3);
}

CayleyBacharach cayley_bacharach_dim(const Ideal& K, const Polynomial& gamma, int d) {
  require(K.generators().size() == 2, "K must be generated by two forms");
  require(K.is_homogeneous() && is_homogeneous(gamma), "K and gamma must be homogeneous");
  require(!contains(K, gamma), "gamma lies in K; the linkage degenerates");
  const Ideal K1 = colon_ideal(K, gamma);
  const Ideal K2 = colon_ideal_ideal(K, K1);
  CayleyBacharach out;
  out.s = K.generators()[0].total_degree() + K.generators()[1].total_degree() - 3;
  const auto mult = multiplicity(K2);
  require(mult.has_value(), "K is not a complete intersection of codimension two");
  out.multiplicity = *mult;
  out.value = out.multiplicity - (d > out.s ? Integer(0) : hilbert_function(K2, out.s - d));
  out.direct = hilbert_function(K, d) - hilbert_function(K1, d);
  return out;
}

Ideal linear_power_ideal(const StarComplex& C) {
  std::vector<Polynomial> gens;
  for (const auto& e : C.edges()) {
    const Polynomial L = linear_part_at_vertex(e.form);
    if (!L.is_zero()) gens.push_back(pow(L, e.smoothness + 1));
  }
  return Ideal(VariableSet::xyz(), std::move(gens));
}

std::vector<int> minimal_generator_degrees(const Ideal& I, std::vector<bool>* kept) {
  const auto& gens = I.generators();
  std::vector<std::size_t> order(gens.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return gens[a].total_degree() < gens[b].total_degree(); });
  // Graded Nakayama: keeping each generator not already in the ideal of the
  // kept ones, in increasing degree, yields a minimal generating set.
  std::vector<bool> keep(gens.size(), false);
  std::vector<Polynomial> chosen;
  std::vector<int> degrees;
  for (std::size_t i : order) {
    if (!chosen.empty() && contains(Ideal(I.variables(), chosen), gens[i])) continue;
    keep[i] = true;
    chosen.push_back(gens[i]);
    degrees.push_back(gens[i].total_degree());
  }
  if (kept) *kept = std::move(keep);
  return degrees;
}

TangentConeData tangent_cone_data(const StarComplex& C) {
  TangentConeData out;
  for (const auto& e : C.edges()) out.forms.push_back(pow(tangent_cone_form(e.form), e.smoothness + 1));
  out.ideal = Ideal(VariableSet::xyz(), out.forms);
  std::vector<bool> kept;
  out.generator_degrees = minimal_generator_degrees(out.ideal, &kept);
  out.forms_minimal = out.ideal.generators().size() == out.forms.size() &&
                      std::all_of(kept.begin(), kept.end(), [](bool b) { return b; });
  // N(t) = 1 - sum t^(a1) + sum t^(a2) for the Hilbert-Burch resolution.
  std::vector<Integer> numerator = hilbert_data(out.ideal).numerator;
  for (int a : out.generator_degrees) {
    if (numerator.size() <= static_cast<std::size_t>(a)) numerator.resize(a + 1, Integer(0));
    numerator[a] += 1;
  }
  numerator[0] -= 1;
  for (std::size_t k = 0; k < numerator.size(); ++k) {
    if (numerator[k] < 0) throw SplineError("tangent-cone ideal is not codimension-two Cohen-Macaulay");
    out.syzygy_degrees.insert(out.syzygy_degrees.end(), numerator[k].get_ui(), static_cast<int>(k));
  }
  if (!out.syzygy_degrees.empty())
    out.spread = out.syzygy_degrees.back() - out.syzygy_degrees.front();
  return out;
}

Applicability applicability(const StarComplex& C, const Configuration& cfg) {
  Applicability a;
  const auto r = C.uniform_smoothness();
  if (!r) {
    a.notes.push_back("mixed smoothness: closed forms do not apply; use the kernel oracle");
    return a;
  }
  const int t = cfg.t(*r);
  a.low_power = 2 * t >= *r + 3;
  switch (cfg.kind) {
    case ConfigurationKind::Pencil:
      a.formula = Applicability::Formula::PencilHilbertFunction;
      a.guaranteed = true;
      a.valid_from = 0;
      a.notes.push_back("pencil: the spline module is free and the Hilbert function is exact in every degree");
      break;
    case ConfigurationKind::DistinctTangent: {
      a.formula = Applicability::Formula::DistinctTangentPolynomial;
      a.guaranteed = true;
      const ValidityThresholds v = validity_thresholds(cfg.degrees, *r);
      a.valid_from = v.best();
      a.notes.push_back("distinct tangents: Hilbert polynomial exact for d >= " + std::to_string(*a.valid_from));
      if (a.low_power) a.notes.push_back("2t >= r+3: saturation of J equals the ideal of tangent powers");
      break;
    }
    case ConfigurationKind::Other: {
      a.notes = cfg.diagnostics;
      if (cfg.vertex_only_common_zero) {
        const TangentConeData tc = tangent_cone_data(C);
        a.notes.push_back("tangent-cone syzygy spread " + std::to_string(tc.spread) +
                          (tc.containment_guaranteed() ? " (tangent-cone multiplicity is exact)"
                                                       : " (tangent-cone multiplicity not guaranteed)"));
      }
      break;
    }
  }
  return a;
}

std::optional<Integer> closed_form_dimension(const StarComplex& C, const Configuration& cfg, int d) {
  const auto r = C.uniform_smoothness();
  if (!r) return std::nullopt;
  switch (cfg.kind) {
    case ConfigurationKind::Pencil:
      return pencil_structure(static_cast<int>(cfg.edges), static_cast<int>(cfg.distinct_forms), cfg.pencil_degree,
                              *r)
          .hilbert_function(d);
    case ConfigurationKind::DistinctTangent: {
      const Rational v = distinct_tangent_hp(cfg.degrees, *r).polynomial(Rational(d));
      return v.get_num();
    }
    case ConfigurationKind::Other:
      break;
  }
  return std::nullopt;
}

}  // namespace splinedim
