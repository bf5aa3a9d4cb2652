#include <gtest/gtest.h>

#include <random>

#include "splinedim/closed_forms.hpp"
#include "splinedim/errors.hpp"
#include "splinedim/hilbert.hpp"
#include "test_util.hpp"

using namespace splinedim;
using splinedim::testing::ideal_of;
using splinedim::testing::P;

namespace {

StarComplex star(std::initializer_list<const char*> forms, int r) {
  std::vector<Edge> edges;
  for (const char* f : forms) edges.push_back({P(f), r});
  return make_star(std::move(edges));
}

StarComplex disc(int r) { return star({"x", "x^2 + y^2 - 2*y*z", "x^2 + y^2 - 2*x*z + 2*y*z"}, r); }

StarComplex conic_pencil(int r) {
  const Polynomial G1 = P("x^2 - 6*x*y + y^2 - 2*x*z + 6*y*z");
  const Polynomial G2 = P("x^2 + 6*x*y + y^2 - 2*x*z - 6*y*z");
  return make_star({{G1, r}, {G2, r}, {5 * G1 + 4 * G2, r}});
}

StarComplex quadric_triple(int r) {
  return star({"x*z + x^2 + x*y + y^2", "2*y*z + x^2 + x*y + 2*y^2", "3/2*x*z + 3/2*y*z + x^2 + x*y + 3*y^2"}, r);
}

long c2(long m) { return m < 2 ? 0 : m * (m - 1) / 2; }

}  // namespace

TEST(PowerResolution, Examples) {
  auto check = [](int t, int r, int a, int s1, int s2, int reg) {
    const PowerResolutionData p = power_resolution(t, r);
    EXPECT_EQ(p.a, a);
    EXPECT_EQ(p.s1, s1);
    EXPECT_EQ(p.s2, s2);
    EXPECT_EQ(p.regularity, reg);
  };
  check(3, 1, 1, 2, 0, 1);
  check(2, 0, 1, 1, 0, 0);
  check(3, 4, 2, 1, 1, 6);
  EXPECT_THROW(power_resolution(1, 0), InvalidArgument);
}

TEST(PowerResolution, EulerCharacteristicMatchesGroebner) {
  // Distinct lines x + c*y through the vertex; t <= r + 2 keeps the powers minimal.
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> slope(-6, 6);
  for (int r = 0; r <= 4; ++r) {
    for (int t = 2; t <= std::min(r + 2, 5); ++t) {
      std::vector<int> slopes;
      while (static_cast<int>(slopes.size()) < t) {
        const int c = slope(rng);
        if (std::find(slopes.begin(), slopes.end(), c) == slopes.end()) slopes.push_back(c);
      }
      std::vector<Polynomial> gens;
      for (int c : slopes) gens.push_back(pow(P("x") + Rational(c) * P("y"), r + 1));
      const Ideal I(VariableSet::xyz(), gens);
      const PowerResolutionData p = power_resolution(t, r);
      const auto hf = hilbert_function_values(I, 3 * r + 8);
      for (int d = 0; d <= 3 * r + 8; ++d) {
        const long euler = c2(d + 2) - t * c2(d - r - 1 + 2) + p.s1 * c2(d - r - 1 - p.a + 2) +
                           p.s2 * c2(d - r - 2 - p.a + 2);
        EXPECT_EQ(hf[d], euler) << "t=" << t << " r=" << r << " d=" << d;
      }
      EXPECT_EQ(multiplicity(I), multiplicity_linear_powers(t, r));
    }
  }
}

TEST(MultiplicityLinearPowers, Examples) {
  EXPECT_EQ(multiplicity_linear_powers(2, 0), 1);
  EXPECT_EQ(multiplicity_linear_powers(3, 1), 3);
  EXPECT_EQ(multiplicity(ideal_of({"x^2", "y^2", "x^2 + 2*x*y + y^2"})), Integer(3));
  for (int r = 0; r < 6; ++r) EXPECT_EQ(multiplicity_linear_powers(2, r), (r + 1) * (r + 1));
}

TEST(PencilStructure, ConicPencilValues) {
  const PencilStructure p1 = pencil_structure(3, 3, 2, 1);
  EXPECT_EQ(p1.hilbert_function(6), 30);
  EXPECT_EQ(p1.hilbert_polynomial.to_string(), "3/2*d^2 - 15/2*d + 21");
  EXPECT_EQ(p1.multiplicity, 12);
  EXPECT_EQ(p1.postulation, 3);
  EXPECT_EQ(p1.summand_degrees, (std::vector<int>{0, 6, 6}));
  EXPECT_EQ(pencil_structure(3, 3, 2, 0).multiplicity, 4);
  EXPECT_EQ(pencil_structure(3, 3, 2, 0).summand_degrees, (std::vector<int>{0, 2, 4}));
  EXPECT_EQ(pencil_structure(3, 3, 2, 4).hilbert_polynomial.to_string(), "3/2*d^2 - 51/2*d + 184");
  EXPECT_THROW(pencil_structure(3, 1, 2, 0), InvalidArgument);
}

TEST(PencilStructure, MatchesOracleInEveryDegree) {
  for (int r = 0; r <= 3; ++r) {
    const StarComplex C = conic_pencil(r);
    const Configuration cfg = classify_configuration(C);
    const PencilStructure p = pencil_structure(3, static_cast<int>(cfg.distinct_forms), 2, r);
    const auto oracle = dim_formula_values(C, 14);
    for (int d = 0; d <= 14; ++d) EXPECT_EQ(p.hilbert_function(d), oracle[d]) << "r=" << r << " d=" << d;
    const SplineHilbert h = spline_hilbert(C);
    EXPECT_EQ(h.polynomial, p.hilbert_polynomial);
    EXPECT_EQ(h.postulation, p.postulation);
  }
  // Four lines through the vertex, one repeated: N = 4, s = 3.
  const StarComplex lines = star({"x", "y", "2*x", "x + y"}, 1);
  const PencilStructure p = pencil_structure(4, 3, 1, 1);
  for (int d = 0; d <= 8; ++d) EXPECT_EQ(p.hilbert_function(d), dim_kernel(lines, d));
}

TEST(DistinctTangent, DiscPolynomials) {
  EXPECT_EQ(distinct_tangent_hp({1, 2, 2}, 0).polynomial.to_string(), "3/2*d^2 - 1/2*d + 1");
  EXPECT_EQ(distinct_tangent_hp({1, 2, 2}, 1).polynomial.to_string(), "3/2*d^2 - 11/2*d + 9");
  EXPECT_EQ(distinct_tangent_hp({1, 2, 2}, 3).polynomial.to_string(), "3/2*d^2 - 31/2*d + 57");
  EXPECT_THROW(distinct_tangent_hp({2}, 0), InvalidArgument);
  for (int r = 0; r <= 3; ++r) {
    const StarComplex C = disc(r);
    const DistinctTangentHP hp = distinct_tangent_hp(C.degrees(), r);
    EXPECT_EQ(spline_hilbert(C).polynomial, hp.polynomial);
    // Same Hilbert polynomial for J and the ideal of tangent powers.
    EXPECT_EQ(hilbert_polynomial(C.vertex_ideal()), hilbert_polynomial(linear_power_ideal(C)));
    const int from = validity_thresholds(C.degrees(), r).best();
    const auto oracle = dim_formula_values(C, from + 2);
    for (int d = from; d <= from + 2; ++d) EXPECT_EQ(Rational(oracle[d]), hp.polynomial(Rational(d)));
  }
}

TEST(DistinctTangent, LowPowerSaturation) {
  // 2t >= r + 3 with t = 3 holds for r <= 3.
  for (int r = 0; r <= 3; ++r) {
    const StarComplex C = quadric_triple(r);
    EXPECT_TRUE(same_ideal(saturate_irrelevant(C.vertex_ideal(), true), linear_power_ideal(C))) << "r=" << r;
  }
}

TEST(DistinctTangent, SaturationBeyondLowPowers) {
  // r = 4 breaks 2t >= r + 3. Membership of z^k f in J is checked directly on
  // a basis of J, independently of the saturation code.
  const StarComplex C = quadric_triple(4);
  const Ideal J = C.vertex_ideal();
  const Ideal sat = saturate_irrelevant(J);
  EXPECT_TRUE(same_ideal(sat, saturate_irrelevant(J, true)));
  EXPECT_FALSE(is_subset(sat, linear_power_ideal(C)));
  EXPECT_FALSE(contains(linear_power_ideal(C), pow(C.edges()[2].form, 5)));

  const GroebnerBasis G = cached_basis(J);
  auto first_power = [&](const Polynomial& f) {
    Polynomial g = f;
    for (int k = 0; k <= 40; ++k, g = g * P("z"))
      if (contains(G, g)) return k;
    return -1;
  };
  for (const char* f : {"5*x^4*y + 10*x^3*y^2 + 10*x^2*y^3 + 5*x*y^4 - y^5", "x^5 - 2*y^5", "y^6", "x*y^5",
                        "5*x^2*y^4 + 2*y^5*z", "10*x^3*y^3 - 6*y^5*z"}) {
    EXPECT_GE(first_power(P(f)), 0) << f;
    EXPECT_TRUE(contains(sat, P(f))) << f;
  }
  EXPECT_TRUE(same_ideal(sat, ideal_of({"5*x^4*y + 10*x^3*y^2 + 10*x^2*y^3 + 5*x*y^4 - y^5", "x^5 - 2*y^5", "y^6",
                                        "x*y^5", "5*x^2*y^4 + 2*y^5*z", "10*x^3*y^3 - 6*y^5*z"})));
  // Neither x^5 - y^5 nor 5x^2y^4 + y^5z is in the saturation.
  EXPECT_EQ(first_power(P("x^5 - y^5")), -1);
  EXPECT_EQ(first_power(P("5*x^2*y^4 + y^5*z")), -1);
  EXPECT_EQ(multiplicity(J), Integer(19));
}

TEST(ValidityThresholds, Examples) {
  const auto v0 = validity_thresholds({1, 2, 2}, 0);
  EXPECT_EQ(v0.general, 4);
  EXPECT_EQ(v0.three_curve, 2);
  const auto v5 = validity_thresholds({1, 2, 2}, 5);
  EXPECT_EQ(v5.general, 34);
  EXPECT_EQ(v5.three_curve, 22);
  const auto v = validity_thresholds({2, 2, 2}, 0);
  EXPECT_EQ(v.general, 4);
  EXPECT_EQ(v.three_curve, 3);
  EXPECT_FALSE(validity_thresholds({1, 1, 1}, 2).three_curve.has_value());
  EXPECT_FALSE(validity_thresholds({1, 2, 2, 2}, 0).three_curve.has_value());
}

TEST(TangentCone, SyzygySpreadNegativeControl) {
  const StarComplex C = star({"y^6 + x^5*z", "2*x^2*y^4 + x^4*y*z", "x^6 + y^5*z"}, 0);
  const TangentConeData tc = tangent_cone_data(C);
  EXPECT_TRUE(same_ideal(tc.ideal, ideal_of({"x^5", "x^4*y", "y^5"})));
  EXPECT_EQ(tc.generator_degrees, (std::vector<int>{5, 5, 5}));
  EXPECT_EQ(tc.syzygy_degrees, (std::vector<int>{6, 9}));
  EXPECT_EQ(tc.spread, 3);
  EXPECT_FALSE(tc.containment_guaranteed());
  EXPECT_EQ(multiplicity(C.vertex_ideal()), Integer(20));
  EXPECT_EQ(multiplicity(tc.ideal), Integer(21));
  // The witness of non-containment: 2x^3y^4 - y^7 lies in in_w J but not in I.
  EXPECT_FALSE(contains(tc.ideal, P("2*x^3*y^4 - y^7")));
  const Applicability a = applicability(C, classify_configuration(C));
  EXPECT_FALSE(a.guaranteed);
}

TEST(TangentCone, PowersOfDistinctLinesHaveSmallSpread) {
  for (int r = 0; r <= 4; ++r) {
    const TangentConeData tc = tangent_cone_data(disc(r));
    EXPECT_LE(tc.spread, 1);
  }
}

TEST(MinimalGenerators, DropsRedundant) {
  std::vector<bool> kept;
  EXPECT_EQ(minimal_generator_degrees(ideal_of({"x*y", "x", "y^2", "x^2 + y^2"}), &kept), (std::vector<int>{1, 2}));
  EXPECT_EQ(kept, (std::vector<bool>{false, true, true, false}));
}

TEST(Linkage, BacharachSequence) {
  const std::vector<int> expected{1, 3, 6, 7, 6, 3, 1, 1, 1, 1};
  for (int d = 0; d < 10; ++d) EXPECT_EQ(linked_hilbert_function(3, 3, 3, d), expected[d]);
  for (int d = 0; d < 6; ++d) EXPECT_EQ(linked_hilbert_function(1, 1, 4, d), 1);
  EXPECT_THROW(linked_hilbert_function(0, 1, 1, 0), InvalidArgument);
}

TEST(Linkage, WitnessConfiguration) {
  // Nine points {-1,0,1}^2; the third cubic passes through the origin only.
  const Polynomial G1 = P("x^3 - x*z^2"), G2 = P("y^3 - y*z^2"), G3 = P("x*z^2 + 2*y*z^2 + y^3");
  const auto hf = hilbert_function_values(Ideal(VariableSet::xyz(), {G1, G2, G3}), 10);
  for (int d = 0; d <= 10; ++d) EXPECT_EQ(hf[d], linked_hilbert_function(3, 3, 3, d)) << d;
  const Ideal K(VariableSet::xyz(), {G1, G2});
  const CayleyBacharach cb3 = cayley_bacharach_dim(K, G3, 3);
  EXPECT_EQ(cb3.value, 0);
  EXPECT_EQ(cb3.direct, 0);
  const CayleyBacharach cb4 = cayley_bacharach_dim(K, G3, 4);
  EXPECT_EQ(cb4.value, 1);
  EXPECT_EQ(cb4.direct, 1);
  EXPECT_EQ(cb4.multiplicity, 1);
  for (int d = 0; d <= 8; ++d) {
    const CayleyBacharach cb = cayley_bacharach_dim(K, G3, d);
    EXPECT_EQ(cb.value, cb.direct) << d;
  }
  EXPECT_THROW(cayley_bacharach_dim(K, G1 * P("x"), 3), InvalidArgument);
}

TEST(Applicability, Routing) {
  const Applicability pencil = applicability(conic_pencil(1), classify_configuration(conic_pencil(1)));
  EXPECT_EQ(pencil.formula, Applicability::Formula::PencilHilbertFunction);
  EXPECT_EQ(pencil.valid_from, 0);
  const Applicability dt = applicability(disc(2), classify_configuration(disc(2)));
  EXPECT_EQ(dt.formula, Applicability::Formula::DistinctTangentPolynomial);
  EXPECT_EQ(dt.valid_from, 4 * 3 - 2);
  EXPECT_TRUE(dt.low_power);
  EXPECT_EQ(closed_form_dimension(disc(1), classify_configuration(disc(1)), 6), Integer(30));
  const StarComplex clo = star({"y*z - x^2", "x*z + y^2", "y*z^2 - x^3"}, 0);
  EXPECT_FALSE(closed_form_dimension(clo, classify_configuration(clo), 4).has_value());
}
