#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splinedim/star_complex.hpp"
#include "splinedim/univariate.hpp"

namespace splinedim {

/// Resolution data of R/<L_1^(r+1), ..., L_t^(r+1)> for t distinct linear
/// forms in two variables:
///   R(-r-1-a)^s1 + R(-r-2-a)^s2 -> R(-r-1)^t -> R,  a = floor((r+1)/(t-1)).
struct PowerResolutionData {
  int t = 0;
  int r = 0;
  int a = 0;
  int s1 = 0;
  int s2 = 0;
  int regularity = 0;
};
PowerResolutionData power_resolution(int t, int r);

/// C(a+r+2, 2) - t*C(a+1, 2).
Integer multiplicity_linear_powers(int t, int r);

/// Free module structure of the spline module for N edges whose forms lie in
/// a pencil of degree-n curves with s distinct members.
struct PencilStructure {
  int N = 0, s = 0, n = 0, r = 0;
  int t = 0, a = 0, s1 = 0, s2 = 0;
  /// Degrees of the free summands, ascending.
  std::vector<int> summand_degrees;
  Integer multiplicity;
  int postulation = 0;
  UnivariatePolynomial hilbert_polynomial;

  /// Exact for every d >= 0 (truncated binomials).
  Integer hilbert_function(int d) const;
};
PencilStructure pencil_structure(int N, int s, int n, int r);

/// Hilbert polynomial of the spline module when tangents at the vertex are
/// distinct and the vertex is the only common zero. Binomials are honest
/// polynomials in d.
struct DistinctTangentHP {
  int t = 0;
  int a = 0;
  Integer multiplicity;
  UnivariatePolynomial polynomial;
};
DistinctTangentHP distinct_tangent_hp(const std::vector<int>& degrees, int r);

/// Smallest d from which the distinct-tangent polynomial is guaranteed to
/// equal the dimension. The three-curve bound needs N = 3 and a form of degree >= 2.
struct ValidityThresholds {
  int general = 0;
  std::optional<int> three_curve;
  /// three_curve when present, else general.
  int best() const { return three_curve.value_or(general); }
};
ValidityThresholds validity_thresholds(const std::vector<int>& degrees, int r);

/// dim(S/<G_1, G_2, G_3>)_d at r = 0 when <G_1, G_2> is n1*n2 reduced points
/// and G_3 meets them only at the vertex.
Integer linked_hilbert_function(int n1, int n2, int n3, int d);

/// dim(K'/K)_d for K = <F_1, F_2> a complete intersection, K' = K : gamma and
/// K'' = K : K', from the linkage duality, alongside the direct value
/// HF(S/K, d) - HF(S/K', d).
struct CayleyBacharach {
  Integer value;
  Integer direct;
  Integer multiplicity;  // of S/K''
  int s = 0;             // deg F_1 + deg F_2 - 3
};
CayleyBacharach cayley_bacharach_dim(const Ideal& K, const Polynomial& gamma, int d);

/// <L_i^(r_i+1)> for the linear parts at the vertex (zero parts skipped).
Ideal linear_power_ideal(const StarComplex& C);

/// Tangent-cone ideal I = <F_i> where z^c F_i is the top z-part of G_i^(r_i+1),
/// with the degrees of its minimal generators and Hilbert-Burch syzygies.
struct TangentConeData {
  Ideal ideal;
  std::vector<Polynomial> forms;
  bool forms_minimal = false;
  std::vector<int> generator_degrees;
  std::vector<int> syzygy_degrees;
  /// max - min of the syzygy degrees; in_w J lies in I when this is <= 2 and
  /// the forms are minimal generators.
  int spread = 0;
  bool containment_guaranteed() const { return forms_minimal && spread <= 2; }
};
TangentConeData tangent_cone_data(const StarComplex& C);

/// Degrees of a minimal generating set of a homogeneous ideal (ascending),
/// and which of the given generators form it.
std::vector<int> minimal_generator_degrees(const Ideal& I, std::vector<bool>* kept = nullptr);

/// Whether a closed form is guaranteed for this complex and smoothness.
struct Applicability {
  enum class Formula { PencilHilbertFunction, DistinctTangentPolynomial, None };
  Formula formula = Formula::None;
  bool guaranteed = false;
  /// The closed form equals the dimension for d >= valid_from.
  std::optional<int> valid_from;
  /// 2t >= r+3: the saturation of J is the linear-power ideal.
  bool low_power = false;
  std::vector<std::string> notes;
};
Applicability applicability(const StarComplex& C, const Configuration& cfg);

/// Closed-form dimension for degree d: the pencil HF, the distinct-tangent HP
/// value, or nothing for Other configurations.
std::optional<Integer> closed_form_dimension(const StarComplex& C, const Configuration& cfg, int d);

}  // namespace splinedim
