#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splinedim/errors.hpp"
#include "splinedim/groebner.hpp"
#include "splinedim/univariate.hpp"

namespace splinedim {

struct Edge {
  Polynomial form;
  int smoothness = 0;
};

struct StarValidation;
StarValidation validate_star(std::vector<Edge> edges);

/// Cell complex with one interior vertex at [0:0:1]. Edges are cyclically
/// ordered; face i lies between edges i and i+1 (mod N), so edge i separates
/// faces i-1 and i.
class StarComplex {
 public:
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  std::vector<int> degrees() const;
  /// The common smoothness, or nothing when edges disagree.
  std::optional<int> uniform_smoothness() const;
  StarComplex with_smoothness(int r) const;
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// J = <G_i^(r_i + 1)>.
  Ideal vertex_ideal() const;

 private:
  friend StarValidation validate_star(std::vector<Edge> edges);
  std::vector<Edge> edges_;
  std::vector<std::string> warnings_;
};

struct StarValidation {
  std::optional<StarComplex> complex;
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
};

class InvalidComplex : public SplineError {
 public:
  explicit InvalidComplex(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// Checks N >= 2, homogeneous forms over x, y, z vanishing at the vertex,
/// non-proportional neighbours and smoothness >= 0.
StarValidation validate_star(std::vector<Edge> edges);
/// validate_star, throwing InvalidComplex on violations.
StarComplex make_star(std::vector<Edge> edges);

enum class ConfigurationKind { Pencil, DistinctTangent, Other };

struct Configuration {
  ConfigurationKind kind = ConfigurationKind::Other;
  std::size_t edges = 0;
  std::vector<int> degrees;
  /// Pencil: number of distinct curves up to scaling, their common degree and
  /// two coprime members spanning the pencil.
  std::size_t distinct_forms = 0;
  int pencil_degree = 0;
  std::vector<Polynomial> span_basis;
  /// Linear part of each edge form at the vertex (zero when singular there).
  std::vector<Polynomial> tangents;
  /// Whether the vertex is the only common zero (over C) of the edge forms.
  bool vertex_only_common_zero = false;
  std::vector<std::string> diagnostics;

  /// t = min(s, r+2) for pencils, min(N, r+2) otherwise.
  int t(int r) const;
  std::string summary() const;
};

/// Pencil when all forms share a degree, span a 2-dimensional space and two
/// spanning members are coprime; DistinctTangent when the linear parts are
/// nonzero and pairwise independent and the vertex is the only common zero.
/// Pencil wins when both apply.
Configuration classify_configuration(const StarComplex& C);

/// True iff [0:0:1] is the only common zero over C of the given forms.
bool only_common_zero_is_vertex(const std::vector<Polynomial>& forms);

struct Spline {
  std::vector<Polynomial> parts;
};

/// Checks that G_i^(r_i+1) divides F_i - F_{i-1} for every edge i. Parts must
/// be homogeneous of one degree (zero parts allowed).
bool is_spline(const StarComplex& C, const std::vector<Polynomial>& parts);

/// sum_i C(d - (r+1) n_i + 2, 2) + HF(S/J, d), truncated binomials. Requires
/// uniform smoothness (MixedSmoothness otherwise: use dim_kernel).
Integer dim_formula(const StarComplex& C, int d);
Integer dim_formula(const StarComplex& C, int r, int d);
/// dim_formula for d = 0..d_max from a single truncated basis.
std::vector<Integer> dim_formula_values(const StarComplex& C, int d_max);

class MixedSmoothness : public SplineError {
 public:
  using SplineError::SplineError;
};

/// Hilbert polynomial and postulation number of the spline module (uniform smoothness).
struct SplineHilbert {
  UnivariatePolynomial polynomial;
  int postulation = -1;
  /// HP(S/J), the constant term carried by the vertex.
  UnivariatePolynomial vertex_polynomial;
  int vertex_postulation = -1;
};
SplineHilbert spline_hilbert(const StarComplex& C);

/// Kernel of the boundary map in degree d by exact rank; handles per-edge smoothness.
Integer dim_kernel(const StarComplex& C, int d);
std::vector<Spline> spline_basis(const StarComplex& C, int d);

/// Degrees of minimal generators of the spline module up to d_max: new
/// generators in degree d = dim C_d - rank(x C_{d-1} + y C_{d-1} + z C_{d-1}).
std::vector<int> generator_degrees(const StarComplex& C, int d_max);

}  // namespace splinedim
