#include "splinedim/star_complex.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "splinedim/exact_linalg.hpp"
#include "splinedim/hilbert.hpp"

namespace splinedim {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

int require_uniform(const StarComplex& C) {
  auto r = C.uniform_smoothness();
  if (!r) throw MixedSmoothness("the dimension formula needs uniform smoothness; use the kernel oracle");
  return *r;
}

}  // namespace

InvalidComplex::InvalidComplex(std::vector<std::string> violations)
    : SplineError("invalid complex: " + join(violations, "; ")), violations_(std::move(violations)) {}

std::vector<int> StarComplex::degrees() const {
  std::vector<int> out;
  for (const auto& e : edges_) out.push_back(e.form.total_degree());
  return out;
}

std::optional<int> StarComplex::uniform_smoothness() const {
  for (const auto& e : edges_)
    if (e.smoothness != edges_.front().smoothness) return std::nullopt;
  return edges_.front().smoothness;
}

StarComplex StarComplex::with_smoothness(int r) const {
  if (r < 0) throw InvalidArgument("smoothness must be non-negative");
  StarComplex C = *this;
  for (auto& e : C.edges_) e.smoothness = r;
  return C;
}

Ideal StarComplex::vertex_ideal() const {
  std::vector<Polynomial> gens;
  for (const auto& e : edges_) gens.push_back(pow(e.form, e.smoothness + 1));
  return Ideal(VariableSet::xyz(), std::move(gens));
}

StarValidation validate_star(std::vector<Edge> edges) {
  StarValidation v;
  if (edges.size() < 2) v.violations.push_back("a star needs at least 2 edges, got " + std::to_string(edges.size()));
  bool forms_ok = true;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string name = "edge " + std::to_string(i + 1);
    const Polynomial& G = edges[i].form;
    if (edges[i].smoothness < 0) v.violations.push_back(name + ": negative smoothness");
    if (!same_variables(G.variables(), VariableSet::xyz())) {
      v.violations.push_back(name + ": form must be over x, y, z");
      forms_ok = false;
      continue;
    }
    if (G.is_zero()) {
      v.violations.push_back(name + ": zero form");
      forms_ok = false;
      continue;
    }
    auto n = homogeneity(G);
    if (!n) {
      v.violations.push_back(name + ": form is not homogeneous");
      forms_ok = false;
      continue;
    }
    if (G.coefficient(Monomial{0, 0, *n}) != 0) {
      v.violations.push_back(name + ": " + G.to_string() + " does not vanish at the vertex [0:0:1]");
      forms_ok = false;
    }
    bool z_divides = true;
    for (const auto& t : G.terms()) z_divides = z_divides && t.monomial[2] > 0;
    if (z_divides) v.warnings.push_back(name + ": form is divisible by z (component along the line at infinity)");
  }
  if (forms_ok && edges.size() >= 2) {
    const std::size_t N = edges.size();
    for (std::size_t i = 0; i < N; ++i) {
      const std::size_t j = (i + 1) % N;
      if (N == 2 && i == 1) break;
      if (proportional(edges[i].form, edges[j].form))
        v.violations.push_back("edges " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                               " are proportional");
    }
  }
  if (v.violations.empty()) {
    StarComplex C;
    C.edges_ = std::move(edges);
    C.warnings_ = v.warnings;
    v.complex = std::move(C);
  }
  return v;
}

StarComplex make_star(std::vector<Edge> edges) {
  StarValidation v = validate_star(std::move(edges));
  if (!v.complex) throw InvalidComplex(v.violations);
  return *v.complex;
}

int Configuration::t(int r) const {
  const int base = kind == ConfigurationKind::Pencil ? static_cast<int>(distinct_forms) : static_cast<int>(edges);
  return std::min(base, r + 2);
}

std::string Configuration::summary() const {
  std::ostringstream os;
  switch (kind) {
    case ConfigurationKind::Pencil:
      os << "Pencil N=" << edges << " s=" << distinct_forms << " n=" << pencil_degree;
      break;
    case ConfigurationKind::DistinctTangent: {
      os << "DistinctTangent, degrees ";
      for (std::size_t i = 0; i < degrees.size(); ++i) os << (i ? "," : "") << degrees[i];
      break;
    }
    case ConfigurationKind::Other:
      os << "Other: " << join(diagnostics, "; ");
      break;
  }
  return os.str();
}

bool only_common_zero_is_vertex(const std::vector<Polynomial>& forms) {
  // Points at infinity: <G_i, z> must be primary to <x, y, z>.
  std::vector<Polynomial> gens = forms;
  gens.push_back(Polynomial::variable(2));
  const GroebnerBasis at_infinity = buchberger(Ideal(VariableSet::xyz(), gens));
  bool pure_x = false, pure_y = false;
  for (const auto& m : at_infinity.leading_monomials()) {
    if (m.is_one()) pure_x = pure_y = true;
    if (m[0] > 0 && m[1] == 0 && m[2] == 0) pure_x = true;
    if (m[1] > 0 && m[0] == 0 && m[2] == 0) pure_y = true;
  }
  if (!(pure_x && pure_y)) return false;
  // Affine chart z = 1: no zero with x != 0 and none with y != 0.
  const VarsPtr xyt = std::make_shared<const VariableSet>(std::vector<std::string>{"x", "y", "t"});
  std::vector<Polynomial> affine;
  for (const auto& G : forms) affine.push_back(dehomogenize(G).with_variables(xyt));
  for (std::size_t v : {0u, 1u}) {
    std::vector<Polynomial> sys = affine;
    sys.push_back(Polynomial::constant(1, xyt) - Polynomial::variable(2, xyt) * Polynomial::variable(v, xyt));
    if (!buchberger(Ideal(xyt, sys)).is_unit()) return false;
  }
  return true;
}

Configuration classify_configuration(const StarComplex& C) {
  Configuration cfg;
  cfg.edges = C.size();
  cfg.degrees = C.degrees();
  std::vector<Polynomial> forms;
  for (const auto& e : C.edges()) forms.push_back(e.form);
  for (const auto& G : forms) cfg.tangents.push_back(linear_part_at_vertex(G));
  cfg.vertex_only_common_zero = only_common_zero_is_vertex(forms);

  // Pencil test.
  const int n = cfg.degrees.front();
  const bool equal_degrees = std::all_of(cfg.degrees.begin(), cfg.degrees.end(), [&](int d) { return d == n; });
  if (equal_degrees) {
    const auto mons = monomials_of_degree(3, n);
    std::vector<SparseRow> rows;
    for (const auto& G : forms) {
      RationalRow row;
      for (std::size_t k = 0; k < mons.size(); ++k) {
        const Rational c = G.coefficient(mons[k]);
        if (c != 0) row.emplace_back(k, c);
      }
      rows.push_back(integer_row(row));
    }
    if (rank(rows, mons.size()) == 2) {
      const Polynomial& a = forms.front();
      const auto other = std::find_if(forms.begin(), forms.end(), [&](const Polynomial& g) { return !proportional(a, g); });
      const HilbertData h = hilbert_data(Ideal(VariableSet::xyz(), {a, *other}));
      if (h.dimension == 1) {
        std::vector<Polynomial> classes;
        for (const auto& G : forms)
          if (std::none_of(classes.begin(), classes.end(), [&](const Polynomial& c) { return proportional(c, G); }))
            classes.push_back(G);
        cfg.kind = ConfigurationKind::Pencil;
        cfg.distinct_forms = classes.size();
        cfg.pencil_degree = n;
        cfg.span_basis = {a, *other};
        return cfg;
      }
    }
  }

  bool tangents_ok = true;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (cfg.tangents[i].is_zero()) {
      cfg.diagnostics.push_back("singular at the vertex: edge " + std::to_string(i + 1));
      tangents_ok = false;
    }
  }
  std::vector<bool> grouped(forms.size(), false);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (grouped[i] || cfg.tangents[i].is_zero()) continue;
    std::vector<std::string> members{std::to_string(i + 1)};
    for (std::size_t j = i + 1; j < forms.size(); ++j) {
      if (!cfg.tangents[j].is_zero() && proportional(cfg.tangents[i], cfg.tangents[j])) {
        grouped[j] = true;
        members.push_back(std::to_string(j + 1));
      }
    }
    if (members.size() > 1) {
      cfg.diagnostics.push_back("repeated tangent " + primitive_part(cfg.tangents[i]).to_string() + " (edges " +
                                join(members, ",") + ")");
      tangents_ok = false;
    }
  }
  if (!cfg.vertex_only_common_zero) cfg.diagnostics.push_back("common zeros away from the vertex");
  if (tangents_ok && cfg.vertex_only_common_zero) cfg.kind = ConfigurationKind::DistinctTangent;
  return cfg;
}

bool is_spline(const StarComplex& C, const std::vector<Polynomial>& parts) {
  if (parts.size() != C.size()) throw InvalidArgument("one part per face is required");
  std::optional<int> degree;
  for (const auto& F : parts) {
    if (F.is_zero()) continue;
    auto d = homogeneity(F);
    if (!d) throw InvalidArgument("spline parts must be homogeneous");
    if (degree && *degree != *d) throw InvalidArgument("spline parts must share one degree");
    degree = d;
  }
  const std::size_t N = C.size();
  for (std::size_t i = 0; i < N; ++i) {
    const Edge& e = C.edges()[i];
    const Polynomial diff = parts[i] - parts[(i + N - 1) % N];
    if (diff.is_zero()) continue;
    const GroebnerBasis G = buchberger(Ideal(VariableSet::xyz(), {pow(e.form, e.smoothness + 1)}));
    if (!normal_form(diff, G).is_zero()) return false;
  }
  return true;
}

Integer dim_formula(const StarComplex& C, int d) {
  const int r = require_uniform(C);
  if (d < 0) return 0;
  Integer sum = 0;
  for (int n : C.degrees()) sum += binomial_truncated(d - static_cast<long>(r + 1) * n + 2, 2);
  return sum + hilbert_function(C.vertex_ideal(), d);
}

Integer dim_formula(const StarComplex& C, int r, int d) { return dim_formula(C.with_smoothness(r), d); }

std::vector<Integer> dim_formula_values(const StarComplex& C, int d_max) {
  const int r = require_uniform(C);
  std::vector<Integer> values = hilbert_function_values(C.vertex_ideal(), d_max);
  for (int d = 0; d <= d_max; ++d)
    for (int n : C.degrees()) values[d] += binomial_truncated(d - static_cast<long>(r + 1) * n + 2, 2);
  return values;
}

SplineHilbert spline_hilbert(const StarComplex& C) {
  const int r = require_uniform(C);
  const HilbertData h = hilbert_data(C.vertex_ideal());
  SplineHilbert out;
  out.vertex_polynomial = h.polynomial;
  out.vertex_postulation = h.postulation;
  out.polynomial = h.polynomial;
  int top = h.postulation;
  for (int n : C.degrees()) {
    const int k = (r + 1) * n;
    out.polynomial += UnivariatePolynomial::binomial(2 - k, 2);
    top = std::max(top, k - 3);
  }
  for (int d = top; d >= 0; --d) {
    Integer hf = h.function(d);
    for (int n : C.degrees()) hf += binomial_truncated(d - static_cast<long>(r + 1) * n + 2, 2);
    if (Rational(hf) != out.polynomial(Rational(d))) {
      out.postulation = d;
      break;
    }
  }
  return out;
}

namespace {

using SparseVector = std::map<std::size_t, Rational>;

/// Normal forms of every degree-d monomial modulo the principal ideal <h>,
/// indexed like monomials_of_degree(3, d). Filled in increasing grevlex
/// order, since each reduction step only produces smaller monomials.
std::vector<SparseVector> principal_normal_forms(const Polynomial& h, int d, const std::vector<Monomial>& mons,
                                                 const std::unordered_map<Monomial, std::size_t, MonomialHash>& index) {
  std::vector<SparseVector> nf(mons.size());
  const Term& lead = h.terms().front();
  for (std::size_t k = mons.size(); k > 0; --k) {
    const std::size_t i = k - 1;
    const Monomial& m = mons[i];
    if (d < lead.monomial.degree() || !divides(lead.monomial, m)) {
      nf[i][i] = 1;
      continue;
    }
    const Monomial q = quotient(m, lead.monomial);
    SparseVector acc;
    for (std::size_t t = 1; t < h.terms().size(); ++t) {
      const Rational c = -h.terms()[t].coefficient / lead.coefficient;
      for (const auto& [col, v] : nf[index.at(q * h.terms()[t].monomial)]) {
        Rational& slot = acc[col];
        slot += c * v;
        if (slot == 0) acc.erase(col);
      }
    }
    nf[i] = std::move(acc);
  }
  return nf;
}

struct BoundarySystem {
  std::vector<Monomial> monomials;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  std::vector<SparseRow> rows;
  std::size_t columns = 0;
};

BoundarySystem boundary_system(const StarComplex& C, int d) {
  BoundarySystem sys;
  sys.monomials = monomials_of_degree(3, d);
  for (std::size_t k = 0; k < sys.monomials.size(); ++k) sys.index.emplace(sys.monomials[k], k);
  const std::size_t M = sys.monomials.size();
  const std::size_t N = C.size();
  sys.columns = N * M;
  for (std::size_t i = 0; i < N; ++i) {
    const Edge& e = C.edges()[i];
    const Polynomial h = pow(e.form, e.smoothness + 1);
    const auto nf = principal_normal_forms(h, d, sys.monomials, sys.index);
    const std::size_t here = i * M;
    const std::size_t before = ((i + N - 1) % N) * M;
    // Row per standard monomial s: sum_m NF(m)[s] (F_i[m] - F_{i-1}[m]) = 0.
    std::map<std::size_t, RationalRow> by_standard;
    for (std::size_t m = 0; m < M; ++m)
      for (const auto& [s, c] : nf[m]) {
        by_standard[s].emplace_back(here + m, c);
        by_standard[s].emplace_back(before + m, -c);
      }
    for (auto& [s, row] : by_standard) {
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      RationalRow merged;
      for (auto& entry : row) {
        if (!merged.empty() && merged.back().first == entry.first)
          merged.back().second += entry.second;
        else
          merged.push_back(entry);
      }
      merged.erase(std::remove_if(merged.begin(), merged.end(), [](const auto& p) { return p.second == 0; }),
                   merged.end());
      if (!merged.empty()) sys.rows.push_back(integer_row(merged));
    }
  }
  return sys;
}

std::vector<std::vector<Rational>> kernel_vectors(const StarComplex& C, int d, BoundarySystem* out = nullptr) {
  BoundarySystem sys = boundary_system(C, d);
  auto basis = kernel_basis(sys.rows, sys.columns);
  if (out) *out = std::move(sys);
  return basis;
}

}  // namespace

Integer dim_kernel(const StarComplex& C, int d) {
  if (d < 0) return 0;
  const BoundarySystem sys = boundary_system(C, d);
  return Integer(static_cast<unsigned long>(sys.columns - rank(sys.rows, sys.columns)));
}

std::vector<Spline> spline_basis(const StarComplex& C, int d) {
  if (d < 0) return {};
  BoundarySystem sys;
  const auto vectors = kernel_vectors(C, d, &sys);
  const std::size_t M = sys.monomials.size();
  std::vector<Spline> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) {
    Spline s;
    for (std::size_t f = 0; f < C.size(); ++f) {
      std::vector<Term> terms;
      for (std::size_t k = 0; k < M; ++k)
        if (v[f * M + k] != 0) terms.push_back({sys.monomials[k], v[f * M + k]});
      s.parts.push_back(Polynomial::from_terms(VariableSet::xyz(), std::move(terms)));
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<int> generator_degrees(const StarComplex& C, int d_max) {
  if (d_max < 0) throw InvalidArgument("d_max must be non-negative");
  std::vector<int> degrees;
  std::vector<std::vector<Rational>> previous;
  std::vector<Monomial> previous_monomials;
  const std::size_t N = C.size();
  for (int d = 0; d <= d_max; ++d) {
    BoundarySystem sys;
    auto current = kernel_vectors(C, d, &sys);
    const std::size_t M = sys.monomials.size();
    SparseEchelon span(sys.columns);
    const std::size_t Mp = previous_monomials.size();
    for (const auto& v : previous) {
      for (std::size_t var = 0; var < 3; ++var) {
        RationalRow row;
        for (std::size_t f = 0; f < N; ++f)
          for (std::size_t k = 0; k < Mp; ++k) {
            const Rational& c = v[f * Mp + k];
            if (c == 0) continue;
            row.emplace_back(f * M + sys.index.at(previous_monomials[k] * Monomial::variable(var)), c);
          }
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        span.insert(integer_row(row));
      }
    }
    const std::size_t fresh = current.size() - span.rank();
    for (std::size_t k = 0; k < fresh; ++k) degrees.push_back(d);
    previous = std::move(current);
    previous_monomials = std::move(sys.monomials);
  }
  return degrees;
}

}  // namespace splinedim
