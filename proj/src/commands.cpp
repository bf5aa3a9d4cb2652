#include "splinedim/commands.hpp"

#include <cstdlib>
#include <algorithm>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "splinedim/closed_forms.hpp"
#include "splinedim/hilbert.hpp"

namespace splinedim {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr int kDefaultMaxDegree = 40;

ordered_json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

ordered_json rational_json(const Rational& q) {
  if (q.get_den() == 1) return integer_json(q.get_num());
  return q.get_str();
}

ordered_json polynomial_json(const UnivariatePolynomial& p) {
  ordered_json coefficients = ordered_json::array();
  for (const auto& c : p.coefficients()) coefficients.push_back(rational_json(c));
  return {{"text", p.to_string()}, {"coefficients", coefficients}};
}

std::string kind_name(ConfigurationKind kind) {
  switch (kind) {
    case ConfigurationKind::Pencil:
      return "Pencil";
    case ConfigurationKind::DistinctTangent:
      return "DistinctTangent";
    case ConfigurationKind::Other:
      break;
  }
  return "Other";
}

std::string formula_name(Applicability::Formula f) {
  switch (f) {
    case Applicability::Formula::PencilHilbertFunction:
      return "pencil Hilbert function";
    case Applicability::Formula::DistinctTangentPolynomial:
      return "distinct-tangent Hilbert polynomial";
    case Applicability::Formula::None:
      break;
  }
  return "none";
}

std::string join_ints(const std::vector<int>& v, const std::string& sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::string str(const Integer& v) { return v.get_str(); }

/// Runs a command body, mapping library errors onto exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const InvalidComplex& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const MixedSmoothness& e) {
    err << "error: " << e.what() << "\n";
    return kExitInapplicable;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

bool over_cap(int d, std::ostream& err) {
  const int cap = max_degree_cap();
  if (d <= cap) return false;
  err << "error: degree " << d << " exceeds the cap " << cap << " (set SPLINEDIM_MAX_DEGREE to raise it)\n";
  return true;
}

std::string applicability_text(const Applicability& a) {
  std::string s = formula_name(a.formula) + (a.guaranteed ? ", guaranteed" : ", not guaranteed");
  for (const auto& note : a.notes) s += "; " + note;
  return s;
}

ordered_json applicability_json(const Applicability& a) {
  ordered_json j = {{"formula", formula_name(a.formula)}, {"guaranteed", a.guaranteed}, {"low_power", a.low_power}};
  j["valid_from"] = a.valid_from ? ordered_json(*a.valid_from) : ordered_json(nullptr);
  j["notes"] = a.notes;
  return j;
}

ordered_json thresholds_json(const ValidityThresholds& v) {
  ordered_json j = {{"general", v.general}};
  j["three_curve"] = v.three_curve ? ordered_json(*v.three_curve) : ordered_json(nullptr);
  return j;
}

std::string thresholds_text(const ValidityThresholds& v) {
  return "general " + std::to_string(v.general) +
         (v.three_curve ? ", three-curve " + std::to_string(*v.three_curve) : std::string());
}

struct Row {
  int d = 0;
  std::optional<Integer> formula, kernel, closed;
  std::optional<Rational> hp;
  std::optional<bool> agrees;
};

struct TableResult {
  int r = 0;
  std::optional<SplineHilbert> hilbert;
  std::optional<Integer> multiplicity;
  std::optional<ValidityThresholds> thresholds;
  Applicability applicability;
  std::vector<Row> rows;
};

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw InvalidArgument("unknown format \"" + name + "\" (expected text, csv or json)");
}

IntRange parse_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw InvalidArgument("bad range \"" + text + "\" (expected a or a..b)");
    return v;
  };
  const auto dots = text.find("..");
  IntRange r;
  if (dots == std::string::npos) {
    r.lo = r.hi = to_int(text);
  } else {
    r.lo = to_int(text.substr(0, dots));
    r.hi = to_int(text.substr(dots + 2));
  }
  if (r.lo < 0 || r.hi < r.lo) throw InvalidArgument("bad range \"" + text + "\"");
  return r;
}

int max_degree_cap() {
  const char* env = std::getenv("SPLINEDIM_MAX_DEGREE");
  if (!env) return kDefaultMaxDegree;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 0) return kDefaultMaxDegree;
  return static_cast<int>(v);
}

int cmd_classify(const ComplexDocument& doc, OutputFormat format, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const StarComplex C = build_complex(doc);
    const Configuration cfg = classify_configuration(C);
    for (const auto& w : C.warnings()) err << "warning: " << w << "\n";
    if (format == OutputFormat::Json) {
      ordered_json j = {{"name", doc.name}, {"kind", kind_name(cfg.kind)}, {"summary", cfg.summary()}};
      j["edges"] = ordered_json::array();
      for (std::size_t i = 0; i < C.size(); ++i)
        j["edges"].push_back({{"form", C.edges()[i].form.to_string()},
                              {"degree", cfg.degrees[i]},
                              {"smoothness", C.edges()[i].smoothness},
                              {"tangent", cfg.tangents[i].to_string()}});
      if (cfg.kind == ConfigurationKind::Pencil) {
        j["distinct_forms"] = cfg.distinct_forms;
        j["pencil_degree"] = cfg.pencil_degree;
        j["span_basis"] = {cfg.span_basis[0].to_string(), cfg.span_basis[1].to_string()};
      }
      j["vertex_only_common_zero"] = cfg.vertex_only_common_zero;
      j["diagnostics"] = cfg.diagnostics;
      j["warnings"] = C.warnings();
      out << j.dump(2) << "\n";
      return kExitOk;
    }
    if (format == OutputFormat::Csv) {
      out << "edge,form,degree,smoothness,tangent\n";
      for (std::size_t i = 0; i < C.size(); ++i)
        out << i + 1 << ",\"" << C.edges()[i].form << "\"," << cfg.degrees[i] << "," << C.edges()[i].smoothness
            << ",\"" << cfg.tangents[i] << "\"\n";
      return kExitOk;
    }
    out << cfg.summary() << "\n";
    for (std::size_t i = 0; i < C.size(); ++i)
      out << "  edge " << i + 1 << ": " << C.edges()[i].form << "  (degree " << cfg.degrees[i] << ", tangent "
          << cfg.tangents[i] << ")\n";
    if (cfg.kind == ConfigurationKind::Pencil)
      out << "  pencil spanned by " << cfg.span_basis[0] << " and " << cfg.span_basis[1] << "\n";
    out << "  vertex is the only common zero: " << (cfg.vertex_only_common_zero ? "yes" : "no") << "\n";
    return kExitOk;
  });
}

int cmd_table(const ComplexDocument& doc, const TableOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    if (over_cap(options.d.hi, err)) return kExitInapplicable;
    const bool any = options.kernel || options.formula || options.closed_form;
    const bool use_formula = options.formula || !any;

    std::vector<std::optional<int>> smoothness;
    if (options.r)
      for (int r = options.r->lo; r <= options.r->hi; ++r) smoothness.push_back(r);
    else
      smoothness.push_back(std::nullopt);

    const StarComplex base = build_complex(doc);
    for (const auto& w : base.warnings()) err << "warning: " << w << "\n";
    const Configuration cfg = classify_configuration(base);

    std::vector<TableResult> results;
    bool mismatch = false;
    for (const auto& r_opt : smoothness) {
      const StarComplex C = build_complex(doc, r_opt);
      const auto r = C.uniform_smoothness();
      if (!r && (use_formula || options.closed_form)) {
        err << "error: mixed per-edge smoothness; only the kernel oracle (--oracle) applies\n";
        return kExitInapplicable;
      }
      TableResult res;
      res.r = r.value_or(-1);
      res.applicability = applicability(C, cfg);
      if (options.closed_form && !res.applicability.guaranteed && !options.force) {
        err << "error: closed form inapplicable for " << cfg.summary() << " (use --force to evaluate anyway)\n";
        return kExitInapplicable;
      }
      std::optional<UnivariatePolynomial> forced;
      if (options.closed_form && res.applicability.formula == Applicability::Formula::None)
        forced = distinct_tangent_hp(cfg.degrees, *r).polynomial;
      if (r) {
        res.hilbert = spline_hilbert(C);
        res.multiplicity = multiplicity(C.vertex_ideal());
        res.thresholds = validity_thresholds(cfg.degrees, *r);
      }
      std::vector<Integer> formula;
      if (use_formula) formula = dim_formula_values(C, options.d.hi);
      for (int d = options.d.lo; d <= options.d.hi; ++d) {
        Row row;
        row.d = d;
        if (use_formula) row.formula = formula[d];
        if (options.kernel) row.kernel = dim_kernel(C, d);
        if (options.closed_form) {
          if (forced)
            row.closed = (*forced)(Rational(d)).get_num();
          else
            row.closed = closed_form_dimension(C, cfg, d);
        }
        if (res.hilbert) row.hp = res.hilbert->polynomial(Rational(d));
        std::vector<Integer> compared;
        if (row.formula) compared.push_back(*row.formula);
        if (row.kernel) compared.push_back(*row.kernel);
        if (row.closed && !forced && res.applicability.valid_from && d >= *res.applicability.valid_from)
          compared.push_back(*row.closed);
        if (compared.size() >= 2) {
          row.agrees = std::all_of(compared.begin(), compared.end(), [&](const Integer& v) { return v == compared[0]; });
          mismatch = mismatch || !*row.agrees;
        }
        res.rows.push_back(std::move(row));
      }
      results.push_back(std::move(res));
    }

    auto cell = [](const auto& v) -> std::string {
      if (!v) return "";
      std::ostringstream os;
      os << *v;
      return os.str();
    };
    auto agrees_cell = [](const std::optional<bool>& a) -> std::string {
      if (!a) return "";
      return *a ? "yes" : "NO";
    };

    if (options.format == OutputFormat::Json) {
      ordered_json j = {{"name", doc.name}, {"classification", {{"kind", kind_name(cfg.kind)}, {"summary", cfg.summary()}}}};
      j["tables"] = ordered_json::array();
      for (const auto& res : results) {
        ordered_json t;
        t["r"] = res.r >= 0 ? ordered_json(res.r) : ordered_json(nullptr);
        if (res.hilbert) {
          t["hilbert_polynomial"] = polynomial_json(res.hilbert->polynomial);
          t["postulation"] = res.hilbert->postulation;
        }
        if (res.multiplicity) t["multiplicity"] = integer_json(*res.multiplicity);
        if (res.thresholds) t["thresholds"] = thresholds_json(*res.thresholds);
        t["applicability"] = applicability_json(res.applicability);
        t["rows"] = ordered_json::array();
        for (const auto& row : res.rows) {
          ordered_json jr = {{"d", row.d}};
          if (row.formula) jr["dim_formula"] = integer_json(*row.formula);
          if (row.kernel) jr["dim_kernel"] = integer_json(*row.kernel);
          if (options.closed_form) jr["closed_form"] = row.closed ? integer_json(*row.closed) : ordered_json(nullptr);
          if (row.hp) jr["hp_value"] = rational_json(*row.hp);
          if (row.agrees) jr["agrees"] = *row.agrees;
          t["rows"].push_back(std::move(jr));
        }
        j["tables"].push_back(std::move(t));
      }
      out << j.dump(2) << "\n";
    } else if (options.format == OutputFormat::Csv) {
      out << "r,d,dim_formula,dim_kernel,closed_form,hp_value,agrees\n";
      for (const auto& res : results)
        for (const auto& row : res.rows)
          out << (res.r >= 0 ? std::to_string(res.r) : "") << "," << row.d << "," << cell(row.formula) << ","
              << cell(row.kernel) << "," << cell(row.closed) << "," << cell(row.hp) << ","
              << (row.agrees ? (*row.agrees ? "true" : "false") : "") << "\n";
    } else {
      out << (doc.name.empty() ? std::string() : doc.name + ": ") << cfg.summary() << "\n";
      for (const auto& res : results) {
        out << "\nr = " << (res.r >= 0 ? std::to_string(res.r) : "mixed") << "\n";
        std::vector<std::string> header{"d"};
        if (use_formula) header.push_back("formula");
        if (options.kernel) header.push_back("kernel");
        if (options.closed_form) header.push_back("closed");
        if (res.hilbert) header.push_back("HP");
        header.push_back("agrees");
        for (const auto& h : header) out << std::setw(9) << h;
        out << "\n";
        for (const auto& row : res.rows) {
          out << std::setw(9) << row.d;
          if (use_formula) out << std::setw(9) << cell(row.formula);
          if (options.kernel) out << std::setw(9) << cell(row.kernel);
          if (options.closed_form) out << std::setw(9) << (row.closed ? cell(row.closed) : "-");
          if (res.hilbert) out << std::setw(9) << cell(row.hp);
          out << std::setw(9) << agrees_cell(row.agrees) << "\n";
        }
        if (res.hilbert) {
          out << "Hilbert polynomial: " << res.hilbert->polynomial.to_string() << "\n";
          out << "postulation number: " << res.hilbert->postulation << "\n";
        }
        if (res.multiplicity) out << "multiplicity of S/J: " << str(*res.multiplicity) << "\n";
        if (res.thresholds) out << "validity thresholds: " << thresholds_text(*res.thresholds) << "\n";
        out << "closed form: " << applicability_text(res.applicability) << "\n";
      }
    }
    if (mismatch) err << "error: methods disagree (rows marked NO)\n";
    return mismatch ? kExitMismatch : kExitOk;
  });
}

int cmd_verify(const ComplexDocument& doc, const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    if (options.r_max < 0 || options.d_max < 0) throw InvalidArgument("r-max and d-max must be non-negative");
    const int cap = max_degree_cap();
    const int d_max = std::min(options.d_max, cap);
    const StarComplex base = build_complex(doc);
    const Configuration cfg = classify_configuration(base);
    out << (doc.name.empty() ? std::string() : doc.name + ": ") << cfg.summary() << "\n";

    long agreements = 0, closed_agreements = 0;
    std::optional<std::string> counterexample;
    std::vector<std::string> notes;
    for (int r = 0; r <= options.r_max; ++r) {
      const StarComplex C = build_complex(doc, r);
      const auto formula = dim_formula_values(C, d_max);
      const Applicability app = applicability(C, cfg);
      for (int d = 0; d <= d_max; ++d) {
        const Integer kernel = dim_kernel(C, d);
        if (kernel == formula[d]) {
          ++agreements;
        } else if (!counterexample) {
          counterexample = "r=" + std::to_string(r) + " d=" + std::to_string(d) + ": formula " + str(formula[d]) +
                           ", kernel " + str(kernel);
        }
        if (app.guaranteed && app.valid_from && d >= *app.valid_from) {
          const auto closed = closed_form_dimension(C, cfg, d);
          if (closed && *closed == formula[d]) {
            ++closed_agreements;
          } else if (!counterexample) {
            counterexample = "r=" + std::to_string(r) + " d=" + std::to_string(d) + ": closed form " +
                             (closed ? str(*closed) : std::string("-")) + ", formula " + str(formula[d]);
          }
        }
      }
      if (cfg.kind == ConfigurationKind::DistinctTangent) {
        const bool same = hilbert_polynomial(C.vertex_ideal()) == hilbert_polynomial(linear_power_ideal(C));
        if (!same && !counterexample)
          counterexample = "r=" + std::to_string(r) + ": HP(S/J) differs from HP of the tangent powers";
      }
      if (cfg.kind == ConfigurationKind::Other && cfg.vertex_only_common_zero) {
        const TangentConeData tc = tangent_cone_data(C);
        const auto mj = multiplicity(C.vertex_ideal());
        const auto mi = multiplicity(tc.ideal);
        if (mj && mi && *mj != *mi) {
          const std::string detail = "r=" + std::to_string(r) + ": multiplicity of S/J is " + str(*mj) +
                                     ", tangent-cone ideal gives " + str(*mi) + " (syzygy degrees " +
                                     join_ints(tc.syzygy_degrees) + ", spread " + std::to_string(tc.spread) + ")";
          if (tc.containment_guaranteed()) {
            if (!counterexample) counterexample = detail;
          } else {
            notes.push_back("expected divergence (off-hypothesis, spread > 2 or non-minimal forms): " + detail);
          }
        } else if (mj && mi) {
          notes.push_back("r=" + std::to_string(r) + ": tangent-cone multiplicity " + str(*mi) + " matches S/J");
        }
      }
    }
    for (const auto& n : notes) out << n << "\n";
    if (counterexample) {
      out << "FAIL, first counterexample " << *counterexample << "\n";
      return kExitMismatch;
    }
    out << "PASS, " << agreements << " agreements";
    if (closed_agreements) out << " (" << closed_agreements << " closed-form checks)";
    out << "\n";
    if (d_max < options.d_max) {
      out << "not verified beyond d = " << d_max << " (degree cap)\n";
      return kExitInapplicable;
    }
    return kExitOk;
  });
}

int cmd_basis(const ComplexDocument& doc, const BasisOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    if (options.d < 0) throw InvalidArgument("degree must be non-negative");
    if (over_cap(options.d, err)) return kExitInapplicable;
    const StarComplex C = build_complex(doc, options.r);
    const auto basis = spline_basis(C, options.d);
    if (options.format == OutputFormat::Json) {
      ordered_json j = ordered_json::array();
      for (const auto& s : basis) {
        ordered_json parts = ordered_json::array();
        for (const auto& p : s.parts) parts.push_back(p.to_string());
        j.push_back(std::move(parts));
      }
      out << j.dump(2) << "\n";
    } else if (options.format == OutputFormat::Csv) {
      out << "spline,face,part\n";
      for (std::size_t k = 0; k < basis.size(); ++k)
        for (std::size_t f = 0; f < basis[k].parts.size(); ++f)
          out << k + 1 << "," << f + 1 << ",\"" << basis[k].parts[f] << "\"\n";
    } else {
      for (const auto& s : basis) {
        out << "[";
        for (std::size_t f = 0; f < s.parts.size(); ++f) out << (f ? ", " : "") << s.parts[f];
        out << "]\n";
      }
    }
    return kExitOk;
  });
}

int cmd_hilbert(const ComplexDocument& doc, const HilbertOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const StarComplex C = build_complex(doc, options.r);
    const HilbertData h = hilbert_data(C.vertex_ideal());
    const IntRange range = options.d.value_or(IntRange{0, std::max(h.postulation, 0) + 3});
    if (over_cap(range.hi, err)) return kExitInapplicable;
    std::optional<SplineHilbert> module;
    if (!options.ideal_only) module = spline_hilbert(C);
    if (options.format == OutputFormat::Json) {
      ordered_json j = {{"name", doc.name}};
      ordered_json ideal = {{"hilbert_function", ordered_json::array()}};
      for (int d = range.lo; d <= range.hi; ++d) ideal["hilbert_function"].push_back(integer_json(h.function(d)));
      ideal["d_min"] = range.lo;
      ideal["hilbert_polynomial"] = polynomial_json(h.polynomial);
      ideal["postulation"] = h.postulation;
      ideal["dimension"] = h.dimension;
      ideal["multiplicity"] = h.multiplicity ? integer_json(*h.multiplicity) : ordered_json(nullptr);
      j["vertex_ideal"] = ideal;
      if (module)
        j["spline_module"] = {{"hilbert_polynomial", polynomial_json(module->polynomial)},
                              {"postulation", module->postulation}};
      out << j.dump(2) << "\n";
      return kExitOk;
    }
    if (options.format == OutputFormat::Csv) {
      out << "d,hf_vertex_ideal,hp_vertex_ideal\n";
      for (int d = range.lo; d <= range.hi; ++d)
        out << d << "," << str(h.function(d)) << "," << h.polynomial(Rational(d)) << "\n";
      return kExitOk;
    }
    out << "S/J: HF";
    for (int d = range.lo; d <= range.hi; ++d) out << " " << str(h.function(d));
    out << "\n";
    out << "S/J: Hilbert polynomial " << h.polynomial.to_string() << ", postulation " << h.postulation
        << ", multiplicity " << (h.multiplicity ? str(*h.multiplicity) : std::string("-")) << "\n";
    if (module)
      out << "spline module: Hilbert polynomial " << module->polynomial.to_string() << ", postulation "
          << module->postulation << "\n";
    return kExitOk;
  });
}

}  // namespace splinedim
