// splinedim: dimensions of spline spaces on a star of curves.
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "splinedim/commands.hpp"

using namespace splinedim;

namespace {

struct Common {
  std::string file;
  std::string format = "text";
};

// Load errors and bad option values are input errors (exit 2).
template <typename Body>
int run(const std::string& file, Body body) {
  try {
    return body(load_document(file));
  } catch (const DocumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact dimensions of spline spaces on a star of curves around one interior vertex"};
  app.require_subcommand(1);
  int max_degree = -1;
  app.add_option("--max-degree", max_degree, "Degree cap (default 40, or SPLINEDIM_MAX_DEGREE)")->check(CLI::NonNegativeNumber);

  Common classify_args;
  auto* classify = app.add_subcommand("classify", "Classify the configuration of edge curves at the vertex");
  classify->add_option("file", classify_args.file, "Complex document (JSON)")->required();
  classify->add_option("--format", classify_args.format, "text, csv or json");

  Common table_args;
  std::string table_r, table_d = "0..13";
  bool oracle = false, formula = false, closed = false, force = false;
  auto* table = app.add_subcommand("table", "Dimension table over a range of smoothness and degree");
  table->add_option("file", table_args.file, "Complex document (JSON)")->required();
  table->add_option("--r", table_r, "Smoothness r or range a..b (default: the document's)");
  table->add_option("--d", table_d, "Degree range a..b")->capture_default_str();
  table->add_flag("--oracle,--kernel", oracle, "Kernel of the boundary matrix");
  table->add_flag("--formula", formula, "Groebner formula from the vertex ideal (default)");
  table->add_flag("--closed-form", closed, "Closed form for the configuration");
  table->add_flag("--force", force, "Evaluate closed forms even when not guaranteed");
  table->add_option("--format", table_args.format, "text, csv or json");

  std::string verify_file;
  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Cross-check formula, kernel and closed forms");
  verify->add_option("file", verify_file, "Complex document (JSON)")->required();
  verify->add_option("--r-max", verify_opts.r_max, "Largest smoothness")->capture_default_str()->check(CLI::NonNegativeNumber);
  verify->add_option("--d-max", verify_opts.d_max, "Largest degree")->capture_default_str()->check(CLI::NonNegativeNumber);

  Common basis_args;
  int basis_r = -1, basis_d = 0;
  auto* basis = app.add_subcommand("basis", "Basis of the splines of degree d");
  basis->add_option("file", basis_args.file, "Complex document (JSON)")->required();
  basis->add_option("--r", basis_r, "Smoothness (default: the document's)")->check(CLI::NonNegativeNumber);
  basis->add_option("--d", basis_d, "Degree")->required()->check(CLI::NonNegativeNumber);
  basis->add_option("--format", basis_args.format, "text, csv or json");

  Common hilbert_args;
  int hilbert_r = -1;
  std::string hilbert_d;
  bool ideal_only = false;
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert data of the vertex ideal J and the spline module");
  hilbert->add_option("file", hilbert_args.file, "Complex document (JSON)")->required();
  hilbert->add_option("--r", hilbert_r, "Smoothness (default: the document's)")->check(CLI::NonNegativeNumber);
  hilbert->add_option("--d", hilbert_d, "Degree range for the Hilbert function");
  hilbert->add_flag("--ideal-only", ideal_only, "Report S/J only");
  hilbert->add_option("--format", hilbert_args.format, "text, csv or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  if (max_degree >= 0) setenv("SPLINEDIM_MAX_DEGREE", std::to_string(max_degree).c_str(), 1);

  if (*classify) {
    return run(classify_args.file, [&](const ComplexDocument& doc) {
      return cmd_classify(doc, parse_format(classify_args.format), std::cout, std::cerr);
    });
  }
  if (*table) {
    return run(table_args.file, [&](const ComplexDocument& doc) {
      TableOptions o;
      if (!table_r.empty()) o.r = parse_range(table_r);
      o.d = parse_range(table_d);
      o.kernel = oracle;
      o.formula = formula;
      o.closed_form = closed;
      o.force = force;
      o.format = parse_format(table_args.format);
      return cmd_table(doc, o, std::cout, std::cerr);
    });
  }
  if (*verify) {
    return run(verify_file, [&](const ComplexDocument& doc) { return cmd_verify(doc, verify_opts, std::cout, std::cerr); });
  }
  if (*basis) {
    return run(basis_args.file, [&](const ComplexDocument& doc) {
      BasisOptions o;
      if (basis_r >= 0) o.r = basis_r;
      o.d = basis_d;
      o.format = parse_format(basis_args.format);
      return cmd_basis(doc, o, std::cout, std::cerr);
    });
  }
  return run(hilbert_args.file, [&](const ComplexDocument& doc) {
    HilbertOptions o;
    if (hilbert_r >= 0) o.r = hilbert_r;
    if (!hilbert_d.empty()) o.d = parse_range(hilbert_d);
    o.ideal_only = ideal_only;
    o.format = parse_format(hilbert_args.format);
    return cmd_hilbert(doc, o, std::cout, std::cerr);
  });
}
