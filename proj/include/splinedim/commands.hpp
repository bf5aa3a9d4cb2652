#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "splinedim/document.hpp"

namespace splinedim {

enum ExitCode : int { kExitOk = 0, kExitInput = 2, kExitInapplicable = 3, kExitMismatch = 4 };

enum class OutputFormat { Text, Csv, Json };
OutputFormat parse_format(const std::string& name);

/// Inclusive range "a..b" or a single integer "a".
struct IntRange {
  int lo = 0;
  int hi = 0;
};
IntRange parse_range(const std::string& text);

/// Largest degree any command will compute: SPLINEDIM_MAX_DEGREE or 40.
int max_degree_cap();

struct TableOptions {
  /// Empty means the document's own smoothness.
  std::optional<IntRange> r;
  IntRange d{0, 13};
  bool kernel = false;
  bool formula = false;
  bool closed_form = false;
  /// Evaluate closed forms even where they are not guaranteed.
  bool force = false;
  OutputFormat format = OutputFormat::Text;
};

struct VerifyOptions {
  int r_max = 2;
  int d_max = 10;
};

struct BasisOptions {
  std::optional<int> r;
  int d = 0;
  OutputFormat format = OutputFormat::Text;
};

struct HilbertOptions {
  std::optional<int> r;
  /// Degrees for the Hilbert function listing; default 0..postulation+3.
  std::optional<IntRange> d;
  bool ideal_only = false;
  OutputFormat format = OutputFormat::Text;
};

// Each command writes its report to `out`, diagnostics to `err`, and returns an ExitCode.
int cmd_classify(const ComplexDocument& doc, OutputFormat format, std::ostream& out, std::ostream& err);
int cmd_table(const ComplexDocument& doc, const TableOptions& options, std::ostream& out, std::ostream& err);
int cmd_verify(const ComplexDocument& doc, const VerifyOptions& options, std::ostream& out, std::ostream& err);
int cmd_basis(const ComplexDocument& doc, const BasisOptions& options, std::ostream& out, std::ostream& err);
int cmd_hilbert(const ComplexDocument& doc, const HilbertOptions& options, std::ostream& out, std::ostream& err);

}  // namespace splinedim
