#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splinedim/errors.hpp"
#include "splinedim/star_complex.hpp"

namespace splinedim {

/// JSON description of a star complex. Curves are affine polynomials in x, y;
/// the vertex (default origin) is translated to the origin and every curve
/// homogenized before validation.
///
///   {"version": 1, "name": "...", "description": "...", "vertex": [0, 0],
///    "default_smoothness": 0,
///    "edges": [{"curve": "x"}, {"curve": "x^2 + y^2 - 2*y", "smoothness": 1}]}
struct ComplexDocument {
  struct EdgeEntry {
    std::string curve;
    std::optional<int> smoothness;
    friend bool operator==(const EdgeEntry&, const EdgeEntry&) = default;
  };

  int version = 1;
  std::string name;
  std::string description;
  /// Affine vertex as exact rationals; nothing means the origin.
  std::optional<std::pair<Rational, Rational>> vertex;
  int default_smoothness = 0;
  std::vector<EdgeEntry> edges;

  friend bool operator==(const ComplexDocument&, const ComplexDocument&) = default;
};

/// Malformed document; the message carries line and column when known.
class DocumentError : public SplineError {
 public:
  using SplineError::SplineError;
};

ComplexDocument parse_document(const std::string& text);
ComplexDocument load_document(const std::string& path);
std::string emit_document(const ComplexDocument& doc);

/// Homogenized edges with per-edge smoothness; `r` overrides every edge.
std::vector<Edge> document_edges(const ComplexDocument& doc, std::optional<int> r = std::nullopt);
/// document_edges followed by make_star.
StarComplex build_complex(const ComplexDocument& doc, std::optional<int> r = std::nullopt);

}  // namespace splinedim
