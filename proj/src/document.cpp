#include "splinedim/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "splinedim/parser.hpp"

namespace splinedim {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) { throw DocumentError(message); }

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

void check_keys(const json& object, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : object.items())
    if (!allowed.count(key)) fail(where + ": unknown key \"" + key + "\"");
}

int read_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where + " must be an integer");
  return v.get<int>();
}

std::string read_string(const json& v, const std::string& where) {
  if (!v.is_string()) fail(where + " must be a string");
  return v.get<std::string>();
}

Rational read_rational(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    Rational q;
    const std::string s = v.get<std::string>();
    if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) fail(where + ": \"" + s + "\" is not a rational p/q");
    q.canonicalize();
    return q;
  }
  fail(where + " must be an integer or a string \"p/q\"");
}

json write_rational(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

}  // namespace

ComplexDocument parse_document(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("invalid JSON at " + line_column(text, e.byte) + ": " + e.what());
  }
  if (!root.is_object()) fail("document must be a JSON object");
  check_keys(root, {"version", "name", "description", "vertex", "default_smoothness", "edges"}, "document");

  ComplexDocument doc;
  if (root.contains("version")) doc.version = read_int(root["version"], "version");
  if (doc.version != 1) fail("unsupported document version " + std::to_string(doc.version));
  if (root.contains("name")) doc.name = read_string(root["name"], "name");
  if (root.contains("description")) doc.description = read_string(root["description"], "description");
  if (root.contains("vertex")) {
    const json& v = root["vertex"];
    if (!v.is_array() || v.size() != 2) fail("vertex must be a pair [x, y]");
    doc.vertex = std::make_pair(read_rational(v[0], "vertex[0]"), read_rational(v[1], "vertex[1]"));
  }
  if (root.contains("default_smoothness"))
    doc.default_smoothness = read_int(root["default_smoothness"], "default_smoothness");
  if (doc.default_smoothness < 0) fail("default_smoothness must be non-negative");

  if (!root.contains("edges") || !root["edges"].is_array()) fail("edges must be an array");
  const json& edges = root["edges"];
  if (edges.size() < 2) fail("a complex needs at least 2 edges, got " + std::to_string(edges.size()));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const json& e = edges[i];
    ComplexDocument::EdgeEntry entry;
    if (e.is_string()) {
      entry.curve = e.get<std::string>();
    } else {
      if (!e.is_object()) fail(where + " must be an object or a curve string");
      check_keys(e, {"curve", "smoothness"}, where);
      if (!e.contains("curve")) fail(where + ": missing \"curve\"");
      entry.curve = read_string(e["curve"], where + ".curve");
      if (e.contains("smoothness")) {
        entry.smoothness = read_int(e["smoothness"], where + ".smoothness");
        if (*entry.smoothness < 0) fail(where + ".smoothness must be non-negative");
      }
    }
    try {
      parse_polynomial(entry.curve, VariableSet::xy());
    } catch (const ParseError& pe) {
      fail(where + ".curve \"" + entry.curve + "\": " + pe.what());
    }
    doc.edges.push_back(std::move(entry));
  }
  return doc;
}

ComplexDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_document(buffer.str());
  } catch (const DocumentError& e) {
    fail(path + ": " + e.what());
  }
}

std::string emit_document(const ComplexDocument& doc) {
  json root = json::object();
  root["version"] = doc.version;
  if (!doc.name.empty()) root["name"] = doc.name;
  if (!doc.description.empty()) root["description"] = doc.description;
  if (doc.vertex) root["vertex"] = json::array({write_rational(doc.vertex->first), write_rational(doc.vertex->second)});
  root["default_smoothness"] = doc.default_smoothness;
  json edges = json::array();
  for (const auto& e : doc.edges) {
    json entry = {{"curve", e.curve}};
    if (e.smoothness) entry["smoothness"] = *e.smoothness;
    edges.push_back(std::move(entry));
  }
  root["edges"] = std::move(edges);
  return root.dump(2) + "\n";
}

std::vector<Edge> document_edges(const ComplexDocument& doc, std::optional<int> r) {
  if (r && *r < 0) throw InvalidArgument("smoothness must be non-negative");
  const VarsPtr xy = VariableSet::xy();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < doc.edges.size(); ++i) {
    Polynomial f;
    try {
      f = parse_polynomial(doc.edges[i].curve, xy);
    } catch (const ParseError& pe) {
      fail("edges[" + std::to_string(i) + "].curve: " + pe.what());
    }
    if (doc.vertex) {
      // f(x + vx, y + vy) moves the vertex to the origin.
      const Polynomial X = Polynomial::variable(0, xy) + Polynomial::constant(doc.vertex->first, xy);
      const Polynomial Y = Polynomial::variable(1, xy) + Polynomial::constant(doc.vertex->second, xy);
      f = substitute(f, {X, Y});
    }
    if (f.is_zero()) fail("edges[" + std::to_string(i) + "].curve is the zero polynomial");
    edges.push_back({homogenize(f), r.value_or(doc.edges[i].smoothness.value_or(doc.default_smoothness))});
  }
  return edges;
}

StarComplex build_complex(const ComplexDocument& doc, std::optional<int> r) { return make_star(document_edges(doc, r)); }

}  // namespace splinedim
