#ifndef MIXEDCAGE_IO_HPP
#define MIXEDCAGE_IO_HPP

// Text formats: label strings, DOT export, the "mixed-graph/v1" JSON
// document, and the family catalog (markdown / CSV).
//
// All writers are byte-deterministic: vertices in canonical label order,
// edges and arcs sorted by vertex index.

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "mixedcage/analysis.hpp"
#include "mixedcage/bounds.hpp"
#include "mixedcage/generators.hpp"
#include "mixedcage/mixed_graph.hpp"
#include "mixedcage/vertex_label.hpp"

namespace mixedcage {

inline constexpr std::string_view kFormatTag = "mixed-graph/v1";

class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Label strings.

namespace detail {

inline bool all_digits(std::string_view s) {
  return !s.empty() && s.size() <= 19 &&
         s.find_first_not_of("0123456789") == std::string_view::npos;
}

inline FieldElement parse_field_part(std::string_view text,
                                     std::optional<std::uint32_t> q,
                                     std::string_view whole) {
  if (!q)
    throw DocumentError("label '" + std::string(whole) +
                        "' needs a field order");
  try {
    return parse_element(std::string(text), *q);
  } catch (const FieldError& e) {
    throw DocumentError("label '" + std::string(whole) + "': " + e.what());
  }
}

}  // namespace detail

/// Inverse of to_string(VertexLabel). Field-valued labels need q.
inline VertexLabel parse_label(std::string_view text,
                               std::optional<std::uint32_t> q) {
  const auto bad = [&](const char* why) {
    return DocumentError("label '" + std::string(text) + "': " + why);
  };
  if (text == "P_inf") return inf_point();
  if (text == "L_inf") return inf_line();
  if (text.starts_with("P_") || text.starts_with("L_")) {
    auto e = detail::parse_field_part(text.substr(2), q, text);
    return text[0] == 'P' ? class_point(e) : class_line(e);
  }
  if (text.starts_with("n")) {
    auto digits = text.substr(1);
    if (!detail::all_digits(digits)) throw bad("malformed plain index");
    return plain(std::stoull(std::string(digits)));
  }
  if (text.starts_with("t")) {
    std::vector<std::uint32_t> path;
    auto rest = text.substr(1);
    while (!rest.empty()) {
      auto dot = rest.find('.');
      auto part = rest.substr(0, dot);
      if (!detail::all_digits(part) || part.size() > 9)
        throw bad("malformed tree path");
      path.push_back(static_cast<std::uint32_t>(std::stoul(std::string(part))));
      if (dot == std::string_view::npos) break;
      rest = rest.substr(dot + 1);
      if (rest.empty()) throw bad("malformed tree path");
    }
    return tree_node(std::move(path));
  }
  const bool is_point = text.starts_with("(") && text.ends_with(")");
  const bool is_line = text.starts_with("[") && text.ends_with("]");
  if (!is_point && !is_line) throw bad("unrecognized label");
  auto inner = text.substr(1, text.size() - 2);
  auto comma = inner.find(',');
  if (comma == std::string_view::npos || inner.find(',', comma + 1) !=
                                             std::string_view::npos)
    throw bad("expected two coordinates");
  auto first = inner.substr(0, comma), second = inner.substr(comma + 1);
  const bool primed1 = first.ends_with("'"), primed2 = second.ends_with("'");
  if (primed1 != primed2) throw bad("coordinates disagree on being primed");
  if (primed1) {
    first.remove_suffix(1);
    second.remove_suffix(1);
  }
  auto a = detail::parse_field_part(first, q, text);
  auto b = detail::parse_field_part(second, q, text);
  if (is_point) return primed1 ? point_copy(a, b) : point(a, b);
  return primed1 ? line_copy(a, b) : line(a, b);
}

// ---------------------------------------------------------------------------
// DOT.

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// Vertices first, then `"u" -> "v" [dir=none];` per edge (u before v in
/// canonical order), then `"u" -> "v";` per arc.
inline std::string export_dot(const MixedGraph& g) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (const auto& v : g.vertices())
    os << "  " << detail::dot_quote(to_string(v)) << ";\n";
  for (auto [a, b] : g.edges())
    os << "  " << detail::dot_quote(to_string(g.label(a))) << " -> "
       << detail::dot_quote(to_string(g.label(b))) << " [dir=none];\n";
  for (auto [a, b] : g.arcs())
    os << "  " << detail::dot_quote(to_string(g.label(a))) << " -> "
       << detail::dot_quote(to_string(g.label(b))) << ";\n";
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// JSON document.

inline nlohmann::ordered_json export_json_document(const MixedGraph& g) {
  nlohmann::ordered_json doc;
  doc["format"] = kFormatTag;
  if (auto q = g.field_order())
    doc["field_order"] = *q;
  else
    doc["field_order"] = nullptr;
  auto vertices = nlohmann::ordered_json::array();
  for (const auto& v : g.vertices()) vertices.push_back(to_string(v));
  doc["vertices"] = std::move(vertices);
  auto pairs = [](std::span<const IdPair> ps) {
    auto arr = nlohmann::ordered_json::array();
    for (auto [a, b] : ps) arr.push_back({a, b});
    return arr;
  };
  doc["edges"] = pairs(g.edges());
  doc["arcs"] = pairs(g.arcs());
  return doc;
}

/// Compact single-line JSON followed by a newline.
inline std::string export_json(const MixedGraph& g) {
  return export_json_document(g).dump() + "\n";
}

inline MixedGraph import_json_document(const nlohmann::json& doc) {
  if (!doc.is_object()) throw DocumentError("document must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "format" && key != "field_order" && key != "vertices" &&
        key != "edges" && key != "arcs")
      throw DocumentError("unknown field '" + key + "'");
  }
  if (!doc.contains("format") || !doc["format"].is_string())
    throw DocumentError("field 'format': missing or not a string");
  const auto tag = doc["format"].get<std::string>();
  if (tag != kFormatTag)
    throw DocumentError("field 'format': unsupported version '" + tag +
                        "' (expected '" + std::string(kFormatTag) + "')");

  std::optional<std::uint32_t> q;
  if (doc.contains("field_order") && !doc["field_order"].is_null()) {
    const auto& f = doc["field_order"];
    if (!f.is_number_unsigned() || f.get<std::uint64_t>() > 0xFFFFFFFFu ||
        !is_supported_field_order(f.get<std::uint32_t>()))
      throw DocumentError("field 'field_order': not a supported field order");
    q = f.get<std::uint32_t>();
  }

  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw DocumentError("field 'vertices': missing or not an array");
  std::vector<VertexLabel> vertices;
  for (std::size_t k = 0; k < doc["vertices"].size(); ++k) {
    const auto& v = doc["vertices"][k];
    if (!v.is_string())
      throw DocumentError("field 'vertices[" + std::to_string(k) +
                          "]': not a string");
    try {
      vertices.push_back(parse_label(v.get<std::string>(), q));
    } catch (const DocumentError& e) {
      throw DocumentError("field 'vertices[" + std::to_string(k) + "]': " +
                          e.what());
    }
  }

  auto read_pairs = [&](const char* name) {
    std::vector<LabelPair> out;
    if (!doc.contains(name) || !doc[name].is_array())
      throw DocumentError(std::string("field '") + name +
                          "': missing or not an array");
    const auto& arr = doc[name];
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const std::string where =
          std::string("field '") + name + "[" + std::to_string(k) + "]'";
      const auto& p = arr[k];
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() ||
          !p[1].is_number_unsigned())
        throw DocumentError(where + ": expected a pair of indices");
      const auto i = p[0].get<std::uint64_t>(), j = p[1].get<std::uint64_t>();
      if (i >= vertices.size() || j >= vertices.size())
        throw DocumentError(where + ": index out of range");
      if (i == j)
        throw DocumentError(where + ": self-loop at " + to_string(vertices[i]));
      out.emplace_back(vertices[i], vertices[j]);
    }
    return out;
  };
  auto edges = read_pairs("edges");
  auto arcs = read_pairs("arcs");
  try {
    return build_graph(std::move(vertices), std::move(edges), std::move(arcs));
  } catch (const GraphError& e) {
    throw DocumentError(std::string("invalid graph: ") + e.what());
  }
}

inline MixedGraph import_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
  return import_json_document(doc);
}

// ---------------------------------------------------------------------------
// Family catalog.

struct CatalogRow {
  std::uint32_t q = 0, p = 0, z = 0, r = 0;
  std::size_t order = 0;
  bool girth_verified = false;
  std::uint64_t family_upper = 0;
  std::uint64_t moore = 0;
  std::optional<std::uint64_t> ahm;  // only meaningful as a bound when z = 1
  std::uint64_t mixed_lower = 0;
  double verify_runtime_ms = 0;
};

/// Builds gen_family(q) and verifies it as a [z, q; 6]-mixed graph.
inline CatalogRow catalog_row(std::uint32_t q) {
  const FamilyParams fp = family_params(q);
  CatalogRow row;
  row.q = q;
  row.p = fp.p;
  row.z = fp.z;
  row.r = fp.r;
  const auto graph = gen_family(q);
  row.order = graph.order();
  const auto start = std::chrono::steady_clock::now();
  row.girth_verified = verify_zrg(graph, fp.z, fp.r, 6).passed;
  row.verify_runtime_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
  const auto bounds = bounds_report(fp.z, fp.r, 6, q);
  row.family_upper = *bounds.family_upper;
  row.moore = bounds.moore;
  if (fp.z == 1) row.ahm = bounds.ahm;
  row.mixed_lower = bounds.mixed_lower.value;
  return row;
}

inline constexpr std::string_view kCatalogCsvHeader =
    "q,p,z,r,order,girth_verified,family_upper,moore,ahm,mixed_lower";

/// Runtime is not part of the CSV, so the CSV is reproducible.
inline std::string catalog_csv(const std::vector<CatalogRow>& rows) {
  std::ostringstream os;
  os << kCatalogCsvHeader << "\n";
  for (const auto& r : rows) {
    os << r.q << ',' << r.p << ',' << r.z << ',' << r.r << ',' << r.order
       << ',' << (r.girth_verified ? "true" : "false") << ','
       << r.family_upper << ',' << r.moore << ',';
    if (r.ahm) os << *r.ahm;
    os << ',' << r.mixed_lower << "\n";
  }
  return os.str();
}

inline std::string catalog_markdown(const std::vector<CatalogRow>& rows) {
  std::ostringstream os;
  os << "| q | p | z | r | order | girth_verified | family_upper | moore | ahm "
        "| mixed_lower | verify_runtime_ms |\n";
  os << "|---|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    os << "| " << r.q << " | " << r.p << " | " << r.z << " | " << r.r << " | "
       << r.order << " | " << (r.girth_verified ? "yes" : "no") << " | "
       << r.family_upper << " | " << r.moore << " | "
       << (r.ahm ? std::to_string(*r.ahm) : std::string("-")) << " | "
       << r.mixed_lower << " | " << static_cast<long long>(r.verify_runtime_ms)
       << " |\n";
  }
  return os.str();
}

}  // namespace mixedcage

#endif  // MIXEDCAGE_IO_HPP
