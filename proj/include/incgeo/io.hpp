#ifndef INCGEO_IO_HPP
#define INCGEO_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "incgeo/graph.hpp"

namespace incgeo {

// Canonical JSON form: vertices in graph (id-sorted) order, edges sorted by
// the same order, id strings as rendered.
inline std::string to_json(const ColoredGraph& g) {
  nlohmann::ordered_json j;
  j["types"] = g.types;
  j["vertices"] = nlohmann::ordered_json::array();
  for (const Vertex& v : g.vertices)
    j["vertices"].push_back(nlohmann::ordered_json{{"id", v.id.text}, {"type", v.type}});
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : g.edges())
    j["edges"].push_back(
        nlohmann::ordered_json::array({g.vertices[a].id.text, g.vertices[b].id.text}));
  return j.dump(2) + "\n";
}

inline ColoredGraph from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  if (!j.is_object() || !j.contains("types") || !j.contains("vertices") || !j.contains("edges"))
    fail(ErrorCode::ParseError, "expected object with types/vertices/edges");
  std::vector<std::string> types;
  for (const auto& t : j["types"]) {
    if (!t.is_string()) fail(ErrorCode::ParseError, "type names must be strings");
    types.push_back(t.get<std::string>());
  }
  GraphBuilder builder(types);
  for (const auto& v : j["vertices"]) {
    if (!v.contains("id") || !v.contains("type") || !v["id"].is_string() ||
        !v["type"].is_number_integer())
      fail(ErrorCode::ParseError, "vertex entries need an id string and a type index");
    builder.add_vertex(vid::named(v["id"].get<std::string>()), v["type"].get<int>());
  }
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      fail(ErrorCode::ParseError, "edges must be [idA, idB] pairs");
    builder.add_edge(vid::named(e[0].get<std::string>()), vid::named(e[1].get<std::string>()));
  }
  return builder.build();
}

inline ColoredGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

inline void save_graph(const ColoredGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::ParseError, "cannot write " + path);
  out << to_json(g);
}

// Fixed palette, cycled by type index.
inline const char* dot_palette(int type_index) {
  static const char* colors[16] = {
      "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4",
      "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff",
      "#9a6324", "#fffac8", "#800000", "#aaffc3"};
  return colors[type_index % 16];
}

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

inline std::string to_dot(const ColoredGraph& g) {
  std::ostringstream out;
  out << "graph incidence {\n  node [style=filled];\n";
  for (const Vertex& v : g.vertices)
    out << "  \"" << dot_escape(v.id.text) << "\" [fillcolor=\"" << dot_palette(v.type)
        << "\"];\n";
  for (const auto& [a, b] : g.edges())
    out << "  \"" << dot_escape(g.vertices[a].id.text) << "\" -- \""
        << dot_escape(g.vertices[b].id.text) << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace incgeo

#endif  // INCGEO_IO_HPP
