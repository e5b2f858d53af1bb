#include "czdg/serialize.hpp"

#include <json.hpp>

namespace czdg {

namespace {

const char* dot_name(GraphKind k) {
  switch (k) {
    case GraphKind::Zdg: return "zdg";
    case GraphKind::Czdg: return "czdg";
    case GraphKind::Synthetic: return "g";
  }
  return "g";
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string graph_to_dot(const SimpleGraph& g,
                         const std::vector<int>* class_sizes) {
  std::string out = "graph ";
  out += dot_name(g.kind());
  out += " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out += "  " + dot_quote(g.label(v));
    if (class_sizes)
      out += " [class_size=" + std::to_string((*class_sizes)[v]) + "]";
    out += ";\n";
  }
  for (auto [u, v] : g.edges())
    out += "  " + dot_quote(g.label(u)) + " -- " + dot_quote(g.label(v)) + ";\n";
  out += "}\n";
  return out;
}

std::string graph_to_json(const SimpleGraph& g,
                          const std::vector<int>* class_sizes) {
  nlohmann::ordered_json j;
  j["vertices"] = nlohmann::ordered_json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    nlohmann::ordered_json vj;
    vj["id"] = v;
    vj["label"] = g.label(v);
    vj["class_size"] = class_sizes ? (*class_sizes)[v] : 1;
    j["vertices"].push_back(std::move(vj));
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j.dump() + "\n";
}

std::string graph_to_edgelist(const SimpleGraph& g) {
  std::string out;
  for (auto [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string csv_escape(const std::string& field) {
  if (field.find(',') == std::string::npos &&
      field.find('"') == std::string::npos &&
      field.find('\n') == std::string::npos)
    return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace czdg
