#include "gk/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace gk {

namespace {

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed, const char* what) {
  if (!j.is_object()) throw format_error(std::string(what) + ": expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) throw format_error(std::string(what) + ": unknown field \"" + key + "\"");
  }
}

u64 positive_integer(const json& v, const char* what) {
  if (!v.is_number_integer()) throw format_error(std::string(what) + ": expected an integer");
  if (v.is_number_unsigned()) {
    const u64 x = v.get<u64>();
    if (x == 0) throw format_error(std::string(what) + ": values must be positive");
    return x;
  }
  const i64 x = v.get<i64>();
  if (x <= 0) throw format_error(std::string(what) + ": values must be positive");
  return static_cast<u64>(x);
}

}  // namespace

json spectrum_to_json(const Spectrum& s) {
  return json{{"name", s.name()}, {"maximal_orders", s.maximal_orders()}};
}

Spectrum spectrum_from_json(const json& j) {
  reject_unknown_keys(j, {"name", "maximal_orders"}, "spectrum");
  if (!j.contains("name") || !j["name"].is_string()) throw format_error("spectrum: missing string field \"name\"");
  if (!j.contains("maximal_orders") || !j["maximal_orders"].is_array()) {
    throw format_error("spectrum: missing array field \"maximal_orders\"");
  }
  std::vector<u64> orders;
  for (const auto& v : j["maximal_orders"]) orders.push_back(positive_integer(v, "maximal_orders"));
  try {
    return Spectrum::normalize(j["name"].get<std::string>(), std::move(orders));
  } catch (const spectrum_error& e) {
    throw format_error(std::string("spectrum: ") + e.what());
  }
}

json graph_to_json(const GkGraph& g) {
  json edges = json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  return json{{"vertices", g.labels()}, {"edges", edges}};
}

GkGraph graph_from_json(const json& j) {
  reject_unknown_keys(j, {"vertices", "edges"}, "graph");
  if (!j.contains("vertices") || !j["vertices"].is_array()) throw format_error("graph: missing array field \"vertices\"");
  if (!j.contains("edges") || !j["edges"].is_array()) throw format_error("graph: missing array field \"edges\"");
  std::vector<u64> labels;
  for (const auto& v : j["vertices"]) labels.push_back(positive_integer(v, "vertices"));
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw format_error("graph: each edge must be a 2-element array");
    edges.emplace_back(positive_integer(e[0], "edges"), positive_integer(e[1], "edges"));
  }
  try {
    return GkGraph::build(std::move(labels), edges);
  } catch (const graph_error& e) {
    throw format_error(std::string("graph: ") + e.what());
  }
}

bool looks_like_spectrum(const json& j) { return j.is_object() && j.contains("maximal_orders"); }

bool looks_like_graph(const json& j) { return j.is_object() && j.contains("vertices") && j.contains("edges"); }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw format_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw format_error(path + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace gk
