#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "edgering/graph.hpp"

namespace edgering {

SimpleGraph graph_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("edges")) throw std::invalid_argument("graph file needs an \"edges\" array");
  std::vector<Edge> edges;
  std::set<VertexId> seen;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edges must be [a,b] pairs");
    VertexId a = e[0].get<VertexId>(), b = e[1].get<VertexId>();
    edges.emplace_back(a, b);
    seen.insert(a);
    seen.insert(b);
  }
  std::vector<VertexId> vertices;
  if (j.contains("vertices"))
    vertices = j.at("vertices").get<std::vector<VertexId>>();
  else
    vertices.assign(seen.begin(), seen.end());
  return SimpleGraph(std::move(vertices), std::move(edges));
}

std::string graph_to_json(const SimpleGraph& g) {
  nlohmann::json j;
  j["vertices"] = g.vertices();
  j["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) j["edges"].push_back({e.a, e.b});
  return j.dump();
}

SimpleGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return graph_from_json(ss.str());
}

void save_graph(const SimpleGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << graph_to_json(g) << "\n";
}

}  // namespace edgering
