#include "rdv/instance_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rdv/errors.h"

namespace rdv {

using nlohmann::json;

Instance read_instance(std::string_view text) {
  try {
    json doc = json::parse(text);
    std::vector<NodeId> ids = doc.at("nodes").get<std::vector<NodeId>>();
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::vector<Weight> wa;
    std::vector<Weight> wb;
    for (const auto& e : doc.at("edges")) {
      edges.emplace_back(e.at("u").get<NodeId>(), e.at("v").get<NodeId>());
      wa.push_back(e.at("wA").get<Weight>());
      wb.push_back(e.at("wB").get<Weight>());
    }
    Graph g = Graph::build(std::move(ids), edges);
    Vertex s_a = g.vertex(doc.at("sA").get<NodeId>());
    Vertex s_b = g.vertex(doc.at("sB").get<NodeId>());
    return Instance::make(std::move(g), s_a, s_b, WeightFn(std::move(wa)), WeightFn(std::move(wb)));
  } catch (const json::exception& e) {
    throw ParseError(std::string("instance document: ") + e.what());
  } catch (const InvalidInstance& e) {
    throw ParseError(std::string("invalid instance: ") + e.what());
  }
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_instance(buffer.str());
}

std::string write_instance(const Instance& instance) {
  const Graph& g = instance.graph;
  json doc;
  doc["nodes"] = std::vector<NodeId>(g.ids().begin(), g.ids().end());
  json edges = json::array();
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    edges.push_back({{"u", g.id(g.edge(e).u)},
                     {"v", g.id(g.edge(e).v)},
                     {"wA", instance.w_a[e]},
                     {"wB", instance.w_b[e]}});
  }
  doc["edges"] = std::move(edges);
  doc["sA"] = g.id(instance.s_a);
  doc["sB"] = g.id(instance.s_b);
  return doc.dump(1) + "\n";
}

}  // namespace rdv
