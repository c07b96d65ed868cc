#include "ruled/graph_json.hpp"

#include <sstream>
#include <stdexcept>

namespace ruled {

using nlohmann::ordered_json;

ordered_json graph_to_json(const DecoratedGraph& g) {
  ordered_json j;
  j["height"] = g.height().str();
  j["genus"] = g.genus();
  j["bottom_area"] = g.bottom().area.str();
  j["top_area"] = g.top().area.str();
  ordered_json chains = ordered_json::array();
  for (std::size_t id : g.by_start()) {
    const Chain& c = g.chains()[id];
    ordered_json nodes = ordered_json::array();
    for (std::size_t i = 0; i < c.vertex_count(); ++i) {
      if (i > 0) nodes.push_back(c.labels()[i - 1]);
      nodes.push_back(c.height(i).str());
    }
    chains.push_back(std::move(nodes));
  }
  j["chains"] = std::move(chains);
  return j;
}

DecoratedGraph graph_from_json(const ordered_json& j) {
  try {
    const int genus = j.at("genus").get<int>();
    const Rational height = Rational::parse(j.at("height").get<std::string>());
    const Rational bottom = Rational::parse(j.at("bottom_area").get<std::string>());
    const Rational top = Rational::parse(j.at("top_area").get<std::string>());
    std::vector<Chain> chains;
    for (const auto& nodes : j.at("chains")) {
      if (!nodes.is_array() || nodes.size() % 2 == 0) throw std::invalid_argument("chain must alternate v,e,...,v");
      std::vector<Rational> heights;
      std::vector<std::uint64_t> labels;
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (i % 2 == 0) heights.push_back(Rational::parse(nodes[i].get<std::string>()));
        else labels.push_back(nodes[i].get<std::uint64_t>());
      }
      chains.emplace_back(std::move(heights), std::move(labels));
    }
    return DecoratedGraph(FatVertex{bottom, genus}, FatVertex{top, genus}, height, std::move(chains));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
  }
}

std::string canonical_string(const DecoratedGraph& g) { return graph_to_json(g).dump(); }

std::string graph_to_dot(const DecoratedGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  os << "  rankdir=BT;\n";
  os << "  label=\"height " << g.height() << "\";\n";
  os << "  bottom [shape=box, label=\"area " << g.bottom().area << "\\ngenus " << g.genus() << "\"];\n";
  os << "  top [shape=box, label=\"area " << g.top().area << "\\ngenus " << g.genus() << "\"];\n";
  for (std::size_t r = 0; r < g.chain_count(); ++r) {
    const Chain& c = g.chains()[g.by_start()[r]];
    auto node = [&](std::size_t i) { return "c" + std::to_string(r) + "v" + std::to_string(i); };
    for (std::size_t i = 0; i < c.vertex_count(); ++i)
      os << "  " << node(i) << " [shape=point, xlabel=\"" << c.height(i) << "\"];\n";
    os << "  bottom -- " << node(0) << " [label=\"1\"];\n";
    for (std::size_t i = 0; i + 1 < c.vertex_count(); ++i)
      os << "  " << node(i) << " -- " << node(i + 1) << " [label=\"" << c.labels()[i] << "\"];\n";
    os << "  " << node(c.vertex_count() - 1) << " -- top [label=\"1\"];\n";
  }
  if (g.chain_count() == 0) os << "  bottom -- top [style=invis];\n";
  os << "}\n";
  return os.str();
}

}  // namespace ruled
