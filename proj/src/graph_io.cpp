#include <fstream>
#include <sstream>

#include "geogrowth/errors.hpp"
#include "geogrowth/graph.hpp"
#include "json.hpp"

namespace geogrowth {

using nlohmann::json;

NumberedGraph parse_graph(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("graph document must be a JSON object");

  std::vector<std::string> names;
  if (doc.contains("vertices")) {
    const auto& vs = doc["vertices"];
    if (!vs.is_array()) throw ParseError("\"vertices\" must be an array of strings");
    for (const auto& v : vs) {
      if (!v.is_string()) throw ParseError("\"vertices\" must be an array of strings");
      names.push_back(v.get<std::string>());
    }
  }
  std::map<std::string, Vertex> index;
  for (Vertex i = 0; i < names.size(); ++i)
    if (!index.emplace(names[i], i).second) throw ParseError("duplicate vertex '" + names[i] + "'");

  std::vector<int> numbers(names.size(), 2);
  if (doc.contains("numbers")) {
    const auto& ns = doc["numbers"];
    if (!ns.is_object()) throw ParseError("\"numbers\" must be an object mapping vertex to integer");
    for (const auto& [key, value] : ns.items()) {
      auto it = index.find(key);
      if (it == index.end()) throw ParseError("number given for undeclared vertex '" + key + "'");
      if (!value.is_number_integer()) throw ParseError("number of '" + key + "' is not an integer");
      long n = value.get<long>();
      if (n < 2) throw ParseError("vertex '" + key + "' has number " + std::to_string(n) + " < 2");
      if (n > 1'000'000) throw ParseError("vertex '" + key + "' has an unreasonably large number");
      numbers[it->second] = static_cast<int>(n);
    }
  }

  std::vector<std::pair<Vertex, Vertex>> edges;
  if (doc.contains("edges")) {
    const auto& es = doc["edges"];
    if (!es.is_array()) throw ParseError("\"edges\" must be an array of vertex pairs");
    for (const auto& e : es) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        throw ParseError("each edge must be a pair of vertex names");
      const auto a = e[0].get<std::string>();
      const auto b = e[1].get<std::string>();
      auto ia = index.find(a);
      auto ib = index.find(b);
      if (ia == index.end()) throw ParseError("edge endpoint '" + a + "' is not a declared vertex");
      if (ib == index.end()) throw ParseError("edge endpoint '" + b + "' is not a declared vertex");
      if (ia->second == ib->second) throw ParseError("self-loop at '" + a + "'");
      edges.emplace_back(ia->second, ib->second);
    }
  }
  return NumberedGraph(std::move(names), std::move(numbers), edges);
}

NumberedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

std::string graph_to_json(const NumberedGraph& g) {
  json doc;
  doc["vertices"] = g.names();
  json numbers = json::object();
  for (Vertex v = 0; v < g.size(); ++v) numbers[g.name(v)] = g.number(v);
  doc["numbers"] = numbers;
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({g.name(u), g.name(v)});
  doc["edges"] = edges;
  return doc.dump(2);
}

}  // namespace geogrowth
