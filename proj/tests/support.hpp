#pragma once

// Graph builders and fixture loading shared by the test binaries.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "geogrowth/graph.hpp"

namespace testing {

using geogrowth::NumberedGraph;
using geogrowth::Vertex;

inline NumberedGraph fixture(const std::string& name) {
  return geogrowth::load_graph(std::string(GEOGROWTH_FIXTURES) + "/" + name + ".json");
}

inline NumberedGraph build(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                           std::vector<int> numbers = {}) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  if (numbers.empty()) numbers.assign(n, 2);
  return NumberedGraph(std::move(names), std::move(numbers), edges);
}

inline NumberedGraph constant(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges, int number) {
  return build(n, edges, std::vector<int>(n, number));
}

inline std::vector<std::pair<Vertex, Vertex>> cycle_edges(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return e;
}

// Complete multipartite graph with `parts` parts of size `size`.
inline std::vector<std::pair<Vertex, Vertex>> multipartite_edges(std::size_t parts, std::size_t size) {
  std::vector<std::pair<Vertex, Vertex>> e;
  const std::size_t n = parts * size;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (u / size != v / size) e.emplace_back(u, v);
  return e;
}

inline std::vector<std::pair<Vertex, Vertex>> complete_edges(std::size_t n) { return multipartite_edges(n, 1); }

inline std::vector<std::pair<Vertex, Vertex>> petersen_edges() {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return e;
}

inline NumberedGraph cycle(std::size_t n, int number = 2) { return constant(n, cycle_edges(n), number); }
inline NumberedGraph complete(std::size_t n, int number = 2) { return constant(n, complete_edges(n), number); }
inline NumberedGraph empty_graph(std::size_t n, int number = 2) { return constant(n, {}, number); }
inline NumberedGraph path(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return constant(n, e, 2);
}
inline NumberedGraph octahedron() { return constant(6, multipartite_edges(3, 2), 2); }
inline NumberedGraph sixteen_cell() { return constant(8, multipartite_edges(4, 2), 2); }
inline NumberedGraph k33(int number = 2) { return constant(6, multipartite_edges(2, 3), number); }
inline NumberedGraph petersen(int number = 2) { return constant(10, petersen_edges(), number); }

// Fixtures every cross-check runs on.
inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{
      "single_n2", "single_n3", "single_n4", "single_n5", "single_n6", "single_n7", "edge_all2",
      "k2_n3", "k2_n4", "k2_n5", "square_20_7_2_13", "c4_all2", "c5_all2", "c5_n3", "k4_all2",
      "p3_all2", "empty3_all2", "two_squares_4_6", "octagon_4_6", "two_5cycles_2_6", "cycle10_2_6",
      "hexagon_diameters_3_7", "petersen_n4"};
  return names;
}

}  // namespace testing
