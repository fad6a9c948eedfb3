#pragma once

// Numbered graphs: a simplicial graph whose vertices carry an order N(v) >= 2.
// Cliques, links, relative links Lk(sigma; tau), link-regularity and the
// equivalence relation on link-regular numbered graphs.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace geogrowth {

using Vertex = std::size_t;

/// Finite multiset with positive multiplicities.  Zero counts are never stored.
template <typename T>
class Multiset {
 public:
  Multiset() = default;
  template <typename Range>
  static Multiset of(const Range& items) {
    Multiset m;
    for (const auto& x : items) m.add(x);
    return m;
  }

  void add(const T& x, std::size_t times = 1) {
    if (times > 0) entries_[x] += times;
  }
  std::size_t count(const T& x) const {
    auto it = entries_.find(x);
    return it == entries_.end() ? 0 : it->second;
  }
  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& [_, m] : entries_) n += m;
    return n;
  }
  bool empty() const { return entries_.empty(); }
  const std::map<T, std::size_t>& entries() const { return entries_; }

  /// Sub-multiset relation.
  bool subset_of(const Multiset& o) const {
    for (const auto& [x, m] : entries_)
      if (o.count(x) < m) return false;
    return true;
  }

  friend Multiset operator+(Multiset a, const Multiset& b) {
    for (const auto& [x, m] : b.entries_) a.entries_[x] += m;
    return a;
  }
  /// Elements whose multiplicity would drop to zero or below are removed.
  friend Multiset operator-(Multiset a, const Multiset& b) {
    for (const auto& [x, m] : b.entries_) {
      auto it = a.entries_.find(x);
      if (it == a.entries_.end()) continue;
      if (it->second <= m)
        a.entries_.erase(it);
      else
        it->second -= m;
    }
    return a;
  }
  friend auto operator<=>(const Multiset&, const Multiset&) = default;
  friend bool operator==(const Multiset&, const Multiset&) = default;

 private:
  std::map<T, std::size_t> entries_;
};

using NumberMultiset = Multiset<int>;

class NumberedGraph {
 public:
  NumberedGraph() = default;
  /// Edges refer to vertex indices.  Throws ParseError on self-loops,
  /// duplicate edges, duplicate names, out-of-range endpoints or N(v) < 2.
  NumberedGraph(std::vector<std::string> names, std::vector<int> numbers,
                const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Vertex v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  int number(Vertex v) const { return numbers_[v]; }
  const std::vector<int>& numbers() const { return numbers_; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u][v]; }
  /// Sorted neighbor list.
  const std::vector<Vertex>& neighbors(Vertex v) const { return neighbors_[v]; }
  /// Undirected edges (u < v), sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  std::optional<Vertex> find(std::string_view name) const;

 private:
  std::vector<std::string> names_;
  std::vector<int> numbers_;
  std::vector<std::vector<bool>> adj_;
  std::vector<std::vector<Vertex>> neighbors_;
};

/// A set of pairwise adjacent vertices, stored sorted.
class Clique {
 public:
  Clique() = default;
  /// Throws PreconditionError unless members are distinct and pairwise adjacent.
  Clique(const NumberedGraph& g, std::vector<Vertex> members);

  const std::vector<Vertex>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Vertex v) const;
  bool subset_of(const Clique& o) const;

  friend auto operator<=>(const Clique&, const Clique&) = default;
  friend bool operator==(const Clique&, const Clique&) = default;

 private:
  std::vector<Vertex> members_;
};

/// N(U) for a set of vertices.
NumberMultiset number_multiset(const NumberedGraph& g, const std::vector<Vertex>& vertices);

/// All cliques grouped by size; result[k] holds the k-cliques, result[0] = {empty}.
std::vector<std::vector<Clique>> cliques(const NumberedGraph& g);

/// Maximum clique size d (0 for the empty graph).
std::size_t max_clique_size(const NumberedGraph& g);

/// Vertices v outside sigma such that sigma + v is a clique.
std::vector<Vertex> link(const NumberedGraph& g, const Clique& sigma);

/// Vertices v outside sigma with Lk(v) ∩ sigma = tau.  tau must be a subset of sigma.
std::vector<Vertex> link_relative(const NumberedGraph& g, const Clique& sigma, const Clique& tau);

struct LinkRegularity {
  bool regular = true;
  /// On failure: two cliques with equal N-multisets whose links differ.
  std::optional<std::pair<Clique, Clique>> witness;
};

LinkRegularity is_link_regular(const NumberedGraph& g);

/// Vertex names are prefixed "0/" and "1/" to keep them distinct.
NumberedGraph disjoint_union(const NumberedGraph& a, const NumberedGraph& b);

/// Both graphs must be link-regular; otherwise throws HypothesisError naming
/// the offending graph ("first" or "second").
bool are_equivalent(const NumberedGraph& a, const NumberedGraph& b);

/// Link sizes of a link-regular all-2 graph: ell[0] = |V|, ell[k] = |Lk(k-clique)|.
struct LinkProfile {
  std::size_t d = 0;
  std::vector<long> ell;
  friend bool operator==(const LinkProfile&, const LinkProfile&) = default;
};

/// Throws HypothesisError when some N(v) != 2 or the graph is not link-regular.
LinkProfile link_profile(const NumberedGraph& g);

/// "{a, b}" using vertex names.
std::string describe(const NumberedGraph& g, const Clique& c);

// JSON document: {"vertices": [...], "numbers": {name: N}, "edges": [[a, b], ...]}.
// Missing numbers default to 2.
NumberedGraph parse_graph(std::string_view json_text);
NumberedGraph load_graph(const std::string& path);
std::string graph_to_json(const NumberedGraph& g);

}  // namespace geogrowth
