#include "geogrowth/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "geogrowth/errors.hpp"

namespace geogrowth {

NumberedGraph::NumberedGraph(std::vector<std::string> names, std::vector<int> numbers,
                             const std::vector<std::pair<Vertex, Vertex>>& edges)
    : names_(std::move(names)), numbers_(std::move(numbers)) {
  const std::size_t n = names_.size();
  if (numbers_.size() != n) throw ParseError("vertex and number lists differ in length");
  std::set<std::string_view> seen;
  for (const auto& name : names_)
    if (!seen.insert(name).second) throw ParseError("duplicate vertex '" + name + "'");
  for (std::size_t v = 0; v < n; ++v)
    if (numbers_[v] < 2)
      throw ParseError("vertex '" + names_[v] + "' has number " + std::to_string(numbers_[v]) + " < 2");

  adj_.assign(n, std::vector<bool>(n, false));
  neighbors_.assign(n, {});
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw ParseError("edge endpoint out of range");
    if (u == v) throw ParseError("self-loop at '" + names_[u] + "'");
    if (adj_[u][v]) throw ParseError("duplicate edge '" + names_[u] + "'-'" + names_[v] + "'");
    adj_[u][v] = adj_[v][u] = true;
    neighbors_[u].push_back(v);
    neighbors_[v].push_back(u);
  }
  for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
}

std::vector<std::pair<Vertex, Vertex>> NumberedGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < size(); ++u)
    for (Vertex v : neighbors_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::optional<Vertex> NumberedGraph::find(std::string_view name) const {
  for (Vertex v = 0; v < names_.size(); ++v)
    if (names_[v] == name) return v;
  return std::nullopt;
}

Clique::Clique(const NumberedGraph& g, std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] >= g.size()) throw PreconditionError("clique member out of range");
    if (i > 0 && members_[i] == members_[i - 1]) throw PreconditionError("repeated clique member");
    for (std::size_t j = 0; j < i; ++j)
      if (!g.adjacent(members_[i], members_[j]))
        throw PreconditionError("'" + g.name(members_[i]) + "' and '" + g.name(members_[j]) +
                                "' are not adjacent");
  }
}

bool Clique::contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

bool Clique::subset_of(const Clique& o) const {
  return std::includes(o.members_.begin(), o.members_.end(), members_.begin(), members_.end());
}

NumberMultiset number_multiset(const NumberedGraph& g, const std::vector<Vertex>& vertices) {
  NumberMultiset m;
  for (Vertex v : vertices) m.add(g.number(v));
  return m;
}

std::vector<std::vector<Clique>> cliques(const NumberedGraph& g) {
  std::vector<std::vector<Clique>> by_size(1);
  by_size[0].emplace_back();

  // Extend each clique only by higher-indexed vertices of its link.
  std::vector<Vertex> current;
  std::function<void(const std::vector<Vertex>&)> grow = [&](const std::vector<Vertex>& candidates) {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      Vertex v = candidates[i];
      current.push_back(v);
      if (by_size.size() <= current.size()) by_size.emplace_back();
      by_size[current.size()].emplace_back(g, current);
      std::vector<Vertex> next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j)
        if (g.adjacent(v, candidates[j])) next.push_back(candidates[j]);
      grow(next);
      current.pop_back();
    }
  };
  std::vector<Vertex> all(g.size());
  for (Vertex v = 0; v < g.size(); ++v) all[v] = v;
  grow(all);
  for (auto& group : by_size) std::sort(group.begin(), group.end());
  return by_size;
}

std::size_t max_clique_size(const NumberedGraph& g) { return cliques(g).size() - 1; }

std::vector<Vertex> link(const NumberedGraph& g, const Clique& sigma) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (sigma.contains(v)) continue;
    bool ok = true;
    for (Vertex u : sigma.members())
      if (!g.adjacent(u, v)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> link_relative(const NumberedGraph& g, const Clique& sigma, const Clique& tau) {
  if (!tau.subset_of(sigma)) throw PreconditionError("link_relative: tau is not a subclique of sigma");
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (sigma.contains(v)) continue;
    bool ok = true;
    for (Vertex u : sigma.members())
      if (g.adjacent(u, v) != tau.contains(u)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(v);
  }
  return out;
}

LinkRegularity is_link_regular(const NumberedGraph& g) {
  // Group cliques by N(sigma); inside a group every N(Lk(sigma)) must agree
  // with the group's first clique.
  std::map<NumberMultiset, std::pair<const Clique*, NumberMultiset>> reference;
  const auto all = cliques(g);
  for (const auto& group : all) {
    for (const auto& c : group) {
      NumberMultiset key = number_multiset(g, c.members());
      NumberMultiset lk = number_multiset(g, link(g, c));
      auto [it, inserted] = reference.try_emplace(std::move(key), &c, lk);
      if (!inserted && it->second.second != lk) return {false, std::make_pair(*it->second.first, c)};
    }
  }
  return {};
}

NumberedGraph disjoint_union(const NumberedGraph& a, const NumberedGraph& b) {
  std::vector<std::string> names;
  std::vector<int> numbers;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < a.size(); ++v) {
    names.push_back("0/" + a.name(v));
    numbers.push_back(a.number(v));
  }
  for (Vertex v = 0; v < b.size(); ++v) {
    names.push_back("1/" + b.name(v));
    numbers.push_back(b.number(v));
  }
  for (const auto& e : a.edges()) edges.push_back(e);
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + a.size(), v + a.size());
  return NumberedGraph(std::move(names), std::move(numbers), edges);
}

std::string describe(const NumberedGraph& g, const Clique& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ", ";
    s += g.name(c.members()[i]);
  }
  return s + "}";
}

namespace {

void require_link_regular(const NumberedGraph& g, const char* which) {
  auto r = is_link_regular(g);
  if (!r.regular)
    throw HypothesisError(std::string(which) + " graph is not link-regular: cliques " +
                          describe(g, r.witness->first) + " and " + describe(g, r.witness->second) +
                          " have equal numbers but different links");
}

}  // namespace

bool are_equivalent(const NumberedGraph& a, const NumberedGraph& b) {
  require_link_regular(a, "first");
  require_link_regular(b, "second");
  std::vector<Vertex> va(a.size()), vb(b.size());
  for (Vertex v = 0; v < a.size(); ++v) va[v] = v;
  for (Vertex v = 0; v < b.size(); ++v) vb[v] = v;
  if (number_multiset(a, va) != number_multiset(b, vb)) return false;
  return is_link_regular(disjoint_union(a, b)).regular;
}

LinkProfile link_profile(const NumberedGraph& g) {
  for (Vertex v = 0; v < g.size(); ++v)
    if (g.number(v) != 2)
      throw HypothesisError("link profile needs all vertex numbers equal to 2; '" + g.name(v) + "' has " +
                            std::to_string(g.number(v)));
  require_link_regular(g, "input");
  const auto all = cliques(g);
  LinkProfile p;
  p.d = all.size() - 1;
  p.ell.resize(p.d + 1);
  for (std::size_t k = 0; k <= p.d; ++k) p.ell[k] = static_cast<long>(link(g, all[k].front()).size());
  return p;
}

}  // namespace geogrowth
