#pragma once

// The geodesic automaton of a numbered graph product.  Accept states are the
// powered cliques; reading v raises the power at v by one and keeps only the
// part of the support that commutes with v.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "geogrowth/algebra.hpp"
#include "geogrowth/generators.hpp"
#include "geogrowth/graph.hpp"

namespace geogrowth {

/// Map vertex -> nonzero power, stored sparsely and sorted by vertex.
class PoweredClique {
 public:
  PoweredClique() = default;
  /// Throws PreconditionError if the support is not a clique, a power is
  /// zero, or a power violates the bounds for N(v).
  PoweredClique(const NumberedGraph& g, std::vector<std::pair<Vertex, int>> powers);

  int power(Vertex v) const;
  const std::vector<std::pair<Vertex, int>>& powers() const { return powers_; }
  std::vector<Vertex> support() const;
  std::size_t size() const { return powers_.size(); }
  bool empty() const { return powers_.empty(); }

  friend auto operator<=>(const PoweredClique&, const PoweredClique&) = default;
  friend bool operator==(const PoweredClique&, const PoweredClique&) = default;

 private:
  friend class FsaBuilder;
  std::vector<std::pair<Vertex, int>> powers_;
};

/// floor(N/2): the largest |power| at a vertex (N = 2 only allows +1).
int max_power(int number);

/// "{v^1, u^-2}"; "{}" for the empty powered clique.
std::string notation(const NumberedGraph& g, const PoweredClique& s);

/// Multiset of (power, N(v)) over the support.
using PowerProfile = Multiset<std::pair<int, int>>;

PowerProfile power_profile(const PoweredClique& s, const NumberedGraph& g);
std::string to_string(const PowerProfile& p);

class GeodesicFSA {
 public:
  using State = std::size_t;

  /// Accept states are 0 .. num_accept()-1; reject() == num_accept().
  std::size_t num_accept() const { return states_.size(); }
  State reject() const { return states_.size(); }
  State start() const { return 0; }
  const PoweredClique& state(State s) const { return states_[s]; }
  const std::vector<PoweredClique>& states() const { return states_; }
  const std::vector<Generator>& alphabet() const { return alphabet_; }

  /// Transition on the i-th letter of alphabet().
  State step(State s, std::size_t letter) const { return delta_[s * alphabet_.size() + letter]; }
  /// Transition on a generator; throws PreconditionError if it is not a letter.
  State step(State s, const Generator& g) const;
  std::optional<State> find(const PoweredClique& s) const;

 private:
  friend class FsaBuilder;
  std::vector<PoweredClique> states_;
  std::vector<Generator> alphabet_;
  std::vector<State> delta_;
  std::map<PoweredClique, State> index_;
};

GeodesicFSA build_fsa(const NumberedGraph& g);

struct RunResult {
  bool accepted = true;
  GeodesicFSA::State state = 0;
};

RunResult run(const GeodesicFSA& fsa, std::span<const Generator> word);

/// counts[n] = number of accepted words of length n, n = 0..n_max.
CountTable count_geodesics(const GeodesicFSA& fsa, std::size_t n_max);

/// result[s][n] = number of words of length n accepted when starting from
/// accept state s.  result[start()] equals count_geodesics.
std::vector<CountTable> state_language_counts(const GeodesicFSA& fsa, std::size_t n_max);

/// Transition counts between power profiles.
struct BetaReport {
  /// beta[(P, Q)] = number of letters leading from a P-state to a Q-state,
  /// taken from the first P-state in state order.
  std::map<std::pair<PowerProfile, PowerProfile>, std::size_t> beta;
  /// (P, Q) pairs whose count differs between two P-states.
  std::vector<std::pair<PowerProfile, PowerProfile>> violations;
  bool constant() const { return violations.empty(); }
  std::size_t at(const PowerProfile& p, const PowerProfile& q) const;
};

BetaReport beta_table(const GeodesicFSA& fsa, const NumberedGraph& g);

/// Graphviz rendering, states in index order.  The reject state is drawn only
/// when include_reject is set.
std::string to_dot(const GeodesicFSA& fsa, const NumberedGraph& g, bool include_reject = false);

}  // namespace geogrowth
