#pragma once

// Regular grammar of the geodesic automaton and the growth-series linear
// system it induces: A_i = [A_i -> ε] + z * sum over rules A_i -> a A_j of A_j.

#include <cstddef>
#include <vector>

#include "geogrowth/algebra.hpp"
#include "geogrowth/automaton.hpp"

namespace geogrowth {

struct GrammarRule {
  std::size_t from = 0;
  Generator terminal;
  std::size_t to = 0;
};

/// Variables are numbered 0..size()-1; variable i stands for accept state
/// state_of[i] of the automaton it came from.
struct RegularGrammar {
  std::vector<GeodesicFSA::State> state_of;
  std::vector<GrammarRule> rules;
  std::vector<bool> epsilon;
  std::size_t start = 0;

  std::size_t size() const { return state_of.size(); }
};

/// One rule per non-reject transition, an ε-rule per accept state; variables
/// unreachable from the start are dropped.
RegularGrammar grammar_from_fsa(const GeodesicFSA& fsa);

struct GrowthSeries {
  RationalFunction series;
  /// Filled only when requested; indexed like RegularGrammar variables.
  std::vector<RationalFunction> per_variable;
  /// Dimension of the reduced system that was actually solved.
  std::size_t reduced_dimension = 0;
};

/// Exact growth series of the start variable (and optionally of every
/// variable).  Throws InternalError if the system turns out singular.
GrowthSeries growth_series(const RegularGrammar& grammar, bool per_variable = false);

}  // namespace geogrowth
