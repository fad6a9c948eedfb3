#pragma once

// Brute-force geodesic test by shuffling: a word fails to be geodesic exactly
// when some rearrangement by swaps of adjacent commuting letters contains a
// run of letters on one vertex that is not geodesic in the cyclic group
// Z/N(v).  Written against the graph and generator vocabulary only.

#include <cstddef>
#include <set>

#include "geogrowth/algebra.hpp"
#include "geogrowth/generators.hpp"
#include "geogrowth/graph.hpp"

namespace geogrowth {

struct OracleLimits {
  std::size_t max_word_length = 8;
  std::size_t closure_cap = 1'000'000;
  std::size_t max_n = 7;
  /// Upper bound on |S|^n_max for oracle_counts.
  std::size_t word_budget = 100'000'000;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Every word reachable from w by swapping adjacent letters on adjacent
/// vertices, w included.  Throws ResourceError past the length limit or the
/// closure cap.
std::set<Word> shuffle_closure(const NumberedGraph& g, const Word& w, const OracleLimits& limits = {});

bool is_geodesic(const NumberedGraph& g, const Word& w, const OracleLimits& limits = {});

/// counts[n] = number of geodesic words of length n, for n = 0..n_max.
CountTable oracle_counts(const NumberedGraph& g, std::size_t n_max, const OracleLimits& limits = {});

}  // namespace geogrowth
