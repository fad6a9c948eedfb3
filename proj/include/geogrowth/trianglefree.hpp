#pragma once

// Growth series of graph products over L-regular triangle-free graphs with a
// constant vertex number N >= 3, from a linear system in the unknowns
//
//   G        the whole series
//   G_k      sum over vertices v of the series of words starting in state {v^k}
//   G_{k,l}  sum over directed edges (u, v) of the series from state {u^k, v^l}
//
// with 1 <= k <= l <= K = floor(N/2).  Pair unknowns are stored under the
// sorted key; G_{K+1} and G_{K+1,l} vanish.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "geogrowth/algebra.hpp"
#include "geogrowth/automaton.hpp"
#include "geogrowth/errors.hpp"
#include "geogrowth/graph.hpp"

namespace geogrowth {

class TfHypothesisError : public HypothesisError {
 public:
  enum class Reason { empty_graph, non_constant_number, number_two, not_regular, triangle };
  TfHypothesisError(Reason r, const std::string& what) : HypothesisError(what), reason_(r) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

/// unknown[lhs] = constant + z * sum coeff * unknown[index]
struct TfEquation {
  std::size_t lhs = 0;
  BigInt constant;
  std::vector<std::pair<std::size_t, BigInt>> terms;
};

struct TfSystem {
  std::size_t n = 0;
  std::size_t L = 0;
  int N = 0;
  int K = 0;
  std::vector<TfEquation> equations;  // equations[i].lhs == i

  std::size_t size() const { return equations.size(); }
  /// Index 0.
  std::size_t whole() const { return 0; }
  /// Index of G_k, 1 <= k <= K.
  std::size_t single(int k) const;
  /// Index of G_{k,l} for either order of k, l.
  std::size_t pair(int k, int l) const;
  /// "G", "G_2", "G_{1,2}".
  std::string name(std::size_t index) const;
};

/// Throws TfHypothesisError (reasons checked in enum order) when g is outside
/// the hypotheses.
TfSystem build_tf_system(const NumberedGraph& g);

/// G(z).  Throws InternalError if the system is singular.
RationalFunction solve_tf(const TfSystem& system);
/// Every unknown, indexed like the equations.
std::vector<RationalFunction> solve_tf_unknowns(const TfSystem& system);

/// Truncated series of every unknown read off the automaton's per-state
/// language counts, through z^order.
std::vector<CountTable> tf_unknowns_from_fsa(const TfSystem& system, const NumberedGraph& g,
                                             const GeodesicFSA& fsa, std::size_t order);

/// lhs - rhs of every equation through z^order, for the given truncated
/// unknown values.  All zero means the system is satisfied to that order.
std::vector<CountTable> tf_residuals(const TfSystem& system, const std::vector<CountTable>& values,
                                     std::size_t order);

}  // namespace geogrowth
