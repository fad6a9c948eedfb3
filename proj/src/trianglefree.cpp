#include "geogrowth/trianglefree.hpp"

#include <algorithm>

namespace geogrowth {

std::size_t TfSystem::single(int k) const {
  if (k < 1 || k > K) throw PreconditionError("single index out of range: " + std::to_string(k));
  return static_cast<std::size_t>(k);
}

std::size_t TfSystem::pair(int k, int l) const {
  if (k > l) std::swap(k, l);
  if (k < 1 || l > K) throw PreconditionError("pair index out of range");
  // Pairs (k, l) with k <= l, listed row by row.
  std::size_t offset = 1 + static_cast<std::size_t>(K);
  for (int a = 1; a < k; ++a) offset += static_cast<std::size_t>(K - a + 1);
  return offset + static_cast<std::size_t>(l - k);
}

std::string TfSystem::name(std::size_t index) const {
  if (index == 0) return "G";
  if (index <= static_cast<std::size_t>(K)) return "G_" + std::to_string(index);
  for (int k = 1; k <= K; ++k)
    for (int l = k; l <= K; ++l)
      if (pair(k, l) == index) return "G_{" + std::to_string(k) + "," + std::to_string(l) + "}";
  throw PreconditionError("unknown index out of range");
}

TfSystem build_tf_system(const NumberedGraph& g) {
  using R = TfHypothesisError::Reason;
  if (g.size() == 0) throw TfHypothesisError(R::empty_graph, "triangle-free method: graph has no vertices");
  const int N = g.number(0);
  for (Vertex v = 0; v < g.size(); ++v)
    if (g.number(v) != N)
      throw TfHypothesisError(R::non_constant_number, "triangle-free method: vertex numbers are not constant (" +
                                                          g.name(0) + " has " + std::to_string(N) + ", " +
                                                          g.name(v) + " has " + std::to_string(g.number(v)) + ")");
  if (N == 2)
    throw TfHypothesisError(R::number_two, "triangle-free method: needs N >= 3; use the RACG method for N = 2");
  const std::size_t L = g.neighbors(0).size();
  for (Vertex v = 0; v < g.size(); ++v)
    if (g.neighbors(v).size() != L)
      throw TfHypothesisError(R::not_regular, "triangle-free method: graph is not regular (" + g.name(0) + " has degree " +
                                                  std::to_string(L) + ", " + g.name(v) + " has degree " +
                                                  std::to_string(g.neighbors(v).size()) + ")");
  for (auto [u, v] : g.edges())
    for (Vertex w : g.neighbors(u))
      if (w != v && g.adjacent(v, w))
        throw TfHypothesisError(R::triangle, "triangle-free method: graph has a triangle {" + g.name(u) + ", " +
                                                 g.name(v) + ", " + g.name(w) + "}");

  TfSystem s;
  s.n = g.size();
  s.L = L;
  s.N = N;
  s.K = N / 2;
  const int K = s.K;
  const BigInt n = static_cast<unsigned long>(s.n);
  const BigInt l = static_cast<unsigned long>(L);
  const std::size_t count = 1 + static_cast<std::size_t>(K) + static_cast<std::size_t>(K * (K + 1) / 2);
  s.equations.resize(count);
  for (std::size_t i = 0; i < count; ++i) s.equations[i].lhs = i;

  auto add = [](TfEquation& e, std::size_t idx, const BigInt& c) {
    if (c == 0) return;
    for (auto& [j, x] : e.terms)
      if (j == idx) {
        x += c;
        return;
      }
    e.terms.emplace_back(idx, c);
  };

  TfEquation& top = s.equations[0];
  top.constant = 1;
  add(top, s.single(1), 2);

  for (int k = 1; k <= K; ++k) {
    TfEquation& e = s.equations[s.single(k)];
    e.constant = n;
    if (k + 1 <= K) add(e, s.single(k + 1), 1);
    add(e, s.pair(1, k), 2);
    add(e, s.single(1), 2 * (n - l - 1));
  }

  for (int k = 1; k <= K; ++k)
    for (int m = k; m <= K; ++m) {
      TfEquation& e = s.equations[s.pair(k, m)];
      e.constant = n * l;
      if (k + 1 <= K) add(e, s.pair(k + 1, m), 1);
      if (m + 1 <= K) add(e, s.pair(k, m + 1), 1);
      add(e, s.pair(1, k), 2 * (l - 1));
      add(e, s.pair(1, m), 2 * (l - 1));
      add(e, s.single(1), 2 * l * (n - 2 * l));
    }
  for (auto& e : s.equations) std::sort(e.terms.begin(), e.terms.end());
  return s;
}

std::vector<RationalFunction> solve_tf_unknowns(const TfSystem& s) {
  const std::size_t n = s.size();
  PolyMatrix m(n, std::vector<Polynomial>(n));
  std::vector<Polynomial> rhs(n);
  for (const auto& e : s.equations) {
    m[e.lhs][e.lhs] += Polynomial{1};
    for (const auto& [j, c] : e.terms) m[e.lhs][j] -= Polynomial::monomial(c, 1);
    rhs[e.lhs] = Polynomial::constant(e.constant);
  }
  try {
    return solve_linear(m, rhs);
  } catch (const SingularMatrixError&) {
    throw InternalError("triangle-free system is singular");
  }
}

RationalFunction solve_tf(const TfSystem& s) { return solve_tf_unknowns(s)[s.whole()]; }

std::vector<CountTable> tf_unknowns_from_fsa(const TfSystem& s, const NumberedGraph& g, const GeodesicFSA& fsa,
                                             std::size_t order) {
  const auto lang = state_language_counts(fsa, order);
  std::vector<CountTable> out(s.size(), CountTable(order + 1));
  auto accumulate = [&](std::size_t idx, const PoweredClique& state) {
    auto st = fsa.find(state);
    if (!st) throw InternalError("powered clique missing from automaton: " + notation(g, state));
    for (std::size_t i = 0; i <= order; ++i) out[idx][i] += lang[*st][i];
  };
  accumulate(s.whole(), PoweredClique{});
  for (int k = 1; k <= s.K; ++k)
    for (Vertex v = 0; v < g.size(); ++v) accumulate(s.single(k), PoweredClique(g, {{v, k}}));
  for (int k = 1; k <= s.K; ++k)
    for (int m = k; m <= s.K; ++m)
      for (Vertex u = 0; u < g.size(); ++u)
        for (Vertex v : g.neighbors(u)) {
          std::vector<std::pair<Vertex, int>> p{{u, k}, {v, m}};
          std::sort(p.begin(), p.end());
          accumulate(s.pair(k, m), PoweredClique(g, std::move(p)));
        }
  return out;
}

std::vector<CountTable> tf_residuals(const TfSystem& s, const std::vector<CountTable>& values, std::size_t order) {
  if (values.size() != s.size()) throw PreconditionError("one value per unknown expected");
  for (const auto& v : values)
    if (v.size() < order + 1) throw PreconditionError("values are truncated below the requested order");
  std::vector<CountTable> out;
  out.reserve(s.size());
  for (const auto& e : s.equations) {
    CountTable r(order + 1);
    for (std::size_t i = 0; i <= order; ++i) r[i] = values[e.lhs][i];
    r[0] -= e.constant;
    for (const auto& [j, c] : e.terms)
      for (std::size_t i = 1; i <= order; ++i) r[i] -= c * values[j][i - 1];
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace geogrowth
