#include "geogrowth/series.hpp"

#include <cstdint>
#include <deque>

#include "geogrowth/errors.hpp"

namespace geogrowth {

RegularGrammar grammar_from_fsa(const GeodesicFSA& fsa) {
  const std::size_t none = fsa.num_accept();
  std::vector<std::size_t> var_of(fsa.num_accept(), none);
  std::vector<bool> seen(fsa.num_accept(), false);
  std::deque<GeodesicFSA::State> queue{fsa.start()};
  seen[fsa.start()] = true;
  while (!queue.empty()) {
    auto s = queue.front();
    queue.pop_front();
    for (std::size_t a = 0; a < fsa.alphabet().size(); ++a) {
      auto t = fsa.step(s, a);
      if (t != fsa.reject() && !seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
    }
  }

  RegularGrammar g;
  for (std::size_t s = 0; s < fsa.num_accept(); ++s)
    if (seen[s]) {
      var_of[s] = g.state_of.size();
      g.state_of.push_back(s);
    }
  g.epsilon.assign(g.state_of.size(), true);
  g.start = var_of[fsa.start()];
  for (std::size_t i = 0; i < g.state_of.size(); ++i) {
    const auto s = g.state_of[i];
    for (std::size_t a = 0; a < fsa.alphabet().size(); ++a) {
      auto t = fsa.step(s, a);
      if (t != fsa.reject()) g.rules.push_back({i, fsa.alphabet()[a], var_of[t]});
    }
  }
  return g;
}

namespace {

// The Krylov space of the ε-indicator e under the rule-count matrix T is
// T-invariant: with W = [e, Te, ..., T^{r-1}e] and T^r e = sum_k c_k T^k e we
// have T W = W C for the companion matrix C, so (I - zT) W y = e reduces to
// (I - zC) y = e_0 and the variable series are A = W y.
//
// The c_k are the coefficients of a monic factor of the characteristic
// polynomial of T, hence integers.  They are found modulo word-size primes,
// lifted by CRT and accepted once the relation holds exactly over Z.
// Independence of w_0..w_{r-1} mod p implies independence over Q.
struct KrylovBasis {
  std::vector<std::vector<BigInt>> columns;  // w_0 .. w_{r-1}
  std::vector<BigInt> relation;              // w_r = sum relation[k] w_k
};

using u64 = std::uint64_t;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }

u64 inv_mod(u64 a, u64 p) {
  u64 r = 1, e = p - 2;
  for (; e; e >>= 1, a = mul_mod(a, a, p))
    if (e & 1) r = mul_mod(r, a, p);
  return r;
}

// Relation of the Krylov sequence mod p; its length is the dimension mod p.
std::vector<u64> krylov_relation_mod(const RegularGrammar& gr, u64 p) {
  const std::size_t n = gr.size();
  struct Row {
    std::size_t pivot;
    std::vector<u64> v;     // pivot entry 1
    std::vector<u64> expr;  // v = sum expr[k] w_k
  };
  std::vector<Row> rows;
  std::vector<u64> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = gr.epsilon[i] ? 1 : 0;

  for (;;) {
    const std::size_t k = rows.size();
    std::vector<u64> v = w;
    std::vector<u64> expr(k + 1, 0);
    expr[k] = 1;
    for (const auto& row : rows) {
      const u64 f = v[row.pivot];
      if (f == 0) continue;
      const u64 g = p - f;
      for (std::size_t i = row.pivot; i < n; ++i)
        if (row.v[i]) v[i] = (v[i] + mul_mod(g, row.v[i], p)) % p;
      for (std::size_t j = 0; j < row.expr.size(); ++j)
        if (row.expr[j]) expr[j] = (expr[j] + mul_mod(g, row.expr[j], p)) % p;
    }
    std::size_t pivot = 0;
    while (pivot < n && v[pivot] == 0) ++pivot;
    if (pivot == n) {
      std::vector<u64> rel(k);
      for (std::size_t j = 0; j < k; ++j) rel[j] = (p - expr[j]) % p;
      return rel;
    }
    const u64 inv = inv_mod(v[pivot], p);
    for (auto& x : v) x = mul_mod(x, inv, p);
    for (auto& x : expr) x = mul_mod(x, inv, p);
    rows.push_back({pivot, std::move(v), std::move(expr)});

    std::vector<u64> next(n, 0);
    for (const auto& rule : gr.rules) next[rule.from] = (next[rule.from] + w[rule.to]) % p;
    w = std::move(next);
  }
}

std::vector<BigInt> apply_rules(const RegularGrammar& gr, const std::vector<BigInt>& w) {
  std::vector<BigInt> next(gr.size());
  for (const auto& rule : gr.rules) next[rule.from] += w[rule.to];
  return next;
}

KrylovBasis krylov_basis(const RegularGrammar& gr) {
  const std::size_t n = gr.size();
  KrylovBasis out;
  std::vector<std::vector<BigInt>> powers;  // w_0 .. w_r, extended on demand
  powers.emplace_back(n);
  for (std::size_t i = 0; i < n; ++i) powers[0][i] = gr.epsilon[i] ? 1 : 0;

  std::size_t r = 0;
  std::vector<BigInt> residues;  // relation mod modulus, in [0, modulus)
  BigInt modulus = 1;
  std::vector<BigInt> previous;  // symmetric lift after the last prime
  BigInt prime = BigInt(1) << 62;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    const u64 p = prime.get_ui();
    const auto rel = krylov_relation_mod(gr, p);
    if (rel.size() < r) continue;  // p divides a minor: unlucky prime
    if (rel.size() > r) {
      r = rel.size();
      residues.assign(r, 0);
      modulus = 1;
      previous.clear();
    }
    // CRT step: x = residues + modulus * t with x = rel (mod p).
    const u64 m_inv = inv_mod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
    for (std::size_t j = 0; j < r; ++j) {
      const u64 x_mod_p = mpz_fdiv_ui(residues[j].get_mpz_t(), p);
      const u64 t = mul_mod((rel[j] + p - x_mod_p) % p, m_inv, p);
      residues[j] += modulus * BigInt(static_cast<unsigned long>(t));
    }
    modulus *= BigInt(static_cast<unsigned long>(p));
    const BigInt half = modulus / 2;
    std::vector<BigInt> lifted(r);
    for (std::size_t j = 0; j < r; ++j) lifted[j] = residues[j] > half ? BigInt(residues[j] - modulus) : residues[j];
    const bool stable = lifted == previous;
    previous = lifted;
    if (!stable) continue;  // check exactly only once a prime leaves the lift unchanged

    while (powers.size() <= r) powers.push_back(apply_rules(gr, powers.back()));
    bool holds = true;
    for (std::size_t i = 0; i < n && holds; ++i) {
      BigInt sum = 0;
      for (std::size_t j = 0; j < r; ++j)
        if (lifted[j] != 0) sum += lifted[j] * powers[j][i];
      holds = sum == powers[r][i];
    }
    if (holds) {
      out.columns.assign(powers.begin(), powers.begin() + static_cast<long>(r));
      out.relation = std::move(lifted);
      return out;
    }
  }
  throw InternalError("Krylov relation did not stabilise");
}

}  // namespace

GrowthSeries growth_series(const RegularGrammar& grammar, bool per_variable) {
  if (grammar.size() == 0) throw PreconditionError("grammar has no variables");
  const KrylovBasis kb = krylov_basis(grammar);
  const std::size_t r = kb.columns.size();

  // (I - zC) y = e_0 for the companion matrix C: substituting each equation
  // into the next gives y_k = (z^k D + z^{r-1} sum_{j<=k} rho_j z^{k-j+1}) / D
  // with D = 1 - sum_j rho_j z^{r-j}.
  const auto& rho = kb.relation;
  std::vector<BigInt> d(r + 1);
  d[0] = 1;
  for (std::size_t j = 0; j < r; ++j) d[r - j] -= rho[j];
  const Polynomial common(d);

  std::vector<Polynomial> scaled;
  scaled.reserve(r);
  for (std::size_t k = 0; k < r; ++k) {
    std::vector<BigInt> c(r + k + 1);
    for (std::size_t i = 0; i <= r; ++i) c[i + k] += d[i];
    for (std::size_t j = 0; j <= k; ++j) c[r - 1 + k - j + 1] += rho[j];
    scaled.emplace_back(std::move(c));
  }

  auto combine = [&](std::size_t var) {
    Polynomial num;
    for (std::size_t k = 0; k < r; ++k)
      if (kb.columns[k][var] != 0) num += scaled[k] * kb.columns[k][var];
    return rat_normalize(std::move(num), common);
  };

  GrowthSeries out;
  out.reduced_dimension = r;
  out.series = combine(grammar.start);
  if (per_variable) {
    out.per_variable.reserve(grammar.size());
    for (std::size_t i = 0; i < grammar.size(); ++i) out.per_variable.push_back(combine(i));
  }
  return out;
}

}  // namespace geogrowth
