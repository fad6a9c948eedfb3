#include "geogrowth/racg.hpp"

#include <map>
#include <string>
#include <utility>

#include "geogrowth/errors.hpp"

namespace geogrowth {

namespace {

BigInt binomial(std::size_t n, std::size_t k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

TriangularTable empty_table(std::size_t d) {
  TriangularTable t(d + 1);
  for (std::size_t m = 0; m <= d; ++m) t[m].resize(m + 1);
  return t;
}

}  // namespace

void validate(const LinkProfile& p) {
  if (p.ell.empty() || p.ell.size() != p.d + 1)
    throw PreconditionError("link profile must have d + 1 entries");
  for (long x : p.ell)
    if (x < 0) throw PreconditionError("link profile entries must be nonnegative");
  if (p.ell[p.d] != 0) throw PreconditionError("ell_d must be 0: maximal cliques have empty links");
}

LinkProfile make_link_profile(std::vector<long> ell) {
  LinkProfile p;
  p.d = ell.empty() ? 0 : ell.size() - 1;
  p.ell = std::move(ell);
  validate(p);
  return p;
}

TriangularTable n_table_closed(const LinkProfile& p) {
  validate(p);
  const auto& ell = p.ell;
  TriangularTable t = empty_table(p.d);
  for (std::size_t m = 0; m <= p.d; ++m) {
    for (std::size_t k = 0; k <= m; ++k) {
      if (k == m) {
        t[m][k] = 1;
      } else if (k + 1 == m) {
        t[m][k] = ell[m - 1] - ell[m] - 1;
      } else {
        BigInt prod = 1;
        for (std::size_t j = k + 1; j < m; ++j) prod *= ell[j];
        BigInt sum = 0;
        for (std::size_t j = k; j <= m; ++j) {
          BigInt term = binomial(m - k, j - k) * ell[j];
          if ((j - k) % 2) sum -= term;
          else sum += term;
        }
        t[m][k] = prod * sum;
      }
    }
  }
  return t;
}

TriangularTable n_table_recurrence(const LinkProfile& p) {
  validate(p);
  const auto& ell = p.ell;
  TriangularTable t = empty_table(p.d);
  for (std::size_t m = 0; m <= p.d; ++m) {
    t[m][m] = 1;
    if (m >= 1) t[m][m - 1] = ell[m - 1] - ell[m] - 1;
    // k < m - 1, filled from k = m - 2 downwards.
    for (std::size_t k = m >= 2 ? m - 1 : 0; k-- > 0;)
      t[m][k] = ell[m - 1] * t[m - 1][k] - ell[k + 1] * t[m][k + 1];
  }
  return t;
}

RacgCoefficients racg_coefficients(const LinkProfile& p) {
  validate(p);
  RacgCoefficients c;
  c.d = p.d;
  c.profile = p;
  c.n_table = n_table_closed(p);
  c.b_table = empty_table(p.d);
  for (std::size_t m = 0; m <= p.d; ++m)
    for (std::size_t k = 0; k <= m; ++k) c.b_table[m][k] = binomial(m, k) * c.n_table[m][k];

  c.a.resize(p.d + 1);
  c.a[0] = 1;
  for (std::size_t m = 1; m <= p.d; ++m) c.a[m] = c.a[m - 1] * p.ell[m - 1];

  // chains(w, lo): sum over chains lo <= s1 < t1 <= ... <= tn <= d of total
  // weight w; the empty chain gives 1 when w = 0.
  std::map<std::pair<std::size_t, std::size_t>, BigInt> memo;
  auto chains = [&](auto&& self, std::size_t w, std::size_t lo) -> BigInt {
    if (w == 0) return 1;
    if (auto it = memo.find({w, lo}); it != memo.end()) return it->second;
    BigInt total = 0;
    for (std::size_t s = lo; s < p.d; ++s)
      for (std::size_t t = s + 1; t <= p.d && t - s <= w; ++t)
        total -= c.b_table[t][s] * self(self, w - (t - s), t);
    memo.emplace(std::make_pair(w, lo), total);
    return total;
  };
  c.m_table = empty_table(p.d);
  for (std::size_t i = 0; i <= p.d; ++i)
    for (std::size_t j = 0; j <= i; ++j) c.m_table[i][j] = chains(chains, i - j, j);
  return c;
}

RationalFunction racg_growth(const LinkProfile& p) {
  const RacgCoefficients c = racg_coefficients(p);
  std::vector<BigInt> num(p.d + 1), den(p.d + 1);
  for (std::size_t i = 0; i <= p.d; ++i) {
    for (std::size_t j = 0; j <= i; ++j) num[i] += c.a[j] * c.m_table[i][j];
    den[i] = c.m_table[i][0];
  }
  return rat_normalize(Polynomial(std::move(num)), Polynomial(std::move(den)));
}

PqPolynomials pq_polynomials(const LinkProfile& p) {
  const RacgCoefficients c = racg_coefficients(p);
  PqPolynomials out;
  out.p.resize(p.d + 2);
  out.q.resize(p.d + 2);
  out.p[1] = Polynomial{1};
  out.q[1] = Polynomial{1};
  for (std::size_t m = 1; m <= p.d; ++m) {
    Polynomial pn = out.p[m];
    Polynomial qn = out.q[m] + Polynomial::monomial(c.a[m], m);
    for (std::size_t k = 0; k < m; ++k) {
      pn -= out.p[k + 1].shifted(m - k) * c.b_table[m][k];
      qn -= out.q[k + 1].shifted(m - k) * c.b_table[m][k];
    }
    out.p[m + 1] = std::move(pn);
    out.q[m + 1] = std::move(qn);
  }
  return out;
}

RationalFunction racg_growth_via_pq(const LinkProfile& p) {
  PqPolynomials pq = pq_polynomials(p);
  return rat_normalize(std::move(pq.q[p.d + 1]), std::move(pq.p[p.d + 1]));
}

RationalFunction corollary_d4(const LinkProfile& p) {
  validate(p);
  if (p.d != 4) throw PreconditionError("corollary_d4 needs maximum clique size 4, got " + std::to_string(p.d));
  const BigInt l0 = p.ell[0], l1 = p.ell[1], l2 = p.ell[2], l3 = p.ell[3];

  Polynomial q(std::vector<BigInt>{
      1,
      -l1 - l2 - l3 + 10,
      l1 * l2 + l1 * l3 + l2 * l3 - 7 * l1 - 5 * l2 - 3 * l3 + 35,
      -l1 * l2 * l3 + 4 * l1 * l2 + l2 * l3 - 12 * l1 - 4 * l2 - 2 * l3 + 50,
      24,
  });
  // The z^3 constant is +50, matching the general closed form.
  Polynomial den(std::vector<BigInt>{
      1,
      -l0 - l1 - l2 - l3 + 10,
      l0 * l1 + l0 * l2 + l1 * l2 + l0 * l3 + l1 * l3 + l2 * l3 - 9 * l0 - 7 * l1 - 5 * l2 - 3 * l3 + 35,
      -l0 * l1 * l2 - l0 * l1 * l3 - l0 * l2 * l3 - l1 * l2 * l3 + 7 * l0 * l1 + 4 * l0 * l2 + 4 * l1 * l2 +
          2 * l0 * l3 + l2 * l3 - 26 * l0 - 12 * l1 - 4 * l2 - 2 * l3 + 50,
      l0 * l1 * l2 * l3 - 4 * l0 * l1 * l2 + 12 * l0 * l1 - 24 * l0 + 24,
  });
  return rat_normalize(std::move(q), std::move(den));
}

}  // namespace geogrowth
