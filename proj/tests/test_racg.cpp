#include "doctest.h"
#include "geogrowth/automaton.hpp"
#include "geogrowth/errors.hpp"
#include "geogrowth/racg.hpp"
#include "geogrowth/series.hpp"
#include "support.hpp"

using namespace geogrowth;
using testing::fixture;

namespace {

BigInt binom(std::size_t n, std::size_t k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::vector<std::vector<long>> sample_ells() {
  return {{1, 0}, {2, 0}, {5, 0}, {2, 1, 0}, {4, 3, 2, 1, 0}, {4, 2, 0}, {6, 4, 2, 0}, {8, 6, 4, 2, 0},
          {10, 3, 0}, {6, 2, 0}, {5, 2, 0}, {7, 5, 3, 1, 0}};
}

std::vector<NumberedGraph> link_regular_graphs() {
  return {testing::complete(4), testing::complete(2), testing::complete(1), testing::cycle(4), testing::cycle(5),
          testing::cycle(6), testing::empty_graph(3), testing::empty_graph(5), testing::octahedron(),
          testing::sixteen_cell(), testing::k33(), testing::petersen(), testing::constant(4, {{0, 1}, {2, 3}}, 2)};
}

}  // namespace

TEST_CASE("profile validation") {
  CHECK_NOTHROW(make_link_profile({3, 0}));
  CHECK_THROWS_AS(make_link_profile({}), PreconditionError);
  CHECK_THROWS_AS(make_link_profile({3, 1}), PreconditionError);
  CHECK_THROWS_AS(make_link_profile({3, -1, 0}), PreconditionError);
  LinkProfile bad = make_link_profile({4, 2, 0});
  bad.d = 3;
  CHECK_THROWS_AS(validate(bad), PreconditionError);
}

TEST_CASE("N table examples") {
  for (long k = 1; k <= 6; ++k) {
    auto t = n_table_closed(make_link_profile({k, 0}));
    CHECK(t[1][0] == k - 1);
    CHECK(t[0][0] == 1);
    CHECK(t[1][1] == 1);
  }
  auto k4 = n_table_closed(make_link_profile({4, 3, 2, 1, 0}));
  CHECK(k4[2][0] == 0);
  CHECK(k4[1][0] == 0);
  for (std::size_t m = 0; m <= 4; ++m) CHECK(k4[m][m] == 1);
}

TEST_CASE("N table closed form matches the recurrence") {
  for (const auto& ell : sample_ells()) {
    CAPTURE(ell.size());
    auto p = make_link_profile(ell);
    CHECK(n_table_closed(p) == n_table_recurrence(p));
  }
}

TEST_CASE("coefficient tables") {
  for (const auto& ell : sample_ells()) {
    auto c = racg_coefficients(make_link_profile(ell));
    BigInt a = 1;
    for (std::size_t m = 0; m <= c.d; ++m) {
      CHECK(c.a[m] == a);
      a *= ell[m];
      CHECK(c.m_table[m][m] == 1);
      for (std::size_t k = 0; k <= m; ++k) CHECK(c.b_table[m][k] == binom(m, k) * c.n_table[m][k]);
    }
  }
}

TEST_CASE("growth examples") {
  CHECK(racg_growth(make_link_profile({1, 0})) == RationalFunction(Polynomial{1, 1}));
  for (long k = 2; k <= 6; ++k) {
    CAPTURE(k);
    auto f = racg_growth(make_link_profile({k, 0}));
    CHECK(f == rat_normalize(Polynomial{1, 1}, Polynomial{1, -(k - 1)}));
    auto c = expand(f, 8);
    BigInt expected = k;
    for (std::size_t n = 1; n <= 8; ++n, expected *= k - 1) CHECK(c[n] == expected);
  }
  CHECK(racg_growth(make_link_profile({4, 3, 2, 1, 0})) == RationalFunction(Polynomial{1, 4, 12, 24, 24}));
}

TEST_CASE("p/q recurrences give the same series") {
  for (const auto& ell : sample_ells()) {
    auto p = make_link_profile(ell);
    CHECK(racg_growth_via_pq(p) == racg_growth(p));
    auto pq = pq_polynomials(p);
    CHECK(pq.p.size() == p.d + 2);
    CHECK(pq.q.size() == p.d + 2);
  }
}

TEST_CASE("d = 4 formula") {
  for (const auto& ell : std::vector<std::vector<long>>{{4, 3, 2, 1, 0}, {8, 6, 4, 2, 0}, {7, 5, 3, 1, 0}}) {
    auto p = make_link_profile(ell);
    auto f = corollary_d4(p);
    CHECK(f == racg_growth(p));
    CHECK(f.num().coeff(0) == 1);
    CHECK(f.den().coeff(0) == 1);
  }
  CHECK_THROWS_AS(corollary_d4(make_link_profile({6, 4, 2, 0})), PreconditionError);
  CHECK_THROWS_AS(corollary_d4(make_link_profile({4, 3, 2, 1, 1})), PreconditionError);
}

TEST_CASE("RACG formula agrees with the automaton") {
  for (const auto& g : link_regular_graphs()) {
    auto p = link_profile(g);
    CAPTURE(p.d);
    auto f = racg_growth(p);
    CHECK(f == growth_series(grammar_from_fsa(build_fsa(g))).series);
  }
  CHECK(racg_growth(link_profile(fixture("c4_all2"))) ==
        growth_series(grammar_from_fsa(build_fsa(fixture("c4_all2")))).series);
}

// G_m = sum over ordered m-cliques of the series of words accepted from the
// clique with every power 1.
TEST_CASE("clique sums satisfy the linear system") {
  constexpr std::size_t order = 9;
  for (const auto& g : link_regular_graphs()) {
    auto p = link_profile(g);
    auto c = racg_coefficients(p);
    auto fsa = build_fsa(g);
    auto lang = state_language_counts(fsa, order);
    const auto groups = cliques(g);

    std::vector<CountTable> G(p.d + 2, CountTable(order + 1, 0));
    BigInt fact = 1;
    for (std::size_t m = 0; m <= p.d; ++m) {
      if (m) fact *= static_cast<unsigned long>(m);
      for (const auto& sigma : groups[m]) {
        std::vector<std::pair<Vertex, int>> powers;
        for (Vertex v : sigma.members()) powers.emplace_back(v, 1);
        auto s = fsa.find(PoweredClique(g, powers));
        REQUIRE(s);
        for (std::size_t n = 0; n <= order; ++n) G[m][n] += fact * lang[*s][n];
      }
    }

    for (std::size_t m = 0; m <= p.d; ++m) {
      CAPTURE(m);
      for (std::size_t n = 0; n <= order; ++n) {
        BigInt rhs = n == 0 ? c.a[m] : BigInt(0);
        if (n > 0)
          for (std::size_t k = 0; k <= m; ++k) rhs += c.b_table[m][k] * G[k + 1][n - 1];
        CHECK(G[m][n] == rhs);
      }
    }
  }
}
