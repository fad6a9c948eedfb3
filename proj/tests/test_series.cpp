#include "doctest.h"
#include "geogrowth/automaton.hpp"
#include "geogrowth/oracle.hpp"
#include "geogrowth/series.hpp"
#include "support.hpp"

using namespace geogrowth;
using testing::fixture;

namespace {

RationalFunction series_of(const NumberedGraph& g) { return growth_series(grammar_from_fsa(build_fsa(g))).series; }

}  // namespace

TEST_CASE("grammar of a single vertex") {
  auto two = grammar_from_fsa(build_fsa(fixture("single_n2")));
  CHECK(two.size() == 2);
  CHECK(two.rules.size() == 1);
  CHECK(two.epsilon == std::vector<bool>{true, true});

  auto five = grammar_from_fsa(build_fsa(fixture("single_n5")));
  CHECK(five.size() == 5);
  CHECK(five.rules.size() == 4);
}

TEST_CASE("grammar keeps every accept state reachable from the start") {
  for (const auto& name : testing::fixture_names()) {
    CAPTURE(name);
    auto fsa = build_fsa(fixture(name));
    auto gr = grammar_from_fsa(fsa);
    CHECK(gr.size() == fsa.num_accept());
    std::size_t transitions = 0;
    for (GeodesicFSA::State s = 0; s < fsa.num_accept(); ++s)
      for (std::size_t a = 0; a < fsa.alphabet().size(); ++a) transitions += fsa.step(s, a) != fsa.reject();
    CHECK(gr.rules.size() == transitions);
    CHECK(gr.state_of[gr.start] == fsa.start());
  }
}

TEST_CASE("growth series examples") {
  CHECK(series_of(fixture("single_n2")) == RationalFunction(Polynomial{1, 1}));
  CHECK(series_of(fixture("single_n5")) == RationalFunction(Polynomial{1, 2, 2}));
  CHECK(series_of(fixture("empty3_all2")) == rat_normalize(Polynomial{1, 1}, Polynomial{1, -2}));
  CHECK(series_of(fixture("k4_all2")) == RationalFunction(Polynomial{1, 4, 12, 24, 24}));
  CHECK(series_of(fixture("k2_n3")) == RationalFunction(Polynomial{1, 4, 8}));
  CHECK(series_of(fixture("c5_n3")) == rat_normalize(Polynomial{1, 2, 8}, Polynomial{1, -8, 8}));

  auto square = fixture("square_20_7_2_13");
  auto f = series_of(square);
  CHECK(expand(f, 6) == oracle_counts(square, 6));
  CHECK(expand(f, 6) == CountTable{1, 7, 42, 228, 1186, 6032, 30330});
  CHECK(gcd(f.num(), f.den()).degree() == 0);
}

TEST_CASE("expansion of the solved series equals the automaton count") {
  for (const auto& name : testing::fixture_names()) {
    CAPTURE(name);
    auto fsa = build_fsa(fixture(name));
    auto gs = growth_series(grammar_from_fsa(fsa));
    CHECK(gs.reduced_dimension <= fsa.num_accept());
    CHECK(expand(gs.series, 12) == count_geodesics(fsa, 12));
  }
}

TEST_CASE("growth is at most exponential in the alphabet size") {
  for (const auto& name : testing::fixture_names()) {
    CAPTURE(name);
    auto g = fixture(name);
    auto c = expand(series_of(g), 10);
    const BigInt letters = static_cast<unsigned long>(generators(g).size());
    CHECK(c[0] == 1);
    for (std::size_t n = 1; n < c.size(); ++n) CHECK(c[n] <= letters * c[n - 1]);
  }
}

TEST_CASE("per-variable series count words accepted from each state") {
  for (const char* name : {"k2_n5", "c5_n3", "hexagon_diameters_3_7", "octagon_4_6", "p3_all2"}) {
    CAPTURE(name);
    auto fsa = build_fsa(fixture(name));
    auto gr = grammar_from_fsa(fsa);
    auto gs = growth_series(gr, true);
    REQUIRE(gs.per_variable.size() == gr.size());
    auto counts = state_language_counts(fsa, 9);
    for (std::size_t i = 0; i < gr.size(); ++i) CHECK(expand(gs.per_variable[i], 9) == counts[gr.state_of[i]]);
    CHECK(gs.per_variable[gr.start] == gs.series);
  }
}

TEST_CASE("equivalent graphs have the same series") {
  CHECK(series_of(fixture("two_squares_4_6")) == series_of(fixture("octagon_4_6")));
  CHECK(series_of(fixture("two_5cycles_2_6")) == series_of(fixture("cycle10_2_6")));
  CHECK_FALSE(series_of(fixture("c4_all2")) == series_of(fixture("c5_all2")));
}
