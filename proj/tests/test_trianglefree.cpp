#include "doctest.h"
#include "geogrowth/automaton.hpp"
#include "geogrowth/errors.hpp"
#include "geogrowth/oracle.hpp"
#include "geogrowth/series.hpp"
#include "geogrowth/trianglefree.hpp"
#include "support.hpp"

using namespace geogrowth;
using testing::fixture;

namespace {

using Reason = TfHypothesisError::Reason;

Reason refusal(const NumberedGraph& g) {
  try {
    build_tf_system(g);
  } catch (const TfHypothesisError& e) {
    return e.reason();
  }
  FAIL("graph accepted");
  return Reason::empty_graph;
}

RationalFunction automaton_series(const NumberedGraph& g) {
  return growth_series(grammar_from_fsa(build_fsa(g))).series;
}

std::vector<std::pair<std::string, NumberedGraph>> tf_graphs() {
  std::vector<std::pair<std::string, NumberedGraph>> out;
  for (int n = 3; n <= 7; ++n) out.emplace_back("K2 N=" + std::to_string(n), testing::complete(2, n));
  for (int n = 3; n <= 5; ++n) out.emplace_back("C5 N=" + std::to_string(n), testing::cycle(5, n));
  out.emplace_back("C6 N=3", testing::cycle(6, 3));
  out.emplace_back("C4 N=4", testing::cycle(4, 4));
  out.emplace_back("K33 N=3", testing::k33(3));
  out.emplace_back("Petersen N=3", testing::petersen(3));
  out.emplace_back("Petersen N=4", testing::petersen(4));
  out.emplace_back("empty 3 N=3", testing::empty_graph(3, 3));
  out.emplace_back("single N=6", fixture("single_n6"));
  return out;
}

}  // namespace

TEST_CASE("system shape") {
  auto k2 = build_tf_system(fixture("k2_n3"));
  CHECK(k2.size() == 3);
  CHECK(k2.n == 2);
  CHECK(k2.L == 1);
  CHECK(k2.K == 1);
  CHECK(build_tf_system(fixture("c5_n3")).size() == 3);

  auto c5 = build_tf_system(testing::cycle(5, 5));
  CHECK(c5.size() == 6);
  CHECK(c5.pair(1, 2) == c5.pair(2, 1));
  CHECK(c5.name(c5.whole()) == "G");
  CHECK(c5.name(c5.single(2)) == "G_2");
  CHECK(c5.name(c5.pair(2, 1)) == "G_{1,2}");
  for (std::size_t i = 0; i < c5.size(); ++i) CHECK(c5.equations[i].lhs == i);
}

TEST_CASE("hypothesis failures") {
  CHECK(refusal(testing::empty_graph(0, 3)) == Reason::empty_graph);
  CHECK(refusal(fixture("square_20_7_2_13")) == Reason::non_constant_number);
  CHECK(refusal(fixture("c4_all2")) == Reason::number_two);
  CHECK(refusal(fixture("single_n2")) == Reason::number_two);
  CHECK(refusal(testing::constant(3, {{0, 1}, {1, 2}}, 3)) == Reason::not_regular);
  CHECK(refusal(testing::complete(3, 3)) == Reason::triangle);
  CHECK_THROWS_AS(build_tf_system(testing::complete(3, 3)), HypothesisError);
}

TEST_CASE("K2 with N = 3") {
  auto sys = build_tf_system(fixture("k2_n3"));
  auto u = solve_tf_unknowns(sys);
  CHECK(u[sys.pair(1, 1)] == RationalFunction(Polynomial{2}));
  CHECK(u[sys.single(1)] == RationalFunction(Polynomial{2, 4}));
  CHECK(u[sys.whole()] == RationalFunction(Polynomial{1, 4, 8}));
  CHECK(solve_tf(sys) == u[0]);
}

TEST_CASE("triangle-free system agrees with the automaton") {
  for (const auto& [name, g] : tf_graphs()) {
    CAPTURE(name);
    CHECK(solve_tf(build_tf_system(g)) == automaton_series(g));
  }
}

TEST_CASE("automaton unknowns satisfy every equation") {
  constexpr std::size_t order = 10;
  for (const auto& [name, g] : tf_graphs()) {
    CAPTURE(name);
    auto sys = build_tf_system(g);
    auto fsa = build_fsa(g);
    auto values = tf_unknowns_from_fsa(sys, g, fsa, order);
    REQUIRE(values.size() == sys.size());
    CHECK(values[0] == count_geodesics(fsa, order));
    auto solved = solve_tf_unknowns(sys);
    for (std::size_t i = 0; i < sys.size(); ++i) {
      CAPTURE(sys.name(i));
      CHECK(expand(solved[i], order) == values[i]);
      CHECK(tf_residuals(sys, values, order)[i] == CountTable(order + 1, 0));
    }
  }
}

TEST_CASE("residuals detect a wrong value") {
  auto g = fixture("c5_n3");
  auto sys = build_tf_system(g);
  auto values = tf_unknowns_from_fsa(sys, g, build_fsa(g), 6);
  values[sys.single(1)][3] += 1;
  auto res = tf_residuals(sys, values, 6);
  bool nonzero = false;
  for (const auto& r : res)
    for (const auto& c : r) nonzero = nonzero || c != 0;
  CHECK(nonzero);
}

TEST_CASE("expansion matches the oracle") {
  for (const char* name : {"k2_n3", "k2_n4", "k2_n5", "c5_n3", "single_n7"}) {
    CAPTURE(name);
    auto g = fixture(name);
    CHECK(expand(solve_tf(build_tf_system(g)), 6) == oracle_counts(g, 6));
  }
}
