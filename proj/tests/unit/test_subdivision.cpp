#include <doctest.h>

#include <random>

#include "gallai/constructions.hpp"
#include "gallai/errors.hpp"
#include "gallai/subdivision.hpp"
#include "oracles.hpp"

using namespace gallai;

TEST_CASE("patterns with one and two edges") {
  const auto one = patterns_with_edges(1);
  CHECK(one.size() == 2);
  const auto two = patterns_with_edges(2);
  CHECK(two.size() == 7);
  for (const auto& r : two) {
    CHECK(r.edge_count() == 2);
    for (int v = 0; v < r.order; ++v) CHECK(r.degree(v) > 0);
  }
  CHECK(MultigraphPattern::cycle_pattern().is_connected());
  CHECK_FALSE((MultigraphPattern{4, {{0, 1}, {2, 3}}}).is_connected());
  CHECK(MultigraphPattern::complete(4).edge_count() == 6);
  CHECK_THROWS_AS(patterns_with_edges(3), PreconditionError);
}

TEST_CASE("maximum subdivisions of an edge are longest paths") {
  std::mt19937 rng(8);
  for (int i = 0; i < 80; ++i) {
    const Graph g = oracle::random_graph(rng, 3 + i % 6, 0.45);
    const auto truth = oracle::longest_paths(g);
    const auto best = max_R_subdivision(g, MultigraphPattern::path_pattern());
    if (truth.order < 2) {
      CHECK_FALSE(best.has_value());
      continue;
    }
    REQUIRE(best.has_value());
    CHECK(is_subdivision(g, MultigraphPattern::path_pattern(), *best));
    CHECK(best->size() == truth.order);
    std::set<oracle::Mask> sets;
    for (const auto& s : enumerate_max_R_subdivisions(g, MultigraphPattern::path_pattern())) sets.insert(oracle::to_mask(s));
    CHECK(sets == truth.sets);
  }
}

TEST_CASE("maximum subdivisions of a digon or loop are longest cycles") {
  std::mt19937 rng(9);
  for (int i = 0; i < 80; ++i) {
    const Graph g = oracle::random_graph(rng, 3 + i % 6, 0.5);
    const auto truth = oracle::longest_cycles(g);
    for (const auto& r : {MultigraphPattern::cycle_pattern(), MultigraphPattern{1, {{0, 0}}}}) {
      const auto best = max_R_subdivision(g, r);
      CHECK(best.has_value() == (truth.order > 0));
      if (!best) continue;
      CHECK(is_subdivision(g, r, *best));
      CHECK(best->size() == truth.order);
      std::set<oracle::Mask> sets;
      for (const auto& s : enumerate_max_R_subdivisions(g, r)) sets.insert(oracle::to_mask(s));
      CHECK(sets == truth.sets);
    }
  }
}

TEST_CASE("two disjoint edges and a theta") {
  // 2K2 in P6 covers everything; in a star only one edge fits.
  const MultigraphPattern matching{4, {{0, 1}, {2, 3}}};
  CHECK(max_R_subdivision(path_graph(6), matching)->size() == 6);
  CHECK_FALSE(max_R_subdivision(complete_bipartite(1, 5), matching).has_value());
  const MultigraphPattern theta{2, {{0, 1}, {0, 1}, {0, 1}}};
  CHECK(max_R_subdivision(complete_bipartite(2, 3), theta)->size() == 5);
  CHECK_FALSE(max_R_subdivision(cycle_graph(6), theta).has_value());
  // K4 subdivisions in the Petersen graph use all ten vertices.
  const auto k4 = max_R_subdivision(petersen(), MultigraphPattern::complete(4));
  REQUIRE(k4.has_value());
  CHECK(is_subdivision(petersen(), MultigraphPattern::complete(4), *k4));
}

TEST_CASE("subdivision validation rejects bad embeddings") {
  const Graph c4 = cycle_graph(4);
  const MultigraphPattern digon = MultigraphPattern::cycle_pattern();
  // Both parallel edges realised by the same direct edge.
  SubdivisionEmbedding same{{0, 1}, {PathSeq{{0, 1}}, PathSeq{{0, 1}}}};
  CHECK_FALSE(is_subdivision(c4, digon, same));
  SubdivisionEmbedding ok{{0, 1}, {PathSeq{{0, 1}}, PathSeq{{0, 3, 2, 1}}}};
  CHECK(is_subdivision(c4, digon, ok));
  SubdivisionEmbedding shared{{0, 2}, {PathSeq{{0, 1, 2}}, PathSeq{{0, 1, 2}}}};
  CHECK_FALSE(is_subdivision(c4, digon, shared));
}
