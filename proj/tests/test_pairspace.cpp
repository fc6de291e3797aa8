#include <doctest.h>

#include <random>

#include "oneplanar/pairspace.hpp"
#include "oneplanar/search.hpp"
#include "test_support.hpp"

using namespace oneplanar;

namespace {

// Independent pairs by direct enumeration, no ordering assumptions.
int count_independent_pairs(const Graph& g) {
  int k = 0;
  for (EdgeId a = 0; a < g.num_edges(); ++a)
    for (EdgeId b = a + 1; b < g.num_edges(); ++b) {
      const Edge& x = g.edge(a);
      const Edge& y = g.edge(b);
      if (x.u != y.u && x.u != y.v && x.v != y.u && x.v != y.v) ++k;
    }
  return k;
}

PartialSolution prefix(const PairUniverse& u, std::vector<std::uint8_t> bits) {
  return PartialSolution{&u, std::move(bits)};
}

}  // namespace

TEST_CASE("build_universe sizes") {
  CHECK(count_independent_pairs(complete_graph(4)) == 3);
  CHECK(build_universe(complete_graph(4)).size() == 3);
  CHECK(count_independent_pairs(complete_graph(5)) == 15);
  CHECK(build_universe(complete_graph(5)).size() == 15);
  CHECK(build_universe(complete_graph(3)).size() == 0);
  CHECK(count_independent_pairs(complete_bipartite_graph(3, 3)) == 18);
  CHECK(build_universe(complete_bipartite_graph(3, 3)).size() == 18);
}

TEST_CASE("universe ordering and per-edge positions") {
  const Graph k4 = testing::k4_matching_order();
  const PairUniverse u = build_universe(k4);
  REQUIRE(u.size() == 3);
  CHECK(u.at(0) == EdgePair{0, 5});
  CHECK(u.at(1) == EdgePair{1, 3});
  CHECK(u.at(2) == EdgePair{2, 4});
  CHECK_FALSE(u.restricted());

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::random_connected_graph(rng, 8, 14);
    const PairUniverse v = build_universe(g);
    CHECK(v.size() == count_independent_pairs(g));
    CHECK(v.size() <= g.num_edges() * (g.num_edges() - 1) / 2);
    for (int i = 0; i + 1 < v.size(); ++i) CHECK(v.at(i) < v.at(i + 1));
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      int prev = -1;
      for (int pos : v.positions_of(e)) {
        CHECK(pos > prev);
        CHECK(v.at(pos).contains(e));
        prev = pos;
      }
      CHECK(v.last_position(e) == prev);
    }
  }
}

TEST_CASE("restricted universe") {
  const Graph k5 = complete_graph(5);
  const std::vector<EdgeId> e0{0};
  const PairUniverse r = build_restricted_universe(k5, e0);
  CHECK(r.size() == 3);
  CHECK(r.restricted());
  for (const EdgePair& p : r.pairs()) CHECK(p.contains(0));
  CHECK(build_restricted_universe(k5, std::vector<EdgeId>{}).size() == 0);

  const Graph k4 = complete_graph(4);
  CHECK(build_restricted_universe(k4, std::vector<EdgeId>{2}).size() == 1);

  // Subsequence of the full universe.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = testing::random_connected_graph(rng, 9, 16);
    const std::vector<EdgeId> skew{static_cast<EdgeId>(rng() % 16), static_cast<EdgeId>(rng() % 16)};
    const PairUniverse full = build_universe(g);
    const PairUniverse part = build_restricted_universe(g, skew);
    int j = 0;
    int qualifying = 0;
    for (const EdgePair& p : full.pairs()) {
      const bool keep = p.contains(skew[0]) || p.contains(skew[1]);
      qualifying += keep;
      if (keep && j < part.size() && part.at(j) == p) ++j;
    }
    CHECK(j == part.size());
    CHECK(qualifying == part.size());
  }
}

TEST_CASE("crossed_edges") {
  const Graph k4 = testing::k4_matching_order();
  const PairUniverse u = build_universe(k4);
  CHECK(crossed_edges(prefix(u, {0, 0, 0})).empty());
  CHECK(crossed_edges(prefix(u, {1})) == std::vector<EdgeId>{0, 5});
  CHECK(crossed_edges(prefix(u, {1, 1})) == std::vector<EdgeId>{0, 1, 3, 5});
  CHECK(prefix(u, {1, 1}).extends(prefix(u, {1})));
  CHECK_FALSE(prefix(u, {1}).extends(prefix(u, {1, 1})));
  CHECK_FALSE(prefix(u, {0, 1}).extends(prefix(u, {1})));
}

TEST_CASE("saturated_edges conditions") {
  const Graph k4 = testing::k4_matching_order();
  const PairUniverse u = build_universe(k4);
  SUBCASE("full array saturates everything") {
    CHECK(saturated_edges(prefix(u, {0, 0, 0}), {}).size() == 6);
  }
  SUBCASE("crossing plus its kites saturates K4") {
    const auto y = prefix(u, {1});
    const auto kites = find_kite_edges(y, k4);
    CHECK(kites == std::vector<EdgeId>{1, 2, 3, 4});
    CHECK(saturated_edges(y, kites).size() == 6);
    // Without kites only the crossing pair is saturated at cursor 1.
    CHECK(saturated_edges(y, {}) == std::vector<EdgeId>{0, 5});
  }
  SUBCASE("edge in no pair is saturated at cursor 0") {
    const Graph g = build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}});
    const PairUniverse v = build_universe(g);
    CHECK(v.positions_of(0).empty());
    const auto sat = saturated_edges(prefix(v, {}), {});
    CHECK(std::find(sat.begin(), sat.end(), 0) != sat.end());
  }
  SUBCASE("condition (c): every partner crossed") {
    // Three pairwise independent edges; pairs {0,1}, {0,2}, {1,2}.
    const Graph g = build_graph(6, {{2, 3}, {4, 5}, {0, 1}});
    const PairUniverse v = build_universe(g);
    REQUIRE(v.size() == 3);
    CHECK(v.last_position(2) == 2);
    CHECK(saturated_edges(prefix(v, {1}), {}) == std::vector<EdgeId>{0, 1, 2});
    // A pair decided 0 does not saturate anything.
    CHECK(saturated_edges(prefix(v, {0}), {}).empty());
  }
}

TEST_CASE("crossed edges are always saturated") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_connected_graph(rng, 7, 11);
    const PairUniverse u = build_universe(g);
    std::vector<std::uint8_t> bits;
    const int len = u.size() ? static_cast<int>(rng() % (u.size() + 1)) : 0;
    for (int i = 0; i < len; ++i) bits.push_back(rng() % 4 == 0);
    const auto y = prefix(u, bits);
    const auto sat = saturated_edges(y, {});
    for (EdgeId e : crossed_edges(y)) CHECK(std::find(sat.begin(), sat.end(), e) != sat.end());
  }
}

TEST_CASE("saturated edges keep their crossed status in valid extensions") {
  std::mt19937_64 rng(424242);
  int triples = 0;
  while (triples < 600) {
    const int n = 5 + static_cast<int>(rng() % 4);
    const Graph g = testing::random_connected_graph(rng, n, n + static_cast<int>(rng() % 4));
    const PairUniverse u = build_universe(g);
    if (u.size() == 0 || u.size() > 12) continue;
    const bool kites = rng() % 2 == 0;
    const auto full = testing::random_valid_array(rng, g, u, 0.3, kites);
    const int c = static_cast<int>(rng() % (u.size() + 1));
    const int c2 = c + static_cast<int>(rng() % (u.size() - c + 1));
    const auto y = prefix(u, {full.begin(), full.begin() + c});
    const auto z = prefix(u, {full.begin(), full.begin() + c2});
    const auto kite_set = kites ? find_kite_edges(y, g) : std::vector<EdgeId>{};
    const auto before = crossed_edges(y);
    const auto after = crossed_edges(z);
    for (EdgeId e : saturated_edges(y, kite_set)) {
      const bool was = std::binary_search(before.begin(), before.end(), e);
      const bool is = std::binary_search(after.begin(), after.end(), e);
      CHECK(was == is);
    }
    ++triples;
  }
}
