#include <doctest.h>

#include <random>

#include "oneplanar/embed.hpp"
#include "oneplanar/search.hpp"
#include "test_support.hpp"

using namespace oneplanar;

namespace {

Graph glue_k6_pair() {
  std::vector<std::pair<int, int>> list;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) list.emplace_back(u, v);
  for (int u = 5; u < 11; ++u)
    for (int v = u + 1; v < 11; ++v) list.emplace_back(u, v);
  return build_graph(11, list);
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("planarize") {
  const Graph k4 = testing::k4_matching_order();
  const std::vector<EdgePair> cross{{0, 5}};
  const Planarization p = planarize(k4, cross);
  CHECK(p.star_graph.num_vertices() == 5);
  CHECK(p.star_graph.num_edges() == 8);
  CHECK(p.star_graph.degree(4) == 4);
  CHECK(p.dummies[0].ends == std::array<VertexId, 4>{0, 1, 2, 3});
  for (EdgeId s : p.star_graph.incident(4)) CHECK(p.star_graph.edge(s).other(4) < 4);
  CHECK(p.star_edge_at(0, 0) == p.dummies[0].halves[0]);
  CHECK(p.star_edge_at(0, 1) == p.dummies[0].halves[1]);

  const Planarization id = planarize(k4, {});
  CHECK(id.star_graph.num_vertices() == 4);
  for (EdgeId e = 0; e < 6; ++e) CHECK(id.star_graph.edge(e) == k4.edge(e));

  CHECK(code_of([&] { planarize(k4, std::vector<EdgePair>{{0, 5}, {5, 0}}); }) == ErrorCode::EdgeCrossedTwice);
  CHECK(code_of([&] { planarize(k4, std::vector<EdgePair>{{0, 1}}); }) == ErrorCode::AdjacentPair);
}

TEST_CASE("realize keeps alternating dummies and removes touching ones") {
  // Two disjoint edges forced through one dummy: the star graph is K1,4 and
  // any rotation at the dummy is planar.
  const Graph g = build_graph(4, {{0, 1}, {2, 3}});
  const Planarization p = planarize(g, std::vector<EdgePair>{{0, 1}});
  const auto& h = p.dummies[0].halves;
  RotationSystem base{{{h[0]}, {h[1]}, {h[2]}, {h[3]}, {}}};

  RotationSystem alternating = base;
  alternating.order[4] = {h[0], h[2], h[1], h[3]};
  const auto crossing = realize(p, alternating);
  CHECK(count_crossings(crossing) == 1);
  CHECK(validate(g, crossing));

  RotationSystem touching = base;
  touching.order[4] = {h[0], h[1], h[2], h[3]};
  const auto apart = realize(p, touching);
  CHECK(count_crossings(apart) == 0);
  CHECK(euler_check(apart.planarization.star_graph, apart.rotation));
  CHECK(validate(g, apart));

  // e1 halves adjacent the other way round: still not a crossing.
  RotationSystem touching2 = base;
  touching2.order[4] = {h[0], h[2], h[3], h[1]};
  CHECK(count_crossings(realize(p, touching2)) == 0);

  const Graph k4 = complete_graph(4);
  const auto rs = test_planarity(k4).embedding;
  const auto same = realize(planarize(k4, {}), *rs);
  CHECK(same.crossings.empty());
  CHECK(same.rotation == *rs);
}

TEST_CASE("realize rejects non-planar rotations") {
  const Graph k4 = complete_graph(4);
  RotationSystem toroidal{{{0, 2, 1}, {0, 4, 3}, {1, 3, 5}, {2, 5, 4}}};
  CHECK(code_of([&] { realize(planarize(k4, {}), toroidal); }) == ErrorCode::NotPlanarRotation);
}

TEST_CASE("realize over random TRUE solutions") {
  std::mt19937_64 rng(77);
  int realized = 0;
  for (int trial = 0; trial < 4000 && realized < 120; ++trial) {
    const Graph g = testing::random_connected_graph(rng, 7 + static_cast<int>(rng() % 4), 14);
    const PairUniverse u = build_universe(g);
    const auto bits = testing::random_valid_array(rng, g, u, 0.05, false);
    const auto crossings = PartialSolution{&u, bits}.crossing_pairs();
    const Planarization p = planarize(g, crossings);
    const auto rs = planar_embedding(p.star_graph.num_vertices(), p.star_graph.edges());
    if (!rs) continue;
    const auto emb = realize(p, *rs);
    CHECK(validate(g, emb));
    CHECK(count_crossings(emb) <= static_cast<int>(crossings.size()));
    // Contracting gives back g exactly.
    std::vector<int> pieces(static_cast<std::size_t>(g.num_edges()), 0);
    for (EdgeId e : emb.planarization.edge_map) ++pieces[e];
    for (const EdgePair& c : emb.crossings) {
      CHECK(pieces[c.first] == 2);
      CHECK(pieces[c.second] == 2);
    }
    ++realized;
  }
  CHECK(realized >= 100);
}

TEST_CASE("validate catches corrupted certificates") {
  const Graph k4 = testing::k4_matching_order();
  const Planarization p = planarize(k4, std::vector<EdgePair>{{0, 5}});
  const auto rs = planar_embedding(p.star_graph.num_vertices(), p.star_graph.edges());
  REQUIRE(rs);
  const OnePlanarEmbedding good = realize(p, *rs);
  REQUIRE(validate(k4, good));

  SUBCASE("swapped darts break Euler") {
    // Find a vertex where reversing two darts changes the face count.
    bool broke = false;
    for (VertexId v = 0; v < good.planarization.star_graph.num_vertices() && !broke; ++v) {
      OnePlanarEmbedding bad = good;
      auto& cyc = bad.rotation.order[v];
      if (cyc.size() < 3) continue;
      std::swap(cyc[0], cyc[1]);
      if (!euler_check(bad.planarization.star_graph, bad.rotation)) {
        CHECK_FALSE(validate(k4, bad));
        broke = true;
      }
    }
    CHECK(broke);
  }
  SUBCASE("crossing list that does not match the dummies") {
    OnePlanarEmbedding bad = good;
    bad.crossings = {{1, 3}};
    CHECK_FALSE(validate(k4, bad));
  }
  SUBCASE("rotation missing a dart") {
    OnePlanarEmbedding bad = good;
    bad.rotation.order[0].pop_back();
    CHECK_FALSE(validate(k4, bad));
  }
  SUBCASE("wrong graph") {
    CHECK_FALSE(validate(build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {1, 2}}), good));
  }
  SUBCASE("zero-crossing embedding of a planar graph") {
    const Graph c = complete_graph(4);
    CHECK(validate(c, planar_one_planar_embedding(c, *test_planarity(c).embedding)));
  }
}

TEST_CASE("K6 certificate from test_block validates") {
  const Graph k6 = complete_graph(6);
  const BlockResult r = test_block(k6, SearchConfig{});
  REQUIRE(r.verdict == Verdict::OnePlanar);
  CHECK(validate(k6, *r.embedding));
}

TEST_CASE("merge_blocks") {
  SUBCASE("two K6 sharing a vertex") {
    const Graph g = glue_k6_pair();
    const auto dec = biconnected_components(g);
    std::vector<OnePlanarEmbedding> parts;
    int sum = 0;
    for (const Block& b : dec.blocks) {
      auto r = test_block(b.graph, SearchConfig{});
      REQUIRE(r.verdict == Verdict::OnePlanar);
      sum += count_crossings(*r.embedding);
      parts.push_back(*r.embedding);
    }
    const auto merged = merge_blocks(g, dec, parts);
    CHECK(validate(g, merged));
    CHECK(count_crossings(merged) == sum);
  }
  SUBCASE("single block is the identity") {
    const Graph k5 = complete_graph(5);
    const auto dec = biconnected_components(k5);
    auto r = test_block(dec.blocks[0].graph, SearchConfig{});
    const std::vector<OnePlanarEmbedding> parts{*r.embedding};
    const auto merged = merge_blocks(k5, dec, parts);
    CHECK(merged.crossings == r.embedding->crossings);
    CHECK(merged.rotation == r.embedding->rotation);
  }
  SUBCASE("star of three bridges") {
    const Graph star = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    const auto dec = biconnected_components(star);
    REQUIRE(dec.blocks.size() == 3);
    std::vector<OnePlanarEmbedding> parts;
    for (const Block& b : dec.blocks) parts.push_back(*test_block(b.graph, SearchConfig{}).embedding);
    const auto merged = merge_blocks(star, dec, parts);
    CHECK(count_crossings(merged) == 0);
    CHECK(validate(star, merged));
  }
  SUBCASE("invalid block input") {
    const Graph k5 = complete_graph(5);
    const auto dec = biconnected_components(k5);
    auto r = test_block(dec.blocks[0].graph, SearchConfig{});
    r.embedding->rotation.order[0].pop_back();
    const std::vector<OnePlanarEmbedding> parts{*r.embedding};
    CHECK(code_of([&] { merge_blocks(k5, dec, parts); }) == ErrorCode::InvalidBlockEmbedding);
  }
}

TEST_CASE("merging random block structures keeps certificates valid") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::random_connected_graph(rng, 12, 17);
    const auto dec = biconnected_components(g);
    std::vector<OnePlanarEmbedding> parts;
    int sum = 0;
    bool ok = true;
    for (const Block& b : dec.blocks) {
      auto r = test_block(b.graph, SearchConfig{});
      if (r.verdict != Verdict::OnePlanar) {
        ok = false;
        break;
      }
      sum += count_crossings(*r.embedding);
      parts.push_back(*r.embedding);
    }
    if (!ok) continue;
    const auto merged = merge_blocks(g, dec, parts);
    CHECK(validate(g, merged));
    CHECK(count_crossings(merged) == sum);
  }
}

TEST_CASE("embedding text format round-trips") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = testing::random_connected_graph(rng, 8, 16);
    const auto r = test_block(g, SearchConfig{});
    if (r.verdict != Verdict::OnePlanar) continue;
    const std::string text = write_embedding(*r.embedding);
    const OnePlanarEmbedding back = parse_embedding(text, g);
    CHECK(write_embedding(back) == text);
    CHECK(back.rotation == r.embedding->rotation);
    CHECK(validate(g, back));
  }
}

TEST_CASE("embedding text format for K5") {
  const Graph k5 = complete_graph(5);
  const auto r = test_block(k5, SearchConfig{});
  const std::string text = write_embedding(*r.embedding);
  CHECK(text.find("crossings:\n") != std::string::npos);
  CHECK(text.find("rotation:\n") != std::string::npos);
  CHECK(text.find("dummies:\nc0: ") != std::string::npos);
  CHECK(text.find("5: c0.") != std::string::npos);

  CHECK(code_of([&] { parse_embedding("rotation:\n0: 99\n", k5); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse_embedding("0 1\n", k5); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse_embedding("crossings:\n0 9\ndummies:\n", k5); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse_embedding("crossings:\n0 1\ndummies:\nc0: 0 1\n", k5); }) == ErrorCode::ParseError);
}
