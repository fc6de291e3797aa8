#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "oneplanar/graph.hpp"
#include "test_support.hpp"

using namespace oneplanar;

TEST_CASE("build_graph keeps input order and builds adjacency") {
  const Graph k4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}});
  CHECK(k4.num_vertices() == 4);
  CHECK(k4.num_edges() == 6);
  CHECK(k4.edge(3) == Edge{3, 0});
  for (VertexId v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);
  CHECK(k4.find_edge(2, 0) == 4);
  CHECK_FALSE(k4.adjacent(0, 2));
  CHECK(k4.adjacent(0, 1));

  const Graph k7 = complete_graph(7);
  CHECK(k7.num_vertices() == 7);
  CHECK(k7.num_edges() == 21);
}

TEST_CASE("build_graph rejects non-simple input") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::ParseError;
  };
  CHECK(code_of([] { build_graph(3, {{0, 0}}); }) == ErrorCode::SelfLoop);
  CHECK(code_of([] { build_graph(3, {{0, 1}, {1, 0}}); }) == ErrorCode::ParallelEdge);
  CHECK(code_of([] { build_graph(3, {{0, 3}}); }) == ErrorCode::VertexOutOfRange);
  CHECK(code_of([] { build_graph(3, {{-1, 2}}); }) == ErrorCode::VertexOutOfRange);
}

TEST_CASE("adjacency lists hold every edge exactly twice") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::random_connected_graph(rng, 3 + trial % 12, 20);
    std::map<EdgeId, int> seen;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
      for (EdgeId e : g.incident(v)) {
        CHECK(g.edge(e).touches(v));
        ++seen[e];
      }
    CHECK(static_cast<int>(seen.size()) == g.num_edges());
    for (const auto& [e, c] : seen) CHECK(c == 2);
  }
}

namespace {

Graph two_k6_sharing_vertex() {
  std::vector<std::pair<int, int>> list;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) list.emplace_back(u, v);
  const int map[6] = {5, 6, 7, 8, 9, 10};  // second copy reuses vertex 5
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) list.emplace_back(map[u], map[v]);
  return build_graph(11, list);
}

}  // namespace

TEST_CASE("biconnected_components on textbook shapes") {
  SUBCASE("two K6 sharing a vertex") {
    const auto dec = biconnected_components(two_k6_sharing_vertex());
    REQUIRE(dec.blocks.size() == 2);
    CHECK(dec.cut_vertices == std::vector<VertexId>{5});
    CHECK(dec.blocks[0].graph.num_edges() == 15);
    CHECK(dec.blocks[1].graph.num_edges() == 15);
    CHECK(dec.blocks[0].to_original_edge.front() == 0);
    CHECK(dec.block_tree.size() == 2);
  }
  SUBCASE("C5 is one block") {
    const Graph c5 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    const auto dec = biconnected_components(c5);
    REQUIRE(dec.blocks.size() == 1);
    CHECK(dec.blocks[0].graph.num_edges() == 5);
    CHECK(dec.blocks[0].graph.num_vertices() == 5);
    CHECK(dec.cut_vertices.empty());
  }
  SUBCASE("path 0-1-2 gives two bridges") {
    const auto dec = biconnected_components(build_graph(3, {{0, 1}, {1, 2}}));
    REQUIRE(dec.blocks.size() == 2);
    CHECK(dec.blocks[0].is_bridge());
    CHECK(dec.blocks[1].is_bridge());
    CHECK(dec.cut_vertices == std::vector<VertexId>{1});
  }
}

TEST_CASE("block decomposition invariants on random graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 14);
    const Graph g = testing::random_connected_graph(rng, n, n - 1 + static_cast<int>(rng() % 10));
    const auto dec = biconnected_components(g);

    std::vector<int> owner(static_cast<std::size_t>(g.num_edges()), 0);
    std::set<std::pair<VertexId, VertexId>> rebuilt;
    int prev_first = -1;
    for (const Block& b : dec.blocks) {
      CHECK(b.to_original_edge.front() > prev_first);
      prev_first = b.to_original_edge.front();
      for (EdgeId be = 0; be < b.graph.num_edges(); ++be) {
        const EdgeId e = b.to_original_edge[be];
        ++owner[e];
        const Edge& le = b.graph.edge(be);
        // Block edges keep the original orientation.
        CHECK(b.to_original_vertex[le.u] == g.edge(e).u);
        CHECK(b.to_original_vertex[le.v] == g.edge(e).v);
        rebuilt.insert({g.edge(e).u, g.edge(e).v});
      }
      // Each block is a bridge or has no cut vertex of its own.
      if (!b.is_bridge()) {
        for (VertexId skip = 0; skip < b.graph.num_vertices(); ++skip) {
          std::vector<std::pair<int, int>> rest;
          for (const Edge& e : b.graph.edges())
            if (!e.touches(skip)) rest.emplace_back(e.u < skip ? e.u : e.u - 1, e.v < skip ? e.v : e.v - 1);
          CHECK(count_components(build_graph(b.graph.num_vertices() - 1, rest)) == 1);
        }
      }
    }
    for (int c : owner) CHECK(c == 1);
    CHECK(static_cast<int>(rebuilt.size()) == g.num_edges());

    // Block tree of a connected graph: blocks + cut vertices - 1 incidences, and connected.
    CHECK(dec.block_tree.size() == dec.blocks.size() + dec.cut_vertices.size() - 1);

    const auto again = biconnected_components(g);
    REQUIRE(again.blocks.size() == dec.blocks.size());
    for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
      CHECK(again.blocks[i].to_original_edge == dec.blocks[i].to_original_edge);
      CHECK(again.blocks[i].to_original_vertex == dec.blocks[i].to_original_vertex);
    }
  }
}

TEST_CASE("components are labelled by smallest vertex") {
  const Graph g = build_graph(5, {{3, 4}, {0, 1}});
  CHECK(component_labels(g) == std::vector<int>{0, 0, 1, 2, 2});
  CHECK(count_components(g) == 3);
}
