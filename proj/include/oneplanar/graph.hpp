#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "oneplanar/error.hpp"

namespace oneplanar {

using VertexId = int;
using EdgeId = int;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  VertexId other(VertexId w) const { return w == u ? v : u; }
  bool touches(VertexId w) const { return w == u || w == v; }
  bool shares_endpoint(const Edge& e) const { return touches(e.u) || touches(e.v); }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph with dense vertex ids 0..n-1 and dense edge ids
/// 0..m-1. Immutable once built; construct through build_graph().
class Graph {
 public:
  Graph() = default;

  int num_vertices() const { return static_cast<int>(incident_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const EdgeId> incident(VertexId v) const { return incident_[static_cast<std::size_t>(v)]; }
  int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }

  /// True when the two edges share an endpoint (they can never cross).
  bool adjacent(EdgeId a, EdgeId b) const { return edge(a).shares_endpoint(edge(b)); }
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

 private:
  friend Graph build_graph(int n, std::span<const std::pair<int, int>> edge_list);
  friend Graph build_graph_unchecked(int n, std::vector<Edge> edges);

  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

/// Edge ids follow input order; incident lists are sorted by edge id.
/// Throws Error{SelfLoop | ParallelEdge | VertexOutOfRange}.
Graph build_graph(int n, std::span<const std::pair<int, int>> edge_list);
Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edge_list);

/// Skips validation; for internally generated edge lists that are simple by construction.
Graph build_graph_unchecked(int n, std::vector<Edge> edges);

Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);

/// Number of connected components, counting isolated vertices.
int count_components(const Graph& g);
/// Component index per vertex, numbered in order of smallest vertex id.
std::vector<int> component_labels(const Graph& g);

struct Block {
  Graph graph;
  std::vector<VertexId> to_original_vertex;
  std::vector<EdgeId> to_original_edge;

  bool is_bridge() const { return graph.num_edges() == 1; }
};

/// Blocks are ordered by their smallest original edge id. Inside a block,
/// vertices are numbered by increasing original id and edges keep the
/// relative order (and orientation) of the original edge list.
struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<VertexId> cut_vertices;  // sorted
  // Bipartite block/cut-vertex incidences as (block index, cut vertex).
  std::vector<std::pair<int, VertexId>> block_tree;
};

/// Works on disconnected inputs too (one block forest per component);
/// isolated vertices belong to no block.
BlockDecomposition biconnected_components(const Graph& g);

}  // namespace oneplanar
