#include "oneplanar/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

namespace oneplanar {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::ParallelEdge: return "ParallelEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::InconsistentRotation: return "InconsistentRotation";
    case ErrorCode::EdgeCrossedTwice: return "EdgeCrossedTwice";
    case ErrorCode::AdjacentPair: return "AdjacentPair";
    case ErrorCode::NotPlanarRotation: return "NotPlanarRotation";
    case ErrorCode::InvalidBlockEmbedding: return "InvalidBlockEmbedding";
    case ErrorCode::UniverseTooLarge: return "UniverseTooLarge";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) return std::nullopt;
  const VertexId probe = degree(u) <= degree(v) ? u : v;
  const VertexId target = probe == u ? v : u;
  for (EdgeId e : incident(probe)) {
    if (edge(e).other(probe) == target && edge(e).u != edge(e).v) return e;
  }
  return std::nullopt;
}

Graph build_graph_unchecked(int n, std::vector<Edge> edges) {
  Graph g;
  g.edges_ = std::move(edges);
  g.incident_.assign(static_cast<std::size_t>(n), {});
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edges_.size()); ++e) {
    g.incident_[static_cast<std::size_t>(g.edges_[e].u)].push_back(e);
    g.incident_[static_cast<std::size_t>(g.edges_[e].v)].push_back(e);
  }
  return g;
}

Graph build_graph(int n, std::span<const std::pair<int, int>> edge_list) {
  if (n < 0) throw Error(ErrorCode::VertexOutOfRange, "negative vertex count");
  std::vector<Edge> edges;
  edges.reserve(edge_list.size());
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edge_list.size() * 2);
  for (const auto& [u, v] : edge_list) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                      std::to_string(n));
    }
    if (u == v) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
    const auto lo = static_cast<std::uint64_t>(std::min(u, v));
    const auto hi = static_cast<std::uint64_t>(std::max(u, v));
    if (!seen.insert((lo << 32) | hi).second) {
      throw Error(ErrorCode::ParallelEdge,
                  "parallel edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    edges.push_back({u, v});
  }
  return build_graph_unchecked(n, std::move(edges));
}

Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edge_list) {
  return build_graph(n, std::span<const std::pair<int, int>>(edge_list.begin(), edge_list.size()));
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return build_graph_unchecked(n, std::move(edges));
}

Graph complete_bipartite_graph(int a, int b) {
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
  return build_graph_unchecked(a + b, std::move(edges));
}

std::vector<int> component_labels(const Graph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.num_vertices()), -1);
  std::vector<VertexId> stack;
  int next = 0;
  for (VertexId s = 0; s < g.num_vertices(); ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(v)) {
        const VertexId w = g.edge(e).other(v);
        if (label[w] < 0) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

int count_components(const Graph& g) {
  const auto labels = component_labels(g);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

namespace {

// Hopcroft-Tarjan with an explicit edge stack; iterative so deep paths do not
// exhaust the call stack.
std::vector<std::vector<EdgeId>> block_edge_sets(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<EdgeId> edge_stack;
  std::vector<std::vector<EdgeId>> blocks;

  struct Frame {
    VertexId v;
    EdgeId parent_edge;
    std::size_t next;
  };
  std::vector<Frame> frames;
  int time = 0;

  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    disc[root] = low[root] = time++;
    frames.push_back({root, -1, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto inc = g.incident(f.v);
      if (f.next < inc.size()) {
        const EdgeId e = inc[f.next++];
        if (e == f.parent_edge) continue;
        const VertexId w = g.edge(e).other(f.v);
        if (disc[w] < 0) {
          edge_stack.push_back(e);
          disc[w] = low[w] = time++;
          frames.push_back({w, e, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.push_back(e);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const VertexId child = f.v;
      const EdgeId via = f.parent_edge;
      frames.pop_back();
      if (frames.empty()) break;
      const VertexId parent = frames.back().v;
      low[parent] = std::min(low[parent], low[child]);
      if (low[child] >= disc[parent]) {
        std::vector<EdgeId> block;
        while (true) {
          const EdgeId top = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(top);
          if (top == via) break;
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
      }
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return blocks;
}

}  // namespace

BlockDecomposition biconnected_components(const Graph& g) {
  BlockDecomposition dec;
  const auto edge_sets = block_edge_sets(g);
  std::vector<int> blocks_at(static_cast<std::size_t>(g.num_vertices()), 0);

  std::vector<int> local(static_cast<std::size_t>(g.num_vertices()), -1);
  for (const auto& edge_ids : edge_sets) {
    Block block;
    for (EdgeId e : edge_ids) {
      block.to_original_vertex.push_back(g.edge(e).u);
      block.to_original_vertex.push_back(g.edge(e).v);
    }
    auto& verts = block.to_original_vertex;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (std::size_t i = 0; i < verts.size(); ++i) {
      local[verts[i]] = static_cast<int>(i);
      ++blocks_at[verts[i]];
    }
    std::vector<Edge> edges;
    edges.reserve(edge_ids.size());
    for (EdgeId e : edge_ids) edges.push_back({local[g.edge(e).u], local[g.edge(e).v]});
    block.to_original_edge = edge_ids;
    block.graph = build_graph_unchecked(static_cast<int>(verts.size()), std::move(edges));
    dec.blocks.push_back(std::move(block));
  }

  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (blocks_at[v] > 1) dec.cut_vertices.push_back(v);
  for (int b = 0; b < static_cast<int>(dec.blocks.size()); ++b) {
    for (VertexId v : dec.blocks[b].to_original_vertex)
      if (blocks_at[v] > 1) dec.block_tree.emplace_back(b, v);
  }
  return dec;
}

}  // namespace oneplanar
