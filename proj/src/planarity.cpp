#include "oneplanar/planarity.hpp"

#include <algorithm>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

namespace oneplanar {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(int n, std::span<const Edge> edges) {
  BoostGraph bg(static_cast<std::size_t>(n));
  int index = 0;
  for (const Edge& e : edges) boost::add_edge(e.u, e.v, index++, bg);
  return bg;
}

// Darts are numbered 2e (leaving edge(e).u) and 2e+1 (leaving edge(e).v).
// position[d] is the slot of edge e inside the rotation of the dart's tail.
struct DartIndex {
  std::vector<int> position;
};

DartIndex index_rotation(const Graph& g, const RotationSystem& rs) {
  if (static_cast<int>(rs.order.size()) != g.num_vertices()) {
    throw Error(ErrorCode::InconsistentRotation, "rotation covers " +
                                                     std::to_string(rs.order.size()) +
                                                     " vertices, graph has " +
                                                     std::to_string(g.num_vertices()));
  }
  DartIndex idx;
  idx.position.assign(2 * static_cast<std::size_t>(g.num_edges()), -1);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto& cyc = rs.order[v];
    if (static_cast<int>(cyc.size()) != g.degree(v)) {
      throw Error(ErrorCode::InconsistentRotation,
                  "vertex " + std::to_string(v) + " rotation has wrong length");
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const EdgeId e = cyc[i];
      if (e < 0 || e >= g.num_edges() || !g.edge(e).touches(v)) {
        throw Error(ErrorCode::InconsistentRotation,
                    "vertex " + std::to_string(v) + " lists foreign edge " + std::to_string(e));
      }
      const int dart = 2 * e + (g.edge(e).u == v ? 0 : 1);
      if (idx.position[dart] >= 0) {
        throw Error(ErrorCode::InconsistentRotation,
                    "edge " + std::to_string(e) + " repeated at vertex " + std::to_string(v));
      }
      idx.position[dart] = static_cast<int>(i);
    }
  }
  return idx;
}

}  // namespace

bool is_planar(int n, std::span<const Edge> edges) {
  // A simple graph with more than 3n-6 edges is never planar.
  if (n >= 3 && static_cast<long>(edges.size()) > 3L * n - 6) return false;
  if (edges.size() < 9) {
    // Smallest nonplanar graphs (K5, K3,3) have at least 9 edges.
    return true;
  }
  BoostGraph bg = to_boost(n, edges);
  return boost::boyer_myrvold_planarity_test(bg);
}

std::optional<RotationSystem> planar_embedding(int n, std::span<const Edge> edges) {
  if (n >= 3 && static_cast<long>(edges.size()) > 3L * n - 6) return std::nullopt;
  BoostGraph bg = to_boost(n, edges);
  std::vector<std::vector<BoostEdge>> storage(static_cast<std::size_t>(n));
  auto embedding = boost::make_iterator_property_map(storage.begin(),
                                                     boost::get(boost::vertex_index, bg));
  if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                           boost::boyer_myrvold_params::embedding = embedding)) {
    return std::nullopt;
  }
  RotationSystem rs;
  rs.order.resize(static_cast<std::size_t>(n));
  const auto edge_index = boost::get(boost::edge_index, bg);
  for (int v = 0; v < n; ++v) {
    rs.order[v].reserve(storage[v].size());
    for (const BoostEdge& be : storage[v]) rs.order[v].push_back(boost::get(edge_index, be));
  }
  return rs;
}

PlanarityVerdict test_planarity(const Graph& g) {
  PlanarityVerdict verdict;
  verdict.embedding = planar_embedding(g.num_vertices(), g.edges());
  verdict.planar = verdict.embedding.has_value();
  return verdict;
}

int count_faces(const Graph& g, const RotationSystem& rs) {
  const DartIndex idx = index_rotation(g, rs);
  const std::size_t darts = idx.position.size();
  std::vector<char> seen(darts, 0);
  int faces = 0;
  for (std::size_t start = 0; start < darts; ++start) {
    if (seen[start]) continue;
    ++faces;
    std::size_t d = start;
    while (!seen[d]) {
      seen[d] = 1;
      const EdgeId e = static_cast<EdgeId>(d / 2);
      const VertexId head = (d % 2 == 0) ? g.edge(e).v : g.edge(e).u;
      const std::size_t reverse = d ^ 1U;
      const auto& cyc = rs.order[head];
      const EdgeId next = cyc[(static_cast<std::size_t>(idx.position[reverse]) + 1) % cyc.size()];
      d = 2 * static_cast<std::size_t>(next) + (g.edge(next).u == head ? 0 : 1);
    }
  }
  return faces;
}

bool euler_check(const Graph& g, const RotationSystem& rs) {
  const int faces = count_faces(g, rs);
  const auto label = component_labels(g);
  int with_edges = 0;
  int covered_vertices = 0;
  std::vector<char> counted(label.empty() ? 0 : static_cast<std::size_t>(
                                                    *std::max_element(label.begin(), label.end()) + 1),
                            0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) continue;
    ++covered_vertices;
    if (!counted[label[v]]) {
      counted[label[v]] = 1;
      ++with_edges;
    }
  }
  // Faces are traced per component, so each component contributes its own outer face.
  return covered_vertices - g.num_edges() + faces == 2 * with_edges;
}

}  // namespace oneplanar
