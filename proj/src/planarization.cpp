#include "oneplanar/embed.hpp"

#include <algorithm>
#include <string>

namespace oneplanar {

EdgeId Planarization::star_edge_at(EdgeId e, VertexId v) const {
  const auto& parts = star_edges[static_cast<std::size_t>(e)];
  if (parts.size() == 1) return parts.front();
  return original.edge(e).u == v ? parts[0] : parts[1];
}

Planarization planarize(const Graph& g, std::span<const EdgePair> crossings) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  // role[e] = (dummy index, 0 for first edge of the pair / 1 for second)
  std::vector<std::pair<int, int>> role(static_cast<std::size_t>(m), {-1, -1});
  for (int k = 0; k < static_cast<int>(crossings.size()); ++k) {
    const EdgePair& p = crossings[k];
    for (int side = 0; side < 2; ++side) {
      const EdgeId e = side == 0 ? p.first : p.second;
      if (e < 0 || e >= m) throw Error(ErrorCode::EdgeCrossedTwice, "crossing names unknown edge");
      if (role[e].first >= 0) {
        throw Error(ErrorCode::EdgeCrossedTwice, "edge " + std::to_string(e) + " crossed twice");
      }
      role[e] = {k, side};
    }
    if (p.first == p.second || g.adjacent(p.first, p.second)) {
      throw Error(ErrorCode::AdjacentPair, "edges " + std::to_string(p.first) + " and " +
                                               std::to_string(p.second) + " share an endpoint");
    }
  }

  Planarization p;
  p.original = g;
  p.dummies.resize(crossings.size());
  p.star_edges.assign(static_cast<std::size_t>(m), {});
  std::vector<Edge> star;
  star.reserve(static_cast<std::size_t>(m) + 2 * crossings.size());
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& oe = g.edge(e);
    const auto [k, side] = role[e];
    if (k < 0) {
      p.star_edges[e].push_back(static_cast<EdgeId>(star.size()));
      p.edge_map.push_back(e);
      p.half_slot.push_back(-1);
      star.push_back(oe);
      continue;
    }
    const VertexId d = n + k;
    Dummy& dm = p.dummies[k];
    dm.pair = crossings[k];
    for (int h = 0; h < 2; ++h) {
      const int slot = 2 * side + h;
      const EdgeId s = static_cast<EdgeId>(star.size());
      dm.halves[slot] = s;
      dm.ends[slot] = h == 0 ? oe.u : oe.v;
      p.star_edges[e].push_back(s);
      p.edge_map.push_back(e);
      p.half_slot.push_back(slot);
      star.push_back(h == 0 ? Edge{oe.u, d} : Edge{d, oe.v});
    }
  }
  p.star_graph = build_graph_unchecked(n + static_cast<int>(crossings.size()), std::move(star));
  return p;
}

OnePlanarEmbedding planar_one_planar_embedding(const Graph& g, const RotationSystem& rs) {
  OnePlanarEmbedding emb;
  emb.planarization = planarize(g, {});
  emb.rotation = rs;
  return emb;
}

OnePlanarEmbedding realize(const Planarization& p, const RotationSystem& rs) {
  if (!euler_check(p.star_graph, rs)) {
    throw Error(ErrorCode::NotPlanarRotation, "rotation is not a planar embedding");
  }
  const int n = p.original_vertices();
  std::vector<EdgePair> kept;
  std::vector<int> new_index(p.dummies.size(), -1);
  for (int k = 0; k < static_cast<int>(p.dummies.size()); ++k) {
    const Dummy& dm = p.dummies[k];
    const auto& cyc = rs.order[static_cast<std::size_t>(n + k)];
    const auto it = std::find(cyc.begin(), cyc.end(), dm.halves[0]);
    const EdgeId opposite = cyc[(static_cast<std::size_t>(it - cyc.begin()) + 2) % cyc.size()];
    // Alternating (u1, x2, v1, y2) means a real crossing. Otherwise the halves of
    // each edge are consecutive around d and the two edges can be pulled apart.
    if (opposite == dm.halves[1]) {
      new_index[k] = static_cast<int>(kept.size());
      kept.push_back(dm.pair);
    }
  }

  OnePlanarEmbedding emb;
  emb.planarization = planarize(p.original, kept);
  emb.crossings = kept;
  const Planarization& q = emb.planarization;
  emb.rotation.order.assign(static_cast<std::size_t>(q.star_graph.num_vertices()), {});

  // Each dart at an original vertex is replaced in place by the dart of the
  // same original edge in the new star graph.
  for (VertexId v = 0; v < n; ++v) {
    auto& out = emb.rotation.order[v];
    for (EdgeId s : rs.order[v]) out.push_back(q.star_edge_at(p.edge_map[s], v));
  }
  for (int k = 0; k < static_cast<int>(p.dummies.size()); ++k) {
    if (new_index[k] < 0) continue;
    const Dummy& old_dm = p.dummies[k];
    const Dummy& new_dm = q.dummies[new_index[k]];
    auto& out = emb.rotation.order[static_cast<std::size_t>(n + new_index[k])];
    for (EdgeId s : rs.order[static_cast<std::size_t>(n + k)]) {
      const auto slot = std::find(old_dm.halves.begin(), old_dm.halves.end(), s) - old_dm.halves.begin();
      out.push_back(new_dm.halves[static_cast<std::size_t>(slot)]);
    }
  }
  return emb;
}

}  // namespace oneplanar
