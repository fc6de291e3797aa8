#include <algorithm>
#include <map>
#include <set>

#include "oneplanar/embed.hpp"

// Everything here is re-derived from the raw star graph and rotation; nothing
// from planarize()/realize() or the planarity module is reused.

namespace oneplanar {

namespace {

bool crossings_well_formed(const Graph& g, const std::vector<EdgePair>& crossings) {
  std::vector<int> times(static_cast<std::size_t>(g.num_edges()), 0);
  for (const EdgePair& p : crossings) {
    for (EdgeId e : {p.first, p.second}) {
      if (e < 0 || e >= g.num_edges()) return false;
      if (++times[e] > 1) return false;
    }
    const Edge& a = g.edge(p.first);
    const Edge& b = g.edge(p.second);
    if (p.first == p.second || a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) return false;
  }
  return true;
}

// Star edges of each original edge must contract back to exactly that edge.
bool contracts_to_original(const Graph& g, const OnePlanarEmbedding& emb) {
  const Planarization& p = emb.planarization;
  const Graph& star = p.star_graph;
  const int n = g.num_vertices();
  const int dummies = static_cast<int>(emb.crossings.size());
  if (star.num_vertices() != n + dummies) return false;
  if (static_cast<int>(p.edge_map.size()) != star.num_edges()) return false;
  if (star.num_edges() != g.num_edges() + 2 * dummies) return false;

  std::set<EdgeId> crossed;
  std::map<EdgeId, int> dummy_of;
  for (int k = 0; k < dummies; ++k) {
    crossed.insert(emb.crossings[k].first);
    crossed.insert(emb.crossings[k].second);
    dummy_of[emb.crossings[k].first] = k;
    dummy_of[emb.crossings[k].second] = k;
  }

  std::vector<std::vector<EdgeId>> pieces(static_cast<std::size_t>(g.num_edges()));
  for (EdgeId s = 0; s < star.num_edges(); ++s) {
    const EdgeId e = p.edge_map[s];
    if (e < 0 || e >= g.num_edges()) return false;
    pieces[e].push_back(s);
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& oe = g.edge(e);
    if (!crossed.count(e)) {
      if (pieces[e].size() != 1) return false;
      const Edge& se = star.edge(pieces[e][0]);
      if (std::minmax(se.u, se.v) != std::minmax(oe.u, oe.v)) return false;
      continue;
    }
    if (pieces[e].size() != 2) return false;
    const VertexId d = n + dummy_of[e];
    std::multiset<VertexId> far_ends;
    for (EdgeId s : pieces[e]) {
      const Edge& se = star.edge(s);
      if (!se.touches(d) || se.u == se.v) return false;
      far_ends.insert(se.other(d));
    }
    if (far_ends != std::multiset<VertexId>{oe.u, oe.v}) return false;
  }

  for (VertexId d = n; d < n + dummies; ++d) {
    if (star.degree(d) != 4) return false;
    for (EdgeId s : star.incident(d))
      if (star.edge(s).other(d) >= n) return false;
  }
  return true;
}

bool rotation_consistent(const Graph& star, const RotationSystem& rs) {
  if (static_cast<int>(rs.order.size()) != star.num_vertices()) return false;
  for (VertexId v = 0; v < star.num_vertices(); ++v) {
    std::vector<EdgeId> listed = rs.order[v];
    std::vector<EdgeId> actual(star.incident(v).begin(), star.incident(v).end());
    std::sort(listed.begin(), listed.end());
    std::sort(actual.begin(), actual.end());
    if (listed != actual) return false;
  }
  return true;
}

bool genus_zero(const Graph& star, const RotationSystem& rs) {
  const int n = star.num_vertices();
  // successor[(v, e)] in the rotation of v
  std::map<std::pair<VertexId, EdgeId>, EdgeId> succ;
  for (VertexId v = 0; v < n; ++v) {
    const auto& cyc = rs.order[v];
    for (std::size_t i = 0; i < cyc.size(); ++i) succ[{v, cyc[i]}] = cyc[(i + 1) % cyc.size()];
  }
  std::set<std::pair<VertexId, EdgeId>> used;  // dart = (tail, edge)
  int faces = 0;
  for (VertexId v = 0; v < n; ++v) {
    for (EdgeId e : rs.order[v]) {
      if (used.count({v, e})) continue;
      ++faces;
      VertexId tail = v;
      EdgeId cur = e;
      while (used.insert({tail, cur}).second) {
        const VertexId head = star.edge(cur).other(tail);
        cur = succ.at({head, cur});
        tail = head;
      }
    }
  }
  // Union-find over vertices for the component count.
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : star.edges()) parent[find(e.u)] = find(e.v);
  std::set<int> roots;
  int vertices = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (star.degree(v) == 0) continue;
    ++vertices;
    roots.insert(find(v));
  }
  return vertices - star.num_edges() + faces == 2 * static_cast<int>(roots.size());
}

bool dummies_alternate(const Graph& g, const OnePlanarEmbedding& emb) {
  const int n = g.num_vertices();
  const auto& p = emb.planarization;
  for (int k = 0; k < static_cast<int>(emb.crossings.size()); ++k) {
    const auto& cyc = emb.rotation.order[static_cast<std::size_t>(n + k)];
    if (cyc.size() != 4) return false;
    for (std::size_t i = 0; i < 4; ++i) {
      if (p.edge_map[cyc[i]] == p.edge_map[cyc[(i + 1) % 4]]) return false;
    }
    const std::set<EdgeId> owners{p.edge_map[cyc[0]], p.edge_map[cyc[1]]};
    if (owners != std::set<EdgeId>{emb.crossings[k].first, emb.crossings[k].second}) return false;
  }
  return true;
}

}  // namespace

bool validate(const Graph& g, const OnePlanarEmbedding& emb) {
  if (!crossings_well_formed(g, emb.crossings)) return false;
  if (!contracts_to_original(g, emb)) return false;
  if (!rotation_consistent(emb.planarization.star_graph, emb.rotation)) return false;
  if (!dummies_alternate(g, emb)) return false;
  return genus_zero(emb.planarization.star_graph, emb.rotation);
}

}  // namespace oneplanar
