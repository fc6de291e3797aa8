#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "oneplanar/graph.hpp"
#include "oneplanar/pairspace.hpp"
#include "oneplanar/planarity.hpp"

namespace oneplanar {

/// One crossing replaced by a degree-4 vertex. Half slots are
/// 0 = (u1,d), 1 = (d,v1), 2 = (u2,d), 3 = (d,v2) where (u1,v1), (u2,v2)
/// are the original orientations of `pair.first` and `pair.second`.
struct Dummy {
  EdgePair pair;
  std::array<VertexId, 4> ends{};
  std::array<EdgeId, 4> halves{};
};

/// Star graph: vertices 0..n-1 are the original vertices, n+k is dummy k.
/// Star edges are emitted walking original edges in id order, one star edge
/// for an uncrossed edge and its two halves (u side first) for a crossed one.
struct Planarization {
  Graph original;
  Graph star_graph;
  std::vector<Dummy> dummies;
  std::vector<EdgeId> edge_map;                  // star edge -> original edge
  std::vector<int> half_slot;                    // star edge -> 0..3, or -1 when uncrossed
  std::vector<std::vector<EdgeId>> star_edges;   // original edge -> 1 or 2 star edges

  int original_vertices() const { return original.num_vertices(); }
  bool is_dummy(VertexId v) const { return v >= original_vertices(); }
  int dummy_index(VertexId v) const { return v - original_vertices(); }
  /// Star edge that carries original edge `e` at original endpoint `v`.
  EdgeId star_edge_at(EdgeId e, VertexId v) const;
};

struct OnePlanarEmbedding {
  Planarization planarization;
  RotationSystem rotation;
  std::vector<EdgePair> crossings;
};

/// Throws Error{EdgeCrossedTwice | AdjacentPair}. Dummy k belongs to crossings[k].
Planarization planarize(const Graph& g, std::span<const EdgePair> crossings);

/// Turns a planar rotation of p.star_graph into a 1-planar embedding,
/// dropping every dummy whose rotation does not alternate the two edges.
/// Throws Error{NotPlanarRotation}.
OnePlanarEmbedding realize(const Planarization& p, const RotationSystem& rs);

/// Certificate check that shares no code with the construction path.
bool validate(const Graph& g, const OnePlanarEmbedding& emb);

/// Embedding of g whose crossings are the block crossings (in block order).
/// Throws Error{InvalidBlockEmbedding}.
OnePlanarEmbedding merge_blocks(const Graph& g, const BlockDecomposition& dec,
                                std::span<const OnePlanarEmbedding> per_block);

inline int count_crossings(const OnePlanarEmbedding& emb) {
  return static_cast<int>(emb.crossings.size());
}

/// Zero-crossing embedding from a planar rotation of g itself.
OnePlanarEmbedding planar_one_planar_embedding(const Graph& g, const RotationSystem& rs);

/// Text serialization with `crossings:`, `rotation:` and `dummies:` sections.
std::string write_embedding(const OnePlanarEmbedding& emb);
/// Throws Error{ParseError} on malformed text or on darts that do not fit g.
OnePlanarEmbedding parse_embedding(const std::string& text, const Graph& g);

}  // namespace oneplanar
