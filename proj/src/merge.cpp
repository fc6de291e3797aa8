#include <algorithm>
#include <string>

#include "oneplanar/embed.hpp"

namespace oneplanar {

OnePlanarEmbedding merge_blocks(const Graph& g, const BlockDecomposition& dec,
                                std::span<const OnePlanarEmbedding> per_block) {
  if (per_block.size() != dec.blocks.size()) {
    throw Error(ErrorCode::InvalidBlockEmbedding,
                "expected " + std::to_string(dec.blocks.size()) + " block embeddings, got " +
                    std::to_string(per_block.size()));
  }
  std::vector<EdgePair> crossings;
  std::vector<int> dummy_offset;
  for (std::size_t b = 0; b < per_block.size(); ++b) {
    const Block& block = dec.blocks[b];
    if (!validate(block.graph, per_block[b])) {
      throw Error(ErrorCode::InvalidBlockEmbedding, "block " + std::to_string(b) + " embedding invalid");
    }
    dummy_offset.push_back(static_cast<int>(crossings.size()));
    for (const EdgePair& p : per_block[b].crossings) {
      crossings.push_back({block.to_original_edge[p.first], block.to_original_edge[p.second]});
    }
  }

  OnePlanarEmbedding merged;
  merged.planarization = planarize(g, crossings);
  merged.crossings = crossings;
  const Planarization& q = merged.planarization;
  const int n = g.num_vertices();
  merged.rotation.order.assign(static_cast<std::size_t>(q.star_graph.num_vertices()), {});

  // Blocks visit each vertex in increasing block order; the first block's
  // rotation hosts the others, each spliced in as one contiguous segment
  // right after the host's smallest dart.
  std::vector<std::size_t> splice_at(static_cast<std::size_t>(n), 0);
  std::vector<char> hosted(static_cast<std::size_t>(n), 0);
  for (std::size_t b = 0; b < per_block.size(); ++b) {
    const Block& block = dec.blocks[b];
    const OnePlanarEmbedding& emb = per_block[b];
    const Planarization& p = emb.planarization;
    for (VertexId bv = 0; bv < block.graph.num_vertices(); ++bv) {
      const VertexId v = block.to_original_vertex[bv];
      std::vector<EdgeId> segment;
      for (EdgeId s : emb.rotation.order[bv])
        segment.push_back(q.star_edge_at(block.to_original_edge[p.edge_map[s]], v));
      auto& out = merged.rotation.order[v];
      if (!hosted[v]) {
        hosted[v] = 1;
        out = std::move(segment);
        splice_at[v] = static_cast<std::size_t>(std::min_element(out.begin(), out.end()) - out.begin()) + 1;
      } else {
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(splice_at[v]), segment.begin(), segment.end());
        splice_at[v] += segment.size();
      }
    }
    for (int k = 0; k < static_cast<int>(p.dummies.size()); ++k) {
      const Dummy& local = p.dummies[k];
      const Dummy& global = q.dummies[static_cast<std::size_t>(dummy_offset[b] + k)];
      auto& out = merged.rotation.order[static_cast<std::size_t>(n + dummy_offset[b] + k)];
      for (EdgeId s : emb.rotation.order[static_cast<std::size_t>(block.graph.num_vertices() + k)]) {
        const auto slot = std::find(local.halves.begin(), local.halves.end(), s) - local.halves.begin();
        out.push_back(global.halves[static_cast<std::size_t>(slot)]);
      }
    }
  }
  return merged;
}

}  // namespace oneplanar
