#include <string>

#include "oneplanar/planarity.hpp"
#include "oneplanar/search.hpp"

namespace oneplanar {

namespace {

// Arrays are visited in lexicographic order (position 0 most significant,
// 0 before 1); arrays crossing an edge twice fail the definition outright
// and are skipped without a planarity test.
struct Enumerator {
  const Graph& g;
  const PairUniverse& universe;
  std::vector<char> used;
  std::vector<EdgePair> chosen;
  std::optional<std::vector<EdgePair>> found;

  bool run(int pos) {
    if (pos == universe.size()) {
      const Planarization p = planarize(g, chosen);
      if (is_planar(p.star_graph.num_vertices(), p.star_graph.edges())) {
        found = chosen;
        return true;
      }
      return false;
    }
    if (run(pos + 1)) return true;
    const EdgePair& pair = universe.at(pos);
    if (used[pair.first] || used[pair.second]) return false;
    used[pair.first] = used[pair.second] = 1;
    chosen.push_back(pair);
    const bool ok = run(pos + 1);
    chosen.pop_back();
    used[pair.first] = used[pair.second] = 0;
    return ok;
  }
};

}  // namespace

std::pair<bool, std::optional<OnePlanarEmbedding>> oracle_is_one_planar(const Graph& g, int max_universe) {
  const PairUniverse universe = build_universe(g);
  if (universe.size() > max_universe) {
    throw Error(ErrorCode::UniverseTooLarge, "oracle limited to " + std::to_string(max_universe) +
                                                 " pairs, graph has " + std::to_string(universe.size()));
  }
  Enumerator en{g, universe, std::vector<char>(static_cast<std::size_t>(g.num_edges()), 0), {}, {}};
  if (!en.run(0)) return {false, std::nullopt};
  const Planarization p = planarize(g, *en.found);
  const auto rs = planar_embedding(p.star_graph.num_vertices(), p.star_graph.edges());
  return {true, realize(p, *rs)};
}

}  // namespace oneplanar
