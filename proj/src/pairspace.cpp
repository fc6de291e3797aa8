#include "oneplanar/pairspace.hpp"

#include <algorithm>

namespace oneplanar {

PairUniverse make_universe(int num_edges, std::vector<EdgePair> pairs, bool restricted) {
  PairUniverse u;
  u.pairs_ = std::move(pairs);
  u.positions_.assign(static_cast<std::size_t>(num_edges), {});
  for (int i = 0; i < static_cast<int>(u.pairs_.size()); ++i) {
    u.positions_[u.pairs_[i].first].push_back(i);
    u.positions_[u.pairs_[i].second].push_back(i);
  }
  u.restricted_ = restricted;
  return u;
}

PairUniverse build_universe(const Graph& g) {
  std::vector<EdgePair> pairs;
  const int m = g.num_edges();
  for (EdgeId a = 0; a < m; ++a)
    for (EdgeId b = a + 1; b < m; ++b)
      if (!g.adjacent(a, b)) pairs.push_back({a, b});
  return make_universe(m, std::move(pairs), false);
}

PairUniverse build_restricted_universe(const Graph& g, std::span<const EdgeId> skew) {
  std::vector<char> is_skew(static_cast<std::size_t>(g.num_edges()), 0);
  for (EdgeId e : skew) is_skew[e] = 1;
  std::vector<EdgePair> pairs;
  const int m = g.num_edges();
  for (EdgeId a = 0; a < m; ++a)
    for (EdgeId b = a + 1; b < m; ++b)
      if ((is_skew[a] || is_skew[b]) && !g.adjacent(a, b)) pairs.push_back({a, b});
  return make_universe(m, std::move(pairs), true);
}

bool PartialSolution::extends(const PartialSolution& other) const {
  return cursor() >= other.cursor() &&
         std::equal(other.bits.begin(), other.bits.end(), bits.begin());
}

std::vector<EdgePair> PartialSolution::crossing_pairs() const {
  std::vector<EdgePair> out;
  for (int j = 0; j < cursor(); ++j)
    if (bits[j]) out.push_back(universe->at(j));
  return out;
}

std::vector<int> crossing_counts(const PartialSolution& y) {
  std::vector<int> count(static_cast<std::size_t>(y.universe->num_edges()), 0);
  for (int j = 0; j < y.cursor(); ++j) {
    if (!y.bits[j]) continue;
    ++count[y.universe->at(j).first];
    ++count[y.universe->at(j).second];
  }
  return count;
}

std::vector<EdgeId> crossed_edges(const PartialSolution& y) {
  const auto count = crossing_counts(y);
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < static_cast<EdgeId>(count.size()); ++e)
    if (count[e] > 0) out.push_back(e);
  return out;
}

std::vector<char> saturated_mask(const PartialSolution& y, const std::vector<char>& crossed,
                                 const std::vector<char>& kites) {
  const PairUniverse& u = *y.universe;
  const int m = u.num_edges();
  std::vector<char> sat(static_cast<std::size_t>(m), 0);
  for (EdgeId e = 0; e < m; ++e) {
    if (crossed[e] || (!kites.empty() && kites[e]) || u.last_position(e) < y.cursor()) {
      sat[e] = 1;
      continue;
    }
    // A pair decided 0 does not count here: only an already crossed partner rules the pair out.
    bool all_partners_crossed = true;
    for (int pos : u.positions_of(e)) {
      if (!crossed[u.at(pos).partner(e)]) {
        all_partners_crossed = false;
        break;
      }
    }
    sat[e] = all_partners_crossed ? 1 : 0;
  }
  return sat;
}

std::vector<EdgeId> saturated_edges(const PartialSolution& y, std::span<const EdgeId> kites) {
  const int m = y.universe->num_edges();
  std::vector<char> crossed(static_cast<std::size_t>(m), 0);
  for (EdgeId e : crossed_edges(y)) crossed[e] = 1;
  std::vector<char> kite_mask(static_cast<std::size_t>(m), 0);
  for (EdgeId e : kites) kite_mask[e] = 1;
  const auto sat = saturated_mask(y, crossed, kite_mask);
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < m; ++e)
    if (sat[e]) out.push_back(e);
  return out;
}

}  // namespace oneplanar
