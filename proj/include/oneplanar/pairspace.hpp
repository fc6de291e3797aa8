#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "oneplanar/graph.hpp"

namespace oneplanar {

/// Unordered pair of independent edges, stored with first < second.
struct EdgePair {
  EdgeId first = 0;
  EdgeId second = 0;

  EdgeId partner(EdgeId e) const { return e == first ? second : first; }
  bool contains(EdgeId e) const { return e == first || e == second; }
  friend auto operator<=>(const EdgePair&, const EdgePair&) = default;
};

/// The ordered set of edge pairs that may cross. Positions in this sequence
/// are the coordinates of every candidate solution.
class PairUniverse {
 public:
  int size() const { return static_cast<int>(pairs_.size()); }
  int num_edges() const { return static_cast<int>(positions_.size()); }
  bool restricted() const { return restricted_; }

  std::span<const EdgePair> pairs() const { return pairs_; }
  const EdgePair& at(int i) const { return pairs_[static_cast<std::size_t>(i)]; }
  /// Sorted positions of the pairs that contain `e`.
  std::span<const int> positions_of(EdgeId e) const { return positions_[static_cast<std::size_t>(e)]; }
  /// Greatest position containing `e`, or -1 when `e` is in no pair.
  int last_position(EdgeId e) const {
    const auto p = positions_of(e);
    return p.empty() ? -1 : p.back();
  }

 private:
  friend PairUniverse make_universe(int num_edges, std::vector<EdgePair> pairs, bool restricted);

  std::vector<EdgePair> pairs_;
  std::vector<std::vector<int>> positions_;
  bool restricted_ = false;
};

/// Builds a universe from an explicit pair sequence (kept in the given order).
PairUniverse make_universe(int num_edges, std::vector<EdgePair> pairs, bool restricted);

/// All independent edge pairs, lexicographic on (first, second).
PairUniverse build_universe(const Graph& g);

/// Independent pairs with at least one edge in `skew`, as a subsequence of build_universe(g).
PairUniverse build_restricted_universe(const Graph& g, std::span<const EdgeId> skew);

/// A prefix of a candidate solution: bits[j] decides pair j for j < cursor().
struct PartialSolution {
  const PairUniverse* universe = nullptr;
  std::vector<std::uint8_t> bits;

  int cursor() const { return static_cast<int>(bits.size()); }
  bool complete() const { return cursor() == universe->size(); }
  /// True iff this solution is at least as long as `other` and agrees on its prefix.
  bool extends(const PartialSolution& other) const;
  /// Pairs decided as crossing, in position order.
  std::vector<EdgePair> crossing_pairs() const;
};

/// Times each edge is crossed in y.
std::vector<int> crossing_counts(const PartialSolution& y);

std::vector<EdgeId> crossed_edges(const PartialSolution& y);

/// Edges whose crossed status can no longer change in a valid extension of y:
/// (a) crossed in y; (b) no pair containing the edge lies at or after the cursor;
/// (c) every partner of the edge in the universe is already crossed; (d) listed in `kites`.
std::vector<EdgeId> saturated_edges(const PartialSolution& y, std::span<const EdgeId> kites);

/// Mask form of saturated_edges used on the hot path.
std::vector<char> saturated_mask(const PartialSolution& y, const std::vector<char>& crossed,
                                 const std::vector<char>& kites);

}  // namespace oneplanar
