#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "oneplanar/embed.hpp"
#include "oneplanar/graph.hpp"
#include "oneplanar/pairspace.hpp"

namespace oneplanar {

using Clock = std::chrono::steady_clock;

struct SearchConfig {
  int skew_set_size = 1;
  double completion_probability = 0.8;
  std::uint64_t rng_seed = 0;
  std::chrono::milliseconds time_budget = std::chrono::hours(3);
  bool enable_kite_pruning = true;
  bool enable_skew_pass = true;
};

enum class NodeKind { Sol, Cut, Cnt };
enum class CutReason { DoubleEdgeCrossing, KiteEdgeCrossing, NonplanarInduced };
enum class SolutionKind { Satur, Compl };
enum class Verdict { OnePlanar, NotOnePlanar, Unknown };

const char* to_string(NodeKind k);
const char* to_string(CutReason r);
const char* to_string(Verdict v);

struct NodeVerdict {
  NodeKind kind = NodeKind::Cnt;
  std::optional<CutReason> cut_reason;
  std::optional<SolutionKind> solution;
  std::optional<OnePlanarEmbedding> certificate;
};

struct SearchStats {
  long long nodes_visited = 0;
  long long cuts_dec = 0;
  long long cuts_kec = 0;
  long long cuts_nonplanar = 0;
  long long sol_satur = 0;
  long long sol_compl = 0;
  long long planarity_calls = 0;
  std::chrono::nanoseconds elapsed{0};
  bool used_backtracking = false;
  bool used_skew_pass = false;

  long long total_cuts() const { return cuts_dec + cuts_kec + cuts_nonplanar; }
  void merge(const SearchStats& other);
  /// Equality on every counter and flag except elapsed time.
  bool same_counts(const SearchStats& other) const;
};

struct BlockResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<OnePlanarEmbedding> embedding;
  SearchStats stats;
  bool timed_out = false;
};

/// Seeded Bernoulli source for the completion step. One 64-bit draw per call,
/// mapped to [0,1) with 53 bits of precision so results do not depend on the
/// standard library's distribution implementations.
class CompletionSampler {
 public:
  explicit CompletionSampler(std::uint64_t seed) : engine_(seed) {}
  bool fire(double probability) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return u < probability;
  }

 private:
  std::mt19937_64 engine_;
};

/// Edges joining two endpoints of some crossing pair of y (the quadrilateral
/// around each crossing), excluding the crossing edges themselves. Sorted.
std::vector<EdgeId> find_kite_edges(const PartialSolution& y, const Graph& g);

/// One visit of a search-tree node: double-crossing test, kite test,
/// planarity of the saturated planarization, saturation or completion.
NodeVerdict verify_node(const PartialSolution& y, const Graph& g, const SearchConfig& cfg,
                        CompletionSampler& rng);

/// Lexicographically first minimum-size edge set (size <= max_size) whose
/// removal leaves g planar. Empty set for planar g.
std::optional<std::vector<EdgeId>> find_skew_set(const Graph& g, int max_size);

/// Depth-first search over candidate solutions of `universe`, exploring bit 0
/// before bit 1. An exhausted restricted universe yields Unknown.
BlockResult backtrack(const Graph& g, const PairUniverse& universe, const SearchConfig& cfg,
                      Clock::time_point deadline);

/// Preliminary tests, then the skew pass and the full search.
BlockResult test_block(const Graph& c, const SearchConfig& cfg, Clock::time_point deadline);
BlockResult test_block(const Graph& c, const SearchConfig& cfg);

inline constexpr int kOracleMaxUniverse = 20;

/// Brute-force definition check: tries every candidate array in which each
/// edge is crossed at most once. Throws Error{UniverseTooLarge} when the
/// universe has more than `max_universe` pairs.
std::pair<bool, std::optional<OnePlanarEmbedding>> oracle_is_one_planar(const Graph& g,
                                                                        int max_universe = kOracleMaxUniverse);

}  // namespace oneplanar
