#include "oneplanar/search.hpp"

#include <algorithm>

#include "oneplanar/planarity.hpp"

namespace oneplanar {

const char* to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Sol: return "SOL";
    case NodeKind::Cut: return "CUT";
    case NodeKind::Cnt: return "CNT";
  }
  return "?";
}

const char* to_string(CutReason r) {
  switch (r) {
    case CutReason::DoubleEdgeCrossing: return "DEC";
    case CutReason::KiteEdgeCrossing: return "KEC";
    case CutReason::NonplanarInduced: return "Nonplanar";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::OnePlanar: return "OnePlanar";
    case Verdict::NotOnePlanar: return "NotOnePlanar";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

void SearchStats::merge(const SearchStats& o) {
  nodes_visited += o.nodes_visited;
  cuts_dec += o.cuts_dec;
  cuts_kec += o.cuts_kec;
  cuts_nonplanar += o.cuts_nonplanar;
  sol_satur += o.sol_satur;
  sol_compl += o.sol_compl;
  planarity_calls += o.planarity_calls;
  elapsed += o.elapsed;
  used_backtracking = used_backtracking || o.used_backtracking;
  used_skew_pass = used_skew_pass || o.used_skew_pass;
}

bool SearchStats::same_counts(const SearchStats& o) const {
  return nodes_visited == o.nodes_visited && cuts_dec == o.cuts_dec && cuts_kec == o.cuts_kec &&
         cuts_nonplanar == o.cuts_nonplanar && sol_satur == o.sol_satur && sol_compl == o.sol_compl &&
         planarity_calls == o.planarity_calls && used_backtracking == o.used_backtracking &&
         used_skew_pass == o.used_skew_pass;
}

namespace {

void mark_kites(const Graph& g, const EdgePair& p, std::vector<char>& mask) {
  const Edge& a = g.edge(p.first);
  const Edge& b = g.edge(p.second);
  for (VertexId x : {a.u, a.v})
    for (VertexId z : {b.u, b.v})
      if (const auto e = g.find_edge(x, z)) mask[*e] = 1;
}

// Star edge list of the graph induced by `keep`, with crossing k turned into vertex n+k.
std::vector<Edge> star_edges(const Graph& g, const std::vector<EdgePair>& crossings,
                             const std::vector<char>* keep) {
  const int n = g.num_vertices();
  std::vector<int> dummy(static_cast<std::size_t>(g.num_edges()), -1);
  for (int k = 0; k < static_cast<int>(crossings.size()); ++k) {
    dummy[crossings[k].first] = n + k;
    dummy[crossings[k].second] = n + k;
  }
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(g.num_edges()) + 2 * crossings.size());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (keep && !(*keep)[e]) continue;
    const Edge& oe = g.edge(e);
    if (dummy[e] < 0) {
      out.push_back(oe);
    } else {
      out.push_back({oe.u, dummy[e]});
      out.push_back({dummy[e], oe.v});
    }
  }
  return out;
}

OnePlanarEmbedding certify(const Graph& g, const std::vector<EdgePair>& crossings) {
  const Planarization p = planarize(g, crossings);
  const auto rs = planar_embedding(p.star_graph.num_vertices(), p.star_graph.edges());
  return realize(p, *rs);
}

struct NodeState {
  NodeVerdict verdict;
  std::vector<char> crossed;
  std::vector<char> saturated;
};

NodeState evaluate(const PartialSolution& y, const Graph& g, const SearchConfig& cfg,
                   CompletionSampler& rng, SearchStats& stats) {
  NodeState st;
  const int m = g.num_edges();
  const int n = g.num_vertices();
  const auto counts = crossing_counts(y);
  if (std::any_of(counts.begin(), counts.end(), [](int c) { return c > 1; })) {
    st.verdict = {NodeKind::Cut, CutReason::DoubleEdgeCrossing, std::nullopt, std::nullopt};
    return st;
  }

  const std::vector<EdgePair> crossings = y.crossing_pairs();
  st.crossed.assign(static_cast<std::size_t>(m), 0);
  for (EdgeId e = 0; e < m; ++e) st.crossed[e] = counts[e] > 0;
  std::vector<char> kites;
  if (cfg.enable_kite_pruning) {
    kites.assign(static_cast<std::size_t>(m), 0);
    for (const EdgePair& p : crossings) mark_kites(g, p, kites);
    for (EdgeId e = 0; e < m; ++e) {
      if (kites[e] && st.crossed[e]) {
        st.verdict = {NodeKind::Cut, CutReason::KiteEdgeCrossing, std::nullopt, std::nullopt};
        return st;
      }
    }
  }

  st.saturated = saturated_mask(y, st.crossed, kites);
  const int dummies = static_cast<int>(crossings.size());
  ++stats.planarity_calls;
  if (!is_planar(n + dummies, star_edges(g, crossings, &st.saturated))) {
    st.verdict = {NodeKind::Cut, CutReason::NonplanarInduced, std::nullopt, std::nullopt};
    return st;
  }
  if (std::all_of(st.saturated.begin(), st.saturated.end(), [](char c) { return c != 0; })) {
    st.verdict = {NodeKind::Sol, std::nullopt, SolutionKind::Satur, certify(g, crossings)};
    return st;
  }
  // Completion: every undecided pair set to 0.
  if (rng.fire(cfg.completion_probability)) {
    ++stats.planarity_calls;
    if (is_planar(n + dummies, star_edges(g, crossings, nullptr))) {
      st.verdict = {NodeKind::Sol, std::nullopt, SolutionKind::Compl, certify(g, crossings)};
      return st;
    }
  }
  st.verdict = {NodeKind::Cnt, std::nullopt, std::nullopt, std::nullopt};
  return st;
}

void count_verdict(const NodeVerdict& v, SearchStats& stats) {
  ++stats.nodes_visited;
  if (v.kind == NodeKind::Cut) {
    switch (*v.cut_reason) {
      case CutReason::DoubleEdgeCrossing: ++stats.cuts_dec; break;
      case CutReason::KiteEdgeCrossing: ++stats.cuts_kec; break;
      case CutReason::NonplanarInduced: ++stats.cuts_nonplanar; break;
    }
  } else if (v.kind == NodeKind::Sol) {
    if (*v.solution == SolutionKind::Satur) ++stats.sol_satur;
    else ++stats.sol_compl;
  }
}

}  // namespace

std::vector<EdgeId> find_kite_edges(const PartialSolution& y, const Graph& g) {
  std::vector<char> mask(static_cast<std::size_t>(g.num_edges()), 0);
  const auto crossings = y.crossing_pairs();
  for (const EdgePair& p : crossings) mark_kites(g, p, mask);
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (mask[e]) out.push_back(e);
  return out;
}

NodeVerdict verify_node(const PartialSolution& y, const Graph& g, const SearchConfig& cfg,
                        CompletionSampler& rng) {
  SearchStats scratch;
  return evaluate(y, g, cfg, rng, scratch).verdict;
}

std::optional<std::vector<EdgeId>> find_skew_set(const Graph& g, int max_size) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  if (is_planar(n, g.edges())) return std::vector<EdgeId>{};
  std::vector<Edge> rest;
  for (int size = 1; size <= std::min(max_size, m); ++size) {
    // Lexicographic enumeration of size-element subsets of edge ids.
    std::vector<EdgeId> pick(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      rest.clear();
      std::size_t next = 0;
      for (EdgeId e = 0; e < m; ++e) {
        if (next < pick.size() && pick[next] == e) {
          ++next;
          continue;
        }
        rest.push_back(g.edge(e));
      }
      if (is_planar(n, rest)) return pick;
      int i = size - 1;
      while (i >= 0 && pick[i] == m - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

BlockResult backtrack(const Graph& g, const PairUniverse& universe, const SearchConfig& cfg,
                      Clock::time_point deadline) {
  const auto started = Clock::now();
  BlockResult result;
  result.stats.used_backtracking = true;
  CompletionSampler rng(cfg.rng_seed);
  const int k = universe.size();

  // A pending node sets bits[from .. cursor-2] to 0 and bits[cursor-1] to `bit`.
  struct Pending {
    int cursor;
    int from;
    std::uint8_t bit;
  };
  std::vector<Pending> stack{{0, 0, 0}};
  PartialSolution y{&universe, {}};

  while (!stack.empty()) {
    if (Clock::now() >= deadline) {
      result.verdict = Verdict::Unknown;
      result.timed_out = true;
      result.stats.elapsed = Clock::now() - started;
      return result;
    }
    const Pending node = stack.back();
    stack.pop_back();
    y.bits.resize(static_cast<std::size_t>(node.cursor));
    if (node.cursor > 0) {
      std::fill(y.bits.begin() + node.from, y.bits.begin() + (node.cursor - 1), 0);
      y.bits[node.cursor - 1] = node.bit;
    }

    NodeState st = evaluate(y, g, cfg, rng, result.stats);
    count_verdict(st.verdict, result.stats);
    if (st.verdict.kind == NodeKind::Sol) {
      result.verdict = Verdict::OnePlanar;
      result.embedding = std::move(st.verdict.certificate);
      result.stats.elapsed = Clock::now() - started;
      return result;
    }
    if (st.verdict.kind == NodeKind::Cut) continue;

    // Pairs containing a saturated, uncrossed edge can only be 0 in a valid
    // extension; setting them to 1 would be cut at once. Step over them.
    int branch = node.cursor;
    auto forced_zero = [&](int pos) {
      const EdgePair& p = universe.at(pos);
      return (st.saturated[p.first] && !st.crossed[p.first]) ||
             (st.saturated[p.second] && !st.crossed[p.second]);
    };
    while (branch < k && forced_zero(branch)) ++branch;
    if (branch == k) {
      stack.push_back({k, node.cursor, 0});
      continue;
    }
    stack.push_back({branch + 1, node.cursor, 1});
    stack.push_back({branch + 1, node.cursor, 0});
  }

  result.verdict = universe.restricted() ? Verdict::Unknown : Verdict::NotOnePlanar;
  result.stats.elapsed = Clock::now() - started;
  return result;
}

namespace {

BlockResult search_block(const Graph& c, const SearchConfig& cfg, Clock::time_point deadline) {
  BlockResult result;
  if (cfg.enable_skew_pass && cfg.skew_set_size >= 1) {
    if (const auto skew = find_skew_set(c, cfg.skew_set_size); skew && !skew->empty()) {
      const PairUniverse restricted = build_restricted_universe(c, *skew);
      BlockResult pass = backtrack(c, restricted, cfg, deadline);
      pass.stats.used_skew_pass = true;
      if (pass.verdict == Verdict::OnePlanar || pass.timed_out) return pass;
      result.stats.merge(pass.stats);
    }
  }
  const PairUniverse full = build_universe(c);
  BlockResult main = backtrack(c, full, cfg, deadline);
  main.stats.merge(result.stats);
  return main;
}

}  // namespace

BlockResult test_block(const Graph& c, const SearchConfig& cfg, Clock::time_point deadline) {
  const auto started = Clock::now();
  BlockResult result;
  const int n = c.num_vertices();
  const int m = c.num_edges();

  if (auto rs = planar_embedding(n, c.edges())) {
    result.verdict = Verdict::OnePlanar;
    result.embedding = planar_one_planar_embedding(c, *rs);
  } else if (n < 7) {
    // Every graph on at most six vertices is 1-planar; the search only supplies the embedding.
    result = search_block(c, cfg, deadline);
    result.stats.used_backtracking = false;
  } else if (m > 4 * n - 8) {
    result.verdict = Verdict::NotOnePlanar;
  } else {
    result = search_block(c, cfg, deadline);
  }
  result.stats.elapsed = Clock::now() - started;
  return result;
}

BlockResult test_block(const Graph& c, const SearchConfig& cfg) {
  return test_block(c, cfg, Clock::now() + cfg.time_budget);
}

}  // namespace oneplanar
