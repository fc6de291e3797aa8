#include "oneplanar/pipeline.hpp"

#include <stdexcept>

#include "oneplanar/planarity.hpp"

namespace oneplanar {

std::uint64_t block_seed(std::uint64_t seed, int index) {
  // splitmix64 finalizer over (seed, index)
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

BlockResult oracle_block(const Graph& block) {
  const auto started = Clock::now();
  BlockResult r;
  if (auto rs = planar_embedding(block.num_vertices(), block.edges())) {
    r.verdict = Verdict::OnePlanar;
    r.embedding = planar_one_planar_embedding(block, *rs);
  } else {
    auto [ok, emb] = oracle_is_one_planar(block);
    r.verdict = ok ? Verdict::OnePlanar : Verdict::NotOnePlanar;
    r.embedding = std::move(emb);
  }
  r.stats.elapsed = Clock::now() - started;
  return r;
}

}  // namespace

InstanceRecord run_pipeline(const Graph& g, const PipelineOptions& opts) {
  const auto started = Clock::now();
  const auto deadline = started + opts.search.time_budget;
  InstanceRecord rec;
  rec.n = g.num_vertices();
  rec.m = g.num_edges();
  rec.density = rec.n > 0 ? static_cast<double>(rec.m) / rec.n : 0.0;
  rec.planar = is_planar(rec.n, g.edges());

  const BlockDecomposition dec = biconnected_components(g);
  rec.block_count = static_cast<int>(dec.blocks.size());

  std::vector<OnePlanarEmbedding> embeddings;
  bool unknown = false;
  bool negative = false;
  for (int b = 0; b < rec.block_count; ++b) {
    SearchConfig cfg = opts.search;
    cfg.rng_seed = block_seed(opts.search.rng_seed, b);
    const Graph& block = dec.blocks[b].graph;
    BlockResult r = opts.use_oracle ? oracle_block(block) : test_block(block, cfg, deadline);
    ++rec.blocks_tested;
    r.stats.elapsed = {};
    rec.stats.merge(r.stats);
    if (r.verdict == Verdict::NotOnePlanar) {
      negative = true;
      break;
    }
    if (r.verdict == Verdict::Unknown) {
      unknown = true;
      continue;
    }
    embeddings.push_back(std::move(*r.embedding));
  }

  if (negative) {
    rec.verdict = Verdict::NotOnePlanar;
  } else if (unknown) {
    rec.verdict = Verdict::Unknown;
  } else {
    OnePlanarEmbedding merged = merge_blocks(g, dec, embeddings);
    if (!validate(g, merged)) throw std::logic_error("merged embedding failed validation");
    rec.verdict = Verdict::OnePlanar;
    rec.crossings = count_crossings(merged);
    rec.embedding = std::move(merged);
  }
  rec.solved_by_backtracking = rec.stats.used_backtracking;
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - started).count();
  rec.stats.elapsed = Clock::now() - started;
  return rec;
}

std::chrono::milliseconds parse_duration(const std::string& text) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad duration '" + text + "'");
  }
  const std::string unit = text.substr(used);
  double ms = 0;
  if (unit.empty() || unit == "s") ms = value * 1e3;
  else if (unit == "ms") ms = value;
  else if (unit == "m" || unit == "min") ms = value * 60e3;
  else if (unit == "h") ms = value * 3600e3;
  else throw Error(ErrorCode::ParseError, "bad duration unit in '" + text + "'");
  if (value < 0) throw Error(ErrorCode::ParseError, "negative duration '" + text + "'");
  return std::chrono::milliseconds(static_cast<long long>(ms));
}

}  // namespace oneplanar
