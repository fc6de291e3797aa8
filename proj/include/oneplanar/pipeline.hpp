#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "oneplanar/embed.hpp"
#include "oneplanar/graph.hpp"
#include "oneplanar/search.hpp"

namespace oneplanar {

enum class GraphFormat { Auto, EdgeList, Gml };

/// Edge list: one `u v` per line, `#` starts a comment, n = largest id + 1.
/// GML: `graph [ node [ id N ] edge [ source A target B ] ]`, other keys ignored;
/// node ids are renumbered densely in declaration order.
/// Throws Error{ParseError | SelfLoop | ParallelEdge} with the offending line.
Graph parse_graph_file(const std::filesystem::path& path, GraphFormat format = GraphFormat::Auto);
Graph parse_graph_text(const std::string& text, GraphFormat format);

struct PipelineOptions {
  SearchConfig search;
  bool use_oracle = false;   // brute-force every nonplanar block instead of searching
};

struct InstanceRecord {
  std::string name;
  int n = 0;
  int m = 0;
  double density = 0.0;
  int block_count = 0;
  Verdict verdict = Verdict::Unknown;
  std::optional<int> crossings;
  double elapsed_ms = 0.0;
  bool solved_by_backtracking = false;
  SearchStats stats;
  bool planar = false;
  int blocks_tested = 0;
  std::optional<std::string> error;  // set for rows whose file failed to load
  std::optional<OnePlanarEmbedding> embedding;
};

/// Splits g into blocks, tests them in order and halts at the first negative
/// block. On success the block embeddings are merged and validated.
InstanceRecord run_pipeline(const Graph& g, const PipelineOptions& opts);

/// Seed used for block `index` so blocks get independent completion streams.
std::uint64_t block_seed(std::uint64_t seed, int index);

struct BenchOptions {
  PipelineOptions pipeline;
  int threads = 1;
  GraphFormat format = GraphFormat::Auto;
  bool skip_planar = false;
  std::optional<std::filesystem::path> embeddings_dir;
};

struct BenchSummary {
  std::vector<InstanceRecord> rows;
  std::string report;  // per-size-bucket table
};

extern const char* const kCsvHeader;

std::string csv_row(const InstanceRecord& r);
/// Runs every regular file of `dir` (sorted by name) and writes the CSV to `out`.
BenchSummary bench(const std::filesystem::path& dir, const BenchOptions& opts,
                   const std::filesystem::path& out);
std::string summarize(const std::vector<InstanceRecord>& rows);

/// "500ms", "90s", "10m", "3h"; a bare number means seconds. Throws Error{ParseError}.
std::chrono::milliseconds parse_duration(const std::string& text);

}  // namespace oneplanar
