#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "oneplanar/pipeline.hpp"

using namespace oneplanar;

namespace {

struct CommonFlags {
  std::string timeout = "3h";
  int skew_size = 1;
  double completion_prob = 0.8;
  std::uint64_t seed = 0;
  bool no_kite = false;
  bool no_skew = false;
  bool oracle = false;
  std::string format = "auto";

  void attach(CLI::App* app) {
    app->add_option("--timeout", timeout, "Time budget per instance (e.g. 90s, 10m, 3h)");
    app->add_option("--skew-size", skew_size, "Maximum skew-set size for the restricted pass")
        ->check(CLI::NonNegativeNumber);
    app->add_option("--completion-prob", completion_prob, "Probability of trying the all-zero completion")
        ->check(CLI::Range(0.0, 1.0));
    app->add_option("--seed", seed, "Seed for the completion draws");
    app->add_flag("--no-kite", no_kite, "Disable kite-edge pruning");
    app->add_flag("--no-skew", no_skew, "Disable the skew-edge pass");
    app->add_flag("--oracle", oracle, "Brute-force each nonplanar block (at most 20 pairs)");
    app->add_option("--format", format, "Input format")
        ->check(CLI::IsMember({"auto", "edgelist", "gml"}));
  }

  PipelineOptions options() const {
    PipelineOptions o;
    o.search.time_budget = parse_duration(timeout);
    o.search.skew_set_size = skew_size;
    o.search.completion_probability = completion_prob;
    o.search.rng_seed = seed;
    o.search.enable_kite_pruning = !no_kite;
    o.search.enable_skew_pass = !no_skew;
    o.use_oracle = oracle;
    return o;
  }

  GraphFormat graph_format() const {
    if (format == "edgelist") return GraphFormat::EdgeList;
    if (format == "gml") return GraphFormat::Gml;
    return GraphFormat::Auto;
  }
};

int default_threads() {
  if (const char* env = std::getenv("ONEPLANAR_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 1;
}

void print_record(const InstanceRecord& r) {
  std::cout << "name: " << r.name << "\n"
            << "n: " << r.n << "\nm: " << r.m << "\n"
            << "blocks: " << r.block_count << "\n"
            << "planar: " << (r.planar ? "yes" : "no") << "\n"
            << "verdict: " << to_string(r.verdict) << "\n";
  if (r.crossings) std::cout << "crossings: " << *r.crossings << "\n";
  const auto& s = r.stats;
  std::cout << "time_ms: " << r.elapsed_ms << "\n"
            << "backtracked: " << (r.solved_by_backtracking ? "yes" : "no") << "\n"
            << "skew_pass: " << (s.used_skew_pass ? "yes" : "no") << "\n"
            << "nodes: " << s.nodes_visited << "\n"
            << "cuts: dec=" << s.cuts_dec << " kec=" << s.cuts_kec << " nonplanar=" << s.cuts_nonplanar << "\n"
            << "solutions: satur=" << s.sol_satur << " compl=" << s.sol_compl << "\n"
            << "planarity_calls: " << s.planarity_calls << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact 1-planarity testing and embedding"};
  app.require_subcommand(1);

  CommonFlags test_flags;
  std::string input;
  std::string emit;
  auto* test = app.add_subcommand("test", "Test one graph file");
  test->add_option("file", input, "Graph file (edge list or GML)")->required();
  test->add_option("--emit-embedding", emit, "Write the certificate here when 1-planar");
  test_flags.attach(test);

  CommonFlags bench_flags;
  std::string dir, out, summary_path, emb_dir;
  int threads = default_threads();
  bool skip_planar = false;
  auto* benchcmd = app.add_subcommand("bench", "Run every graph file in a directory");
  benchcmd->add_option("dir", dir, "Directory of graph files")->required()->check(CLI::ExistingDirectory);
  benchcmd->add_option("--out", out, "CSV output path")->required();
  benchcmd->add_option("--summary", summary_path, "Also write the bucket summary here");
  benchcmd->add_option("--embeddings-dir", emb_dir, "Write <name>.emb certificates here");
  benchcmd->add_option("--threads", threads, "Worker threads (default $ONEPLANAR_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  benchcmd->add_flag("--skip-planar", skip_planar, "Leave planar instances out of the output");
  bench_flags.attach(benchcmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*test) {
      const PipelineOptions opts = test_flags.options();
      const Graph g = parse_graph_file(input, test_flags.graph_format());
      InstanceRecord rec = run_pipeline(g, opts);
      rec.name = std::filesystem::path(input).filename().string();
      print_record(rec);
      if (!emit.empty() && rec.embedding) {
        std::ofstream(emit, std::ios::binary) << write_embedding(*rec.embedding);
      }
      return 0;
    }
    BenchOptions opts;
    opts.pipeline = bench_flags.options();
    opts.threads = threads;
    opts.format = bench_flags.graph_format();
    opts.skip_planar = skip_planar;
    if (!emb_dir.empty()) opts.embeddings_dir = emb_dir;
    const BenchSummary s = bench(dir, opts, out);
    std::cout << s.report;
    if (!summary_path.empty()) std::ofstream(summary_path, std::ios::binary) << s.report;
    return 0;
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return 2;
  }
}
