#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "oneplanar/pipeline.hpp"

namespace oneplanar {

const char* const kCsvHeader =
    "name,n,m,density,blocks,verdict,crossings,time_ms,backtracked,nodes,cuts_dec,cuts_kec,"
    "cuts_nonplanar,sol_satur,sol_compl";

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

struct Moments {
  double sum = 0, sq = 0, max = 0;
  int count = 0;
  void add(double v) {
    sum += v;
    sq += v * v;
    max = count == 0 ? v : std::max(max, v);
    ++count;
  }
  double mean() const { return count ? sum / count : 0.0; }
  double sd() const {
    if (count == 0) return 0.0;
    const double m = mean();
    return std::sqrt(std::max(0.0, sq / count - m * m));
  }
};

double pct(double part, double whole) { return whole > 0 ? 100.0 * part / whole : 0.0; }

}  // namespace

std::string csv_row(const InstanceRecord& r) {
  std::ostringstream out;
  out << csv_field(r.name) << ',';
  if (r.error) {
    out << ",,,,Error,,,,,,,,,";
    return out.str();
  }
  const SearchStats& s = r.stats;
  out << r.n << ',' << r.m << ',' << fixed(r.density, 4) << ',' << r.block_count << ','
      << to_string(r.verdict) << ',' << (r.crossings ? std::to_string(*r.crossings) : "") << ','
      << fixed(r.elapsed_ms, 3) << ',' << (r.solved_by_backtracking ? 1 : 0) << ',' << s.nodes_visited
      << ',' << s.cuts_dec << ',' << s.cuts_kec << ',' << s.cuts_nonplanar << ',' << s.sol_satur << ','
      << s.sol_compl;
  return out.str();
}

std::string summarize(const std::vector<InstanceRecord>& rows) {
  struct Bucket {
    const char* label;
    int lo, hi;
  };
  const Bucket buckets[] = {{"<10", 0, 9}, {"10-20", 10, 20}, {"21-30", 21, 30},
                            {"31-40", 31, 40}, {"41-50", 41, 50}, {">50", 51, 1 << 30}};
  std::ostringstream out;
  out << "bucket  inst  avg_dens  avg_blocks  solved  solved%  1pl%  not1pl%  "
         "rt_avg_ms  rt_sd_ms  rt_max_ms  backtr%  satur%  compl%  dec%  kec%  nonpl%  "
         "cr_avg  cr_sd  cr_max  errors\n";
  for (const Bucket& b : buckets) {
    int inst = 0, solved = 0, one = 0, back = 0, errors = 0;
    double dens = 0, blocks = 0;
    Moments runtime, crossings;
    SearchStats total;
    for (const auto& r : rows) {
      if (r.error) {
        ++errors;
        continue;
      }
      if (r.n < b.lo || r.n > b.hi) continue;
      ++inst;
      dens += r.density;
      blocks += r.block_count;
      if (r.verdict == Verdict::Unknown) continue;
      ++solved;
      runtime.add(r.elapsed_ms);
      total.merge(r.stats);
      if (r.solved_by_backtracking) ++back;
      if (r.verdict == Verdict::OnePlanar) {
        ++one;
        crossings.add(*r.crossings);
      }
    }
    if (inst == 0) continue;
    const double sols = static_cast<double>(total.sol_satur + total.sol_compl);
    const double cuts = static_cast<double>(total.total_cuts());
    out << b.label << "  " << inst << "  " << fixed(dens / inst, 2) << "  " << fixed(blocks / inst, 1)
        << "  " << solved << "  " << fixed(pct(solved, inst), 1) << "  " << fixed(pct(one, solved), 1)
        << "  " << fixed(pct(solved - one, solved), 1) << "  " << fixed(runtime.mean(), 2) << "  "
        << fixed(runtime.sd(), 2) << "  " << fixed(runtime.max, 2) << "  " << fixed(pct(back, solved), 1)
        << "  " << fixed(pct(total.sol_satur, sols), 1) << "  " << fixed(pct(total.sol_compl, sols), 1)
        << "  " << fixed(pct(total.cuts_dec, cuts), 1) << "  " << fixed(pct(total.cuts_kec, cuts), 1)
        << "  " << fixed(pct(total.cuts_nonplanar, cuts), 1) << "  " << fixed(crossings.mean(), 2)
        << "  " << fixed(crossings.sd(), 2) << "  " << fixed(crossings.max, 0) << "  " << errors << "\n";
  }
  return out.str();
}

BenchSummary bench(const std::filesystem::path& dir, const BenchOptions& opts,
                   const std::filesystem::path& out) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.filename().string() < b.filename().string(); });

  std::vector<InstanceRecord> results(files.size());
  std::vector<char> keep(files.size(), 1);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      InstanceRecord rec;
      try {
        const Graph g = parse_graph_file(files[i], opts.format);
        rec = run_pipeline(g, opts.pipeline);
      } catch (const Error& e) {
        rec = {};
        rec.error = e.what();
      }
      rec.name = files[i].filename().string();
      if (opts.skip_planar && !rec.error && rec.planar) keep[i] = 0;
      results[i] = std::move(rec);
    }
  };
  const int threads = std::max(1, std::min<int>(opts.threads, static_cast<int>(files.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  BenchSummary summary;
  for (std::size_t i = 0; i < files.size(); ++i)
    if (keep[i]) summary.rows.push_back(std::move(results[i]));

  std::ofstream csv(out, std::ios::binary);
  csv << kCsvHeader << '\n';
  for (const auto& r : summary.rows) csv << csv_row(r) << '\n';

  if (opts.embeddings_dir) {
    std::filesystem::create_directories(*opts.embeddings_dir);
    for (const auto& r : summary.rows) {
      if (!r.embedding) continue;
      std::ofstream emb(*opts.embeddings_dir / (r.name + ".emb"), std::ios::binary);
      emb << write_embedding(*r.embedding);
    }
  }
  summary.report = summarize(summary.rows);
  return summary;
}

}  // namespace oneplanar
