#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <string>

#include "oneplanar/embed.hpp"

namespace oneplanar {

namespace {

std::string dart_name(const Planarization& p, EdgeId s) {
  const int slot = p.half_slot[s];
  if (slot < 0) return std::to_string(p.edge_map[s]);
  const Edge& se = p.star_graph.edge(s);
  const int k = (p.is_dummy(se.u) ? se.u : se.v) - p.original_vertices();
  return "c" + std::to_string(k) + "." + std::to_string(slot);
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "embedding line " + std::to_string(line) + ": " + what, line);
}

int parse_int(std::string_view tok, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) fail(line, "expected integer, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace

std::string write_embedding(const OnePlanarEmbedding& emb) {
  const Planarization& p = emb.planarization;
  std::ostringstream out;
  out << "# oneplanar embedding n=" << p.original_vertices() << " m=" << p.original.num_edges()
      << " crossings=" << emb.crossings.size() << "\n";
  out << "crossings:\n";
  for (const EdgePair& c : emb.crossings) out << c.first << ' ' << c.second << '\n';
  out << "rotation:\n";
  for (VertexId v = 0; v < static_cast<VertexId>(emb.rotation.order.size()); ++v) {
    out << v << ':';
    for (EdgeId s : emb.rotation.order[v]) out << ' ' << dart_name(p, s);
    out << '\n';
  }
  out << "dummies:\n";
  for (std::size_t k = 0; k < p.dummies.size(); ++k)
    out << 'c' << k << ": " << p.dummies[k].pair.first << ' ' << p.dummies[k].pair.second << '\n';
  return out.str();
}

OnePlanarEmbedding parse_embedding(const std::string& text, const Graph& g) {
  enum class Section { None, Crossings, Rotation, Dummies } section = Section::None;
  std::vector<EdgePair> crossings;
  std::vector<std::pair<int, std::vector<std::string>>> rotation_lines;
  std::vector<int> rotation_line_no;
  std::vector<EdgePair> dummy_pairs;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "crossings:") { section = Section::Crossings; continue; }
    if (head == "rotation:") { section = Section::Rotation; continue; }
    if (head == "dummies:") { section = Section::Dummies; continue; }
    std::vector<std::string> rest;
    for (std::string tok; ls >> tok;) rest.push_back(tok);
    switch (section) {
      case Section::None:
        fail(line, "content before first section");
      case Section::Crossings:
        if (rest.size() != 1) fail(line, "crossing needs two edge ids");
        crossings.push_back({parse_int(head, line), parse_int(rest[0], line)});
        break;
      case Section::Rotation: {
        if (head.back() != ':') fail(line, "rotation line must start with 'vId:'");
        rotation_lines.emplace_back(parse_int(std::string_view(head).substr(0, head.size() - 1), line),
                                    std::move(rest));
        rotation_line_no.push_back(line);
        break;
      }
      case Section::Dummies: {
        if (head.size() < 3 || head.front() != 'c' || head.back() != ':' || rest.size() != 2) {
          fail(line, "dummy line must be 'c<k>: e1 e2'");
        }
        const int k = parse_int(std::string_view(head).substr(1, head.size() - 2), line);
        if (k != static_cast<int>(dummy_pairs.size())) fail(line, "dummies must be listed as c0, c1, ...");
        dummy_pairs.push_back({parse_int(rest[0], line), parse_int(rest[1], line)});
        break;
      }
    }
  }

  if (std::set<EdgePair>(crossings.begin(), crossings.end()) !=
          std::set<EdgePair>(dummy_pairs.begin(), dummy_pairs.end()) ||
      crossings.size() != dummy_pairs.size()) {
    fail(line, "crossings and dummies sections disagree");
  }

  OnePlanarEmbedding emb;
  try {
    emb.planarization = planarize(g, dummy_pairs);
  } catch (const Error& e) {
    fail(line, e.what());
  }
  emb.crossings = dummy_pairs;
  const Planarization& q = emb.planarization;
  emb.rotation.order.assign(static_cast<std::size_t>(q.star_graph.num_vertices()), {});
  std::vector<char> seen(emb.rotation.order.size(), 0);
  for (std::size_t i = 0; i < rotation_lines.size(); ++i) {
    const auto& [v, darts] = rotation_lines[i];
    const int at = rotation_line_no[i];
    if (v < 0 || v >= q.star_graph.num_vertices()) fail(at, "vertex out of range");
    if (seen[v]) fail(at, "vertex listed twice");
    seen[v] = 1;
    for (const std::string& d : darts) {
      EdgeId s = -1;
      if (d.front() == 'c') {
        const auto dot = d.find('.');
        if (dot == std::string::npos) fail(at, "dummy dart must be c<k>.<half>");
        const int k = parse_int(std::string_view(d).substr(1, dot - 1), at);
        const int h = parse_int(std::string_view(d).substr(dot + 1), at);
        if (k < 0 || k >= static_cast<int>(q.dummies.size()) || h < 0 || h > 3) fail(at, "bad dummy dart " + d);
        s = q.dummies[k].halves[h];
      } else {
        const int e = parse_int(d, at);
        if (e < 0 || e >= g.num_edges() || q.star_edges[e].size() != 1) fail(at, "bad edge dart " + d);
        s = q.star_edges[e][0];
      }
      emb.rotation.order[v].push_back(s);
    }
  }
  return emb;
}

}  // namespace oneplanar
