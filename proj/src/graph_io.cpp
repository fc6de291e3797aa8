#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "oneplanar/pipeline.hpp"

namespace oneplanar {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what, line);
}

bool parse_long(std::string_view tok, long long& out) {
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

struct LinedEdge {
  long long u, v;
  int line;
};

// Shared by both formats so self-loops and duplicates report their source line.
Graph assemble(int n, const std::vector<LinedEdge>& edges) {
  std::vector<std::pair<int, int>> list;
  std::set<std::pair<long long, long long>> seen;
  for (const auto& e : edges) {
    if (e.u == e.v) {
      throw Error(ErrorCode::SelfLoop, "line " + std::to_string(e.line) + ": self-loop at vertex " +
                                           std::to_string(e.u), e.line);
    }
    if (!seen.insert(std::minmax(e.u, e.v)).second) {
      throw Error(ErrorCode::ParallelEdge, "line " + std::to_string(e.line) + ": parallel edge (" +
                                               std::to_string(e.u) + "," + std::to_string(e.v) + ")",
                  e.line);
    }
    list.emplace_back(static_cast<int>(e.u), static_cast<int>(e.v));
  }
  return build_graph(n, list);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::vector<LinedEdge> edges;
  long long max_id = -1;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks.size() != 2) parse_fail(line, "expected 'u v'");
    long long u = 0, v = 0;
    if (!parse_long(toks[0], u) || !parse_long(toks[1], v) || u < 0 || v < 0 || u > 1'000'000'000 ||
        v > 1'000'000'000) {
      parse_fail(line, "vertex ids must be non-negative integers");
    }
    edges.push_back({u, v, line});
    max_id = std::max({max_id, u, v});
  }
  return assemble(static_cast<int>(max_id + 1), edges);
}

struct Token {
  std::string text;
  int line;
  bool quoted;
};

std::vector<Token> tokenize_gml(const std::string& text) {
  std::vector<Token> out;
  int line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == '[' || c == ']') {
      out.push_back({std::string(1, c), line, false});
      ++i;
    } else if (c == '"') {
      const int start_line = line;
      std::size_t j = i + 1;
      while (j < text.size() && text[j] != '"') {
        if (text[j] == '\n') ++line;
        ++j;
      }
      if (j >= text.size()) parse_fail(start_line, "unterminated string");
      out.push_back({text.substr(i + 1, j - i - 1), start_line, true});
      i = j + 1;
    } else {
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '[' &&
             text[j] != ']' && text[j] != '"')
        ++j;
      out.push_back({text.substr(i, j - i), line, false});
      i = j;
    }
  }
  return out;
}

class GmlReader {
 public:
  explicit GmlReader(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Graph read() {
    while (pos_ < toks_.size()) {
      const Token key = next("key");
      if (key.text == "graph") {
        expect_open();
        read_graph();
        return finish();
      }
      skip_value();
    }
    parse_fail(last_line(), "no 'graph [' block found");
  }

 private:
  int last_line() const { return toks_.empty() ? 1 : toks_.back().line; }

  Token next(const char* what) {
    if (pos_ >= toks_.size()) parse_fail(last_line(), std::string("unexpected end of file, expected ") + what);
    return toks_[pos_++];
  }

  void expect_open() {
    const Token t = next("'['");
    if (t.quoted || t.text != "[") parse_fail(t.line, "expected '['");
  }

  void skip_value() {
    const Token t = next("value");
    if (t.quoted || t.text != "[") return;
    int depth = 1;
    while (depth > 0) {
      const Token u = next("']'");
      if (u.quoted) continue;
      if (u.text == "[") ++depth;
      if (u.text == "]") --depth;
    }
  }

  long long read_int(const char* what) {
    const Token t = next(what);
    long long v = 0;
    if (t.quoted || !parse_long(t.text, v)) parse_fail(t.line, std::string("expected integer ") + what);
    return v;
  }

  void read_graph() {
    while (true) {
      const Token key = next("']'");
      if (!key.quoted && key.text == "]") return;
      if (key.text == "node") {
        expect_open();
        read_node(key.line);
      } else if (key.text == "edge") {
        expect_open();
        read_edge(key.line);
      } else {
        skip_value();
      }
    }
  }

  void read_node(int line) {
    std::optional<long long> id;
    while (true) {
      const Token key = next("']'");
      if (!key.quoted && key.text == "]") break;
      if (key.text == "id") id = read_int("node id");
      else skip_value();
    }
    if (!id) parse_fail(line, "node without id");
    if (!index_.emplace(*id, static_cast<int>(index_.size())).second) parse_fail(line, "duplicate node id");
  }

  void read_edge(int line) {
    std::optional<long long> s, t;
    while (true) {
      const Token key = next("']'");
      if (!key.quoted && key.text == "]") break;
      if (key.text == "source") s = read_int("edge source");
      else if (key.text == "target") t = read_int("edge target");
      else skip_value();
    }
    if (!s || !t) parse_fail(line, "edge needs source and target");
    raw_edges_.push_back({*s, *t, line});
  }

  Graph finish() {
    std::vector<LinedEdge> edges;
    for (const auto& e : raw_edges_) {
      const auto a = index_.find(e.u);
      const auto b = index_.find(e.v);
      if (a == index_.end() || b == index_.end()) parse_fail(e.line, "edge references undeclared node");
      edges.push_back({a->second, b->second, e.line});
    }
    return assemble(static_cast<int>(index_.size()), edges);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<long long, int> index_;
  std::vector<LinedEdge> raw_edges_;
};

bool looks_like_gml(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.front() == '#') {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    return !std::isdigit(static_cast<unsigned char>(tok.front()));
  }
  return false;
}

}  // namespace

Graph parse_graph_text(const std::string& text, GraphFormat format) {
  if (format == GraphFormat::Auto) format = looks_like_gml(text) ? GraphFormat::Gml : GraphFormat::EdgeList;
  if (format == GraphFormat::Gml) return GmlReader(tokenize_gml(text)).read();
  return parse_edge_list(text);
}

Graph parse_graph_file(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string(), 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (format == GraphFormat::Auto) {
    const std::string ext = path.extension().string();
    if (ext == ".gml") format = GraphFormat::Gml;
    else if (ext == ".txt" || ext == ".edges" || ext == ".el" || ext == ".edgelist") format = GraphFormat::EdgeList;
  }
  return parse_graph_text(buf.str(), format);
}

}  // namespace oneplanar
