#include "kcore/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <string_view>

namespace kcore {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n > std::numeric_limits<Vertex>::max()) {
    throw std::invalid_argument("vertex count exceeds 32-bit id space");
  }
  Graph g;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                  ") out of range for n=" + std::to_string(n));
    }
    if (e.u == e.v) continue;
    g.edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.adjacency_.resize(2 * g.edges_.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted, so filling in edge order leaves every list sorted.
  for (const Edge& e : g.edges_) g.adjacency_[cursor[e.u]++] = e.v;
  for (const Edge& e : g.edges_) g.adjacency_[cursor[e.v]++] = e.u;
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.adjacency_.begin() + g.offsets_[v], g.adjacency_.begin() + g.offsets_[v + 1]);
  }
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  if (u >= num_vertices() || v >= num_vertices()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  InducedSubgraph out;
  out.vertices.assign(vertices.begin(), vertices.end());
  std::sort(out.vertices.begin(), out.vertices.end());
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());

  constexpr Vertex kAbsent = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> local(g.num_vertices(), kAbsent);
  for (std::size_t i = 0; i < out.vertices.size(); ++i) {
    if (out.vertices[i] >= g.num_vertices()) throw std::invalid_argument("vertex out of range");
    local[out.vertices[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (Vertex v : out.vertices) {
    for (Vertex w : g.neighbors(v)) {
      if (v < w && local[w] != kAbsent) edges.push_back({local[v], local[w]});
    }
  }
  out.graph = Graph::from_edges(out.vertices.size(), edges);
  return out;
}

namespace {

std::string_view trim_left(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
  return s.substr(i);
}

// Splits on whitespace. Returns false if more than `max_tokens` are present.
bool tokenize(std::string_view line, std::vector<std::string_view>& tokens, std::size_t max_tokens) {
  tokens.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (tokens.size() == max_tokens) return false;
    tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return true;
}

Vertex parse_vertex(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line_no, "expected nonnegative integer, got '" + std::string(token) + "'");
  }
  if (value >= std::numeric_limits<Vertex>::max()) {
    throw ParseError(line_no, "vertex id too large: " + std::string(token));
  }
  return static_cast<Vertex>(value);
}

std::optional<std::size_t> parse_snap_header(std::string_view comment) {
  constexpr std::string_view kKey = "Nodes:";
  auto pos = comment.find(kKey);
  if (pos == std::string_view::npos) return std::nullopt;
  auto rest = trim_left(comment.substr(pos + kKey.size()));
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
  if (ec != std::errc{} || ptr == rest.data()) return std::nullopt;
  return value;
}

}  // namespace

LoadResult load_edge_list(std::istream& in, const LoadOptions& options) {
  LoadResult result;
  std::vector<Edge> raw;
  std::vector<std::string_view> tokens;
  std::size_t n = options.num_vertices.value_or(0);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto body = trim_left(line);
    if (body.empty()) continue;
    if (body.front() == '#') {
      if (options.honor_header) {
        if (auto header_n = parse_snap_header(body)) n = std::max(n, *header_n);
      }
      continue;
    }
    if (!tokenize(body, tokens, 2) || tokens.size() != 2) {
      throw ParseError(line_no, "expected exactly two vertex ids");
    }
    Vertex u = parse_vertex(tokens[0], line_no);
    Vertex v = parse_vertex(tokens[1], line_no);
    n = std::max<std::size_t>(n, std::max(u, v) + std::size_t{1});
    if (u == v) {
      ++result.self_loops_dropped;
      continue;
    }
    raw.push_back({u, v});
  }
  result.lines_read = line_no;
  result.graph = Graph::from_edges(n, raw);
  result.duplicates_dropped = raw.size() - result.graph.num_edges();
  return result;
}

LoadResult load_edge_list_file(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list: " + path);
  return load_edge_list(in, options);
}

std::vector<EdgeEvent> load_events(std::istream& in) {
  std::vector<EdgeEvent> events;
  std::vector<std::string_view> tokens;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto body = trim_left(line);
    if (body.empty() || body.front() == '#') continue;
    if (!tokenize(body, tokens, 3) || tokens.size() != 3) {
      throw ParseError(line_no, "expected '+ u v' or '- u v'");
    }
    EventKind kind;
    if (tokens[0] == "+") {
      kind = EventKind::kInsert;
    } else if (tokens[0] == "-") {
      kind = EventKind::kDelete;
    } else {
      throw ParseError(line_no, "unknown event marker '" + std::string(tokens[0]) + "'");
    }
    Vertex u = parse_vertex(tokens[1], line_no);
    Vertex v = parse_vertex(tokens[2], line_no);
    if (u == v) throw ParseError(line_no, "self-loop event");
    events.push_back({kind, u, v});
  }
  return events;
}

std::vector<EdgeEvent> load_events_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open event file: " + path);
  return load_events(in);
}

}  // namespace kcore
