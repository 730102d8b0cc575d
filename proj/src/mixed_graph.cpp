#include "randic/mixed_graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <queue>
#include <sstream>

namespace randic {

std::string to_fraction_string(const Rational& value) {
  const auto num = boost::multiprecision::numerator(value);
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Edge Edge::unoriented(Vertex u, Vertex v) {
  return u < v ? Edge{u, v, EdgeKind::Unoriented} : Edge{v, u, EdgeKind::Unoriented};
}

SixthRoot Edge::gain(Vertex u, Vertex v) const {
  if (kind == EdgeKind::Unoriented) return SixthRoot::one();
  if (u == from && v == to) return SixthRoot::omega();
  return SixthRoot::omega_bar();
}

ParseError::ParseError(int line, const std::string& message)
    : GraphError("line " + std::to_string(line) + ": " + message), line_(line) {}

MixedGraph::MixedGraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw GraphError("vertex count must be at least 1");
  adjacency_.resize(n_);
  slot_.assign(static_cast<std::size_t>(n_) * n_, -1);
  for (std::size_t idx = 0; idx < edges_.size(); ++idx) {
    Edge& e = edges_[idx];
    if (e.from < 1 || e.from > n_ || e.to < 1 || e.to > n_) {
      throw GraphError("edge " + std::to_string(e.from) + "," + std::to_string(e.to) +
                       " has an endpoint outside 1.." + std::to_string(n_));
    }
    if (e.from == e.to) throw GraphError("self-loop at vertex " + std::to_string(e.from));
    if (e.kind == EdgeKind::Unoriented && e.from > e.to) std::swap(e.from, e.to);
    const auto a = static_cast<std::size_t>(e.low() - 1);
    const auto b = static_cast<std::size_t>(e.high() - 1);
    if (slot_[a * n_ + b] != -1) {
      throw GraphError("duplicate pair {" + std::to_string(e.low()) + "," +
                       std::to_string(e.high()) + "}");
    }
    slot_[a * n_ + b] = slot_[b * n_ + a] = static_cast<int>(idx);
    adjacency_[a].push_back(e.high());
    adjacency_[b].push_back(e.low());
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

std::optional<std::size_t> MixedGraph::edge_index(Vertex u, Vertex v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_) return std::nullopt;
  const int s = slot_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)];
  if (s < 0) return std::nullopt;
  return static_cast<std::size_t>(s);
}

MixedGraph MixedGraph::without_edge(std::size_t index) const {
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i != index) kept.push_back(edges_[i]);
  }
  return MixedGraph(n_, std::move(kept));
}

MixedGraph MixedGraph::underlying() const {
  std::vector<Edge> plain;
  plain.reserve(edges_.size());
  for (const Edge& e : edges_) plain.push_back(Edge::unoriented(e.from, e.to));
  return MixedGraph(n_, std::move(plain));
}

MixedGraph MixedGraph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw GraphError("permutation has wrong length");
  std::vector<Edge> moved;
  moved.reserve(edges_.size());
  for (const Edge& e : edges_) {
    const Vertex a = perm[e.from - 1];
    const Vertex b = perm[e.to - 1];
    moved.push_back(e.kind == EdgeKind::Arc ? Edge::arc(a, b) : Edge::unoriented(a, b));
  }
  return MixedGraph(n_, std::move(moved));
}

bool MixedGraph::operator==(const MixedGraph& other) const {
  if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
  auto a = edges_;
  auto b = other.edges_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

int parse_int(std::string_view token, int line, const char* what) {
  int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || token.empty() || token.front() == '-' ||
      token.front() == '+') {
    throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

MixedGraph parse_graph(std::string_view text) {
  int line_no = 0;
  int n = 0;
  bool have_header = false;
  bool have_vertices = false;
  std::vector<Edge> edges;
  std::vector<int> seen;  // pair -> line that introduced it

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

    if (!have_header) {
      if (raw != "mixedgraph v1") throw ParseError(line_no, "expected header 'mixedgraph v1'");
      have_header = true;
      continue;
    }
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const auto tokens = tokenize(raw);
    if (!have_vertices) {
      if (tokens.size() != 2 || tokens[0] != "vertices") {
        throw ParseError(line_no, "expected 'vertices <n>'");
      }
      n = parse_int(tokens[1], line_no, "vertex count");
      if (n < 1) throw ParseError(line_no, "vertex count must be at least 1");
      seen.assign(static_cast<std::size_t>(n) * n, 0);
      have_vertices = true;
      continue;
    }
    if (tokens.empty()) continue;
    if (tokens.size() != 3 || (tokens[1] != "--" && tokens[1] != "->")) {
      throw ParseError(line_no, "expected '<u> -- <v>' or '<u> -> <v>'");
    }
    const int u = parse_int(tokens[0], line_no, "vertex");
    const int v = parse_int(tokens[2], line_no, "vertex");
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ParseError(line_no, "vertex out of range 1.." + std::to_string(n));
    }
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    const auto key = static_cast<std::size_t>(std::min(u, v) - 1) * n + (std::max(u, v) - 1);
    if (seen[key] != 0) {
      throw ParseError(line_no, "duplicate pair {" + std::to_string(std::min(u, v)) + "," +
                                    std::to_string(std::max(u, v)) + "} (first on line " +
                                    std::to_string(seen[key]) + ")");
    }
    seen[key] = line_no;
    edges.push_back(tokens[1] == "--" ? Edge::unoriented(u, v) : Edge::arc(u, v));
  }
  if (!have_header) throw ParseError(1, "empty input");
  if (!have_vertices) throw ParseError(line_no, "missing 'vertices <n>' line");
  return MixedGraph(n, std::move(edges));
}

std::string serialize_graph(const MixedGraph& g) {
  std::ostringstream out;
  out << "mixedgraph v1\nvertices " << g.order() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.from << (e.kind == EdgeKind::Arc ? " -> " : " -- ") << e.to << '\n';
  }
  return out.str();
}

DegreeVector degrees(const MixedGraph& g) {
  DegreeVector d(g.order());
  for (Vertex v = 1; v <= g.order(); ++v) d[v - 1] = g.degree(v);
  return d;
}

Bipartition is_bipartite(const MixedGraph& g) {
  std::vector<int> color(g.order(), -1);
  for (Vertex root = 1; root <= g.order(); ++root) {
    if (color[root - 1] != -1) continue;
    color[root - 1] = 0;
    std::queue<Vertex> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const Vertex u = frontier.front();
      frontier.pop();
      for (Vertex w : g.neighbors(u)) {
        if (color[w - 1] == -1) {
          color[w - 1] = 1 - color[u - 1];
          frontier.push(w);
        } else if (color[w - 1] == color[u - 1]) {
          return {};
        }
      }
    }
  }
  return {true, std::move(color)};
}

bool is_connected(const MixedGraph& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{1};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w - 1]) {
        seen[w - 1] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.order();
}

std::optional<Vertex> isolated_vertex(const MixedGraph& g) {
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (g.degree(v) == 0) return v;
  }
  return std::nullopt;
}

Rational general_randic_index(const MixedGraph& g, int alpha) {
  if (g.size() == 0) throw PreconditionError("general Randic index needs at least one edge");
  Rational total = 0;
  for (const Edge& e : g.edges()) {
    const Rational product = g.degree(e.from) * g.degree(e.to);
    Rational term = 1;
    const int magnitude = alpha < 0 ? -alpha : alpha;
    for (int i = 0; i < magnitude; ++i) term *= product;
    total += alpha < 0 ? Rational(1) / term : term;
  }
  return total;
}

double general_randic_index(const MixedGraph& g, double alpha) {
  if (g.size() == 0) throw PreconditionError("general Randic index needs at least one edge");
  double total = 0.0;
  for (const Edge& e : g.edges()) {
    total += std::pow(static_cast<double>(g.degree(e.from)) * g.degree(e.to), alpha);
  }
  return total;
}

}  // namespace randic
