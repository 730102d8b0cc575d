#ifndef RANDIC_MIXED_GRAPH_HPP
#define RANDIC_MIXED_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "randic/rational.hpp"
#include "randic/sixth_root.hpp"

namespace randic {

/// Vertices are labeled 1..n throughout the public API.
using Vertex = int;

enum class EdgeKind { Unoriented, Arc };

/// An un-oriented edge {from, to} (stored with from < to) or an arc from -> to.
struct Edge {
  Vertex from = 0;
  Vertex to = 0;
  EdgeKind kind = EdgeKind::Unoriented;

  static Edge unoriented(Vertex u, Vertex v);
  static Edge arc(Vertex tail, Vertex head) { return {tail, head, EdgeKind::Arc}; }

  Vertex low() const { return from < to ? from : to; }
  Vertex high() const { return from < to ? to : from; }

  /// Gain of the oriented pair (u, v): 1 for un-oriented edges, w along an
  /// arc, conj(w) against it. (u, v) must be the endpoints of this edge.
  SixthRoot gain(Vertex u, Vertex v) const;

  auto operator<=>(const Edge&) const = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parse failure; what() names the offending line.
class ParseError : public GraphError {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

/// A matrix or theorem precondition on the graph does not hold.
class PreconditionError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// Mixed graph: each vertex pair carries nothing, an un-oriented edge, or a
/// single arc. Immutable after construction.
class MixedGraph {
 public:
  /// Throws GraphError when n < 1, an endpoint is out of range, an edge is a
  /// loop, or a vertex pair appears twice.
  explicit MixedGraph(int n, std::vector<Edge> edges = {});

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_.at(index); }

  /// Index of the edge joining u and v in either orientation.
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return edge_index(u, v).has_value(); }

  /// Neighbours in the underlying graph, ascending.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v - 1); }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  MixedGraph without_edge(std::size_t index) const;
  /// Same graph with every edge made un-oriented.
  MixedGraph underlying() const;
  /// Relabels vertex v as perm[v - 1]; perm must be a permutation of 1..n.
  MixedGraph relabeled(std::span<const Vertex> perm) const;

  /// Equality of edge sets, ignoring edge order.
  bool operator==(const MixedGraph& other) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<int> slot_;  // n*n lookup, -1 when absent
};

MixedGraph parse_graph(std::string_view text);
std::string serialize_graph(const MixedGraph& g);

/// d[v - 1] is the degree of v in the underlying graph.
using DegreeVector = std::vector<int>;
DegreeVector degrees(const MixedGraph& g);

struct Bipartition {
  bool bipartite = false;
  /// Colour 0/1 per vertex (index v - 1); empty unless bipartite.
  std::vector<int> coloring;
};
Bipartition is_bipartite(const MixedGraph& g);
bool is_connected(const MixedGraph& g);
/// First vertex of degree zero, if any.
std::optional<Vertex> isolated_vertex(const MixedGraph& g);

/// Sum over underlying edges of (d_u d_v)^alpha, exact for integer alpha.
/// Throws PreconditionError when g has no edges.
Rational general_randic_index(const MixedGraph& g, int alpha);
double general_randic_index(const MixedGraph& g, double alpha);

}  // namespace randic

#endif  // RANDIC_MIXED_GRAPH_HPP
