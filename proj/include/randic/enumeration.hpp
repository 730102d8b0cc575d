#ifndef RANDIC_ENUMERATION_HPP
#define RANDIC_ENUMERATION_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "randic/mixed_graph.hpp"

namespace randic {

/// Simple cycle of the underlying graph in canonical form: it starts at its
/// smallest vertex and the second vertex is the smaller of that vertex's two
/// cycle neighbours.
using Cycle = std::vector<Vertex>;

/// All simple cycles (length >= 3), ordered by length then lexicographically.
std::vector<Cycle> enumerate_cycles(const MixedGraph& g);

/// Product of the graph's own gains along the cycle in the listed direction.
SixthRoot cycle_gain(const MixedGraph& g, std::span<const Vertex> cycle);

struct EdgeComponent {
  Vertex u;
  Vertex v;  // u < v
  bool operator==(const EdgeComponent&) const = default;
};
struct CycleComponent {
  Cycle cycle;
  CycleGainClass gain_class;
  bool operator==(const CycleComponent&) const = default;
};
using ElementaryComponent = std::variant<EdgeComponent, CycleComponent>;

/// Vertex-disjoint union of single edges and cycles, with the counters that
/// enter the determinant expansion.
struct ElementarySubgraph {
  std::vector<ElementaryComponent> components;
  int order = 0;        // covered vertices
  int components_count = 0;  // c
  int rank = 0;         // r = order - c
  int cycles = 0;       // s, cycles of length >= 3
  int positive = 0;     // l_p
  int negative = 0;     // l_n
  int semi_positive = 0;  // l_sp
  int semi_negative = 0;  // l_sn
  /// Product of 1/d_i over covered vertices, degrees taken in the host graph.
  Rational weight;

  /// (-1)^{r + l_n + l_sn} 2^{l_n + l_p} Q.
  Rational signed_term() const;
};

/// Every elementary subgraph covering exactly `order` vertices.
std::vector<ElementarySubgraph> enumerate_elementary_subgraphs(const MixedGraph& g, int order);

/// Streaming form; the callback sees each subgraph once.
void for_each_elementary_subgraph(const MixedGraph& g, int order,
                                  const std::function<void(const ElementarySubgraph&)>& fn);

struct EnumerationOptions {
  bool connected_only = false;
  int min_degree = 0;
  int max_vertices = 6;
};

/// Per-pair state in the edge-state encoding: pairs (i, j), i < j, are
/// ordered (1,2), (1,3), ..., (1,n), (2,3), ...
enum class PairState : std::uint8_t { Absent = 0, Unoriented = 1, Forward = 2, Backward = 3 };

MixedGraph graph_from_states(int n, std::span<const PairState> states);
std::size_t pair_count(int n);

/// Every labeled mixed graph on n vertices passing the filter. Graphs are
/// visited in increasing order of the base-4 number whose most significant
/// digit is the state of pair (1,2). Throws GraphError above max_vertices.
void for_each_mixed_graph(int n, const EnumerationOptions& opts,
                          const std::function<void(const MixedGraph&)>& fn);
std::vector<MixedGraph> enumerate_mixed_graphs(int n, const EnumerationOptions& opts = {});

/// `count` graphs drawn by uniform choice of edge-state vectors from a
/// 64-bit Mersenne Twister seeded with `seed`, rejecting filter failures.
/// Deterministic for a fixed (n, count, seed, opts).
std::vector<MixedGraph> sample_mixed_graphs(int n, std::size_t count, std::uint64_t seed,
                                            const EnumerationOptions& opts = {});

bool passes_filter(const MixedGraph& g, const EnumerationOptions& opts);

}  // namespace randic

#endif  // RANDIC_ENUMERATION_HPP
