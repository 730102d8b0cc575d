#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "randic/enumeration.hpp"
#include "randic/mixed_graph.hpp"

using namespace randic;

TEST_CASE("parse the smallest graph") {
  const MixedGraph g = parse_graph("mixedgraph v1\nvertices 2\n1 -- 2");
  CHECK(g.order() == 2);
  REQUIRE(g.size() == 1);
  CHECK(g.edge(0) == Edge::unoriented(1, 2));
}

TEST_CASE("parse comments, blank lines, CRLF and arcs") {
  const MixedGraph g =
      parse_graph("mixedgraph v1\r\nvertices 3  # three\r\n\r\n# comment\r\n3 -> 1\r\n 2   --   3 \r\n");
  CHECK(g.size() == 2);
  CHECK(g.adjacent(1, 3));
  CHECK(g.edge(*g.edge_index(1, 3)).kind == EdgeKind::Arc);
  CHECK(g.edge(*g.edge_index(3, 1)).from == 3);
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const char* text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("mixedgraph v2\nvertices 2\n") == 1);
  CHECK(line_of("mixedgraph v1\n1 -- 2\n") == 2);
  CHECK(line_of("mixedgraph v1\nvertices 2\n1 -- 3\n") == 3);
  CHECK(line_of("mixedgraph v1\nvertices 2\n1 -- 1\n") == 3);
  CHECK(line_of("mixedgraph v1\nvertices 2\n1 => 2\n") == 3);
  CHECK(line_of("mixedgraph v1\nvertices 2\n1 -- 2\n\n2 -> 1\n") == 5);
  CHECK_THROWS_WITH_AS(parse_graph("mixedgraph v1\nvertices 2\n1 -- 2\n2 -> 1"),
                       doctest::Contains("duplicate pair {1,2}"), ParseError);
  CHECK_THROWS_AS(parse_graph(""), ParseError);
}

TEST_CASE("serialize round-trips every small graph") {
  for (int n = 1; n <= 4; ++n) {
    for_each_mixed_graph(n, {}, [&](const MixedGraph& g) {
      const std::string text = serialize_graph(g);
      CHECK(text.find('\r') == std::string::npos);
      CHECK(parse_graph(text) == g);
    });
  }
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(MixedGraph(0), GraphError);
  CHECK_THROWS_AS(MixedGraph(2, {Edge::unoriented(1, 3)}), GraphError);
  CHECK_THROWS_AS(MixedGraph(2, {Edge::arc(2, 2)}), GraphError);
  CHECK_THROWS_AS(MixedGraph(2, {Edge::arc(1, 2), Edge::arc(2, 1)}), GraphError);
}

TEST_CASE("degrees, bipartiteness, connectivity") {
  const MixedGraph p3 = oracle::path(3);
  CHECK(degrees(p3) == DegreeVector{1, 2, 1});
  CHECK(is_bipartite(p3).bipartite);
  CHECK(is_connected(p3));
  CHECK_FALSE(is_bipartite(oracle::cycle(3)).bipartite);
  CHECK(is_bipartite(oracle::cycle(4)).bipartite);
  const MixedGraph sparse(4, {Edge::unoriented(1, 2)});
  CHECK_FALSE(is_connected(sparse));
  CHECK(isolated_vertex(sparse) == 3);

  for (int n = 2; n <= 4; ++n) {
    for_each_mixed_graph(n, {}, [&](const MixedGraph& g) {
      const DegreeVector d = degrees(g);
      CHECK(std::accumulate(d.begin(), d.end(), 0) == 2 * static_cast<int>(g.size()));
      const Bipartition b = is_bipartite(g);
      if (b.bipartite) {
        for (const Edge& e : g.edges()) CHECK(b.coloring[e.from - 1] != b.coloring[e.to - 1]);
      } else {
        CHECK(oracle::count_cycles_by_permutation(g) > 0);
      }
    });
  }
}

TEST_CASE("general Randic index") {
  CHECK(general_randic_index(oracle::path(3), -1) == Rational(1));
  CHECK(general_randic_index(oracle::cycle(3), -1) == Rational(3, 4));
  CHECK(general_randic_index(oracle::path(3), 1) == Rational(4));
  CHECK(general_randic_index(oracle::path(3), -0.5) == doctest::Approx(std::sqrt(2.0)));
  CHECK(general_randic_index(oracle::directed_cycle(3), -1) ==
        general_randic_index(oracle::cycle(3), -1));
  CHECK_THROWS_AS(general_randic_index(MixedGraph(2), -1), PreconditionError);
}

TEST_CASE("relabeling permutes degrees and preserves edge kinds") {
  const MixedGraph g(4, {Edge::arc(1, 2), Edge::unoriented(2, 3), Edge::arc(4, 3)});
  const std::vector<Vertex> perm{3, 1, 4, 2};  // v -> perm[v-1]
  const MixedGraph h = g.relabeled(perm);
  CHECK(h.edge(*h.edge_index(3, 1)).kind == EdgeKind::Arc);
  CHECK(h.edge(*h.edge_index(3, 1)).from == 3);
  CHECK(h.edge(*h.edge_index(1, 4)).kind == EdgeKind::Unoriented);
  for (Vertex v = 1; v <= 4; ++v) CHECK(h.degree(perm[v - 1]) == g.degree(v));
}

TEST_CASE("cycle enumeration agrees with permutation counting") {
  CHECK(enumerate_cycles(oracle::path(4)).empty());
  CHECK(enumerate_cycles(oracle::complete(4)).size() == 7);
  for (int n = 3; n <= 5; ++n) {
    for (const MixedGraph& g : sample_mixed_graphs(n, 60, 11 + n)) {
      const auto cycles = enumerate_cycles(g);
      CHECK(cycles.size() == oracle::count_cycles_by_permutation(g));
      std::set<std::vector<Vertex>> unique(cycles.begin(), cycles.end());
      CHECK(unique.size() == cycles.size());
    }
  }
}

TEST_CASE("cycle gains of the triangle family") {
  const std::vector<Vertex> c{1, 2, 3};
  CHECK(classify(cycle_gain(oracle::cycle(3), c)) == CycleGainClass::Positive);
  CHECK(classify(cycle_gain(oracle::directed_cycle(3), c)) == CycleGainClass::Negative);
  const MixedGraph one_arc(3, {Edge::arc(1, 2), Edge::unoriented(2, 3), Edge::unoriented(1, 3)});
  CHECK(classify(cycle_gain(one_arc, c)) == CycleGainClass::SemiPositive);
  const MixedGraph two_arcs(3, {Edge::arc(1, 2), Edge::arc(2, 3), Edge::unoriented(1, 3)});
  CHECK(classify(cycle_gain(two_arcs, c)) == CycleGainClass::SemiNegative);
  CHECK(cycle_gain(one_arc, std::vector<Vertex>{1, 3, 2}) == cycle_gain(one_arc, c).inverse());
}

TEST_CASE("elementary subgraphs of small graphs") {
  CHECK(enumerate_elementary_subgraphs(oracle::path(3), 3).empty());
  const auto p3_two = enumerate_elementary_subgraphs(oracle::path(3), 2);
  REQUIRE(p3_two.size() == 2);
  for (const auto& s : p3_two) {
    CHECK(s.weight == Rational(1, 2));
    CHECK(s.rank == 1);
    CHECK(s.signed_term() == Rational(-1, 2));
  }
  const auto c3 = enumerate_elementary_subgraphs(oracle::cycle(3), 3);
  REQUIRE(c3.size() == 1);
  CHECK(c3[0].cycles == 1);
  CHECK(c3[0].positive == 1);
  CHECK(c3[0].weight == Rational(1, 8));
  CHECK(c3[0].signed_term() == Rational(1, 4));
}

TEST_CASE("elementary subgraph sums agree with edge-subset brute force") {
  for (int n = 2; n <= 5; ++n) {
    EnumerationOptions opts;
    opts.min_degree = 1;
    for (const MixedGraph& g : sample_mixed_graphs(n, 80, 100 + n, opts)) {
      for (int k = 0; k <= n; ++k) {
        std::size_t brute_count = 0;
        const Rational brute = oracle::elementary_sum_by_edge_subsets(g, k, &brute_count);
        Rational sum = 0;
        std::size_t count = 0;
        for_each_elementary_subgraph(g, k, [&](const ElementarySubgraph& s) {
          sum += s.signed_term();
          ++count;
          CHECK(s.order == k);
          CHECK(s.positive + s.negative + s.semi_positive + s.semi_negative == s.cycles);
          CHECK(s.rank == s.order - s.components_count);
        });
        CHECK(count == brute_count);
        CHECK(sum == brute);
      }
    }
  }
}

TEST_CASE("weight uses host-graph degrees") {
  // In K4 each covered vertex contributes 1/3 regardless of the subgraph.
  for (const auto& s : enumerate_elementary_subgraphs(oracle::complete(4), 4)) {
    CHECK(s.weight == Rational(1, 81));
  }
}

TEST_CASE("exhaustive enumeration counts") {
  EnumerationOptions connected;
  connected.connected_only = true;
  const auto two = enumerate_mixed_graphs(2, connected);
  REQUIRE(two.size() == 3);
  CHECK(two[0] == MixedGraph(2, {Edge::unoriented(1, 2)}));
  CHECK(two[1] == MixedGraph(2, {Edge::arc(1, 2)}));
  CHECK(two[2] == MixedGraph(2, {Edge::arc(2, 1)}));
  CHECK(enumerate_mixed_graphs(3).size() == 64);
  // Connected labeled graphs on 3 vertices: 3 paths with 2 edges (3^2 each) and the triangle (3^3).
  CHECK(enumerate_mixed_graphs(3, connected).size() == 3 * 9 + 27);
  // Connected labeled graphs on 4 vertices by edge count: 16 trees, 15 with 4 edges,
  // 6 with 5 edges, 1 with 6 edges; each edge takes 3 states.
  CHECK(enumerate_mixed_graphs(4, connected).size() == 16 * 27 + 15 * 81 + 6 * 243 + 729);
  EnumerationOptions too_big;
  too_big.max_vertices = 3;
  CHECK_THROWS_AS(enumerate_mixed_graphs(4, too_big), GraphError);
}

TEST_CASE("sampling is deterministic and respects the filter") {
  EnumerationOptions opts;
  opts.connected_only = true;
  opts.min_degree = 2;
  const auto a = sample_mixed_graphs(6, 50, 7, opts);
  const auto b = sample_mixed_graphs(6, 50, 7, opts);
  REQUIRE(a.size() == 50);
  CHECK(a == b);
  CHECK(a != sample_mixed_graphs(6, 50, 8, opts));
  for (const auto& g : a) {
    CHECK(is_connected(g));
    for (Vertex v = 1; v <= 6; ++v) CHECK(g.degree(v) >= 2);
  }
}

TEST_CASE("sampling covers every pair state") {
  std::map<int, int> seen;
  for (const auto& g : sample_mixed_graphs(2, 400, 3)) {
    seen[g.size() == 0 ? 0 : g.edge(0).kind == EdgeKind::Unoriented ? 1 : g.edge(0).from == 1 ? 2 : 3]++;
  }
  CHECK(seen.size() == 4);
  for (const auto& [state, count] : seen) CHECK(count > 60);
}
