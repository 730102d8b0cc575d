#include "randic/enumeration.hpp"

#include <algorithm>
#include <random>

namespace randic {

std::vector<Cycle> enumerate_cycles(const MixedGraph& g) {
  std::vector<Cycle> cycles;
  const int n = g.order();
  std::vector<char> on_path(n + 1, 0);
  Cycle path;

  // Depth-first search from each start s through vertices larger than s.
  auto extend = [&](auto&& self, Vertex s, Vertex u) -> void {
    for (Vertex w : g.neighbors(u)) {
      if (w == s) {
        if (path.size() >= 3 && path[1] < path.back()) cycles.push_back(path);
      } else if (w > s && !on_path[w]) {
        on_path[w] = 1;
        path.push_back(w);
        self(self, s, w);
        path.pop_back();
        on_path[w] = 0;
      }
    }
  };
  for (Vertex s = 1; s <= n; ++s) {
    path.assign(1, s);
    on_path[s] = 1;
    extend(extend, s, s);
    on_path[s] = 0;
  }
  std::sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return cycles;
}

SixthRoot cycle_gain(const MixedGraph& g, std::span<const Vertex> cycle) {
  if (cycle.size() < 3) throw GraphError("a cycle needs at least three vertices");
  SixthRoot total;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex u = cycle[i];
    const Vertex v = cycle[(i + 1) % cycle.size()];
    const auto idx = g.edge_index(u, v);
    if (!idx) {
      throw GraphError("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                       " are not adjacent");
    }
    total *= g.edge(*idx).gain(u, v);
  }
  return total;
}

Rational ElementarySubgraph::signed_term() const {
  Rational term = weight;
  for (int i = 0; i < negative + positive; ++i) term *= 2;
  if ((rank + negative + semi_negative) % 2 != 0) term = -term;
  return term;
}

void for_each_elementary_subgraph(const MixedGraph& g, int order,
                                  const std::function<void(const ElementarySubgraph&)>& fn) {
  const int n = g.order();
  if (order < 0 || order > n) return;
  if (n > 64) throw GraphError("elementary subgraph enumeration supports at most 64 vertices");

  struct CycleInfo {
    Cycle cycle;
    std::uint64_t mask;
    CycleGainClass gain_class;
  };
  std::vector<std::vector<CycleInfo>> cycles_from(n + 1);
  for (Cycle& c : enumerate_cycles(g)) {
    std::uint64_t mask = 0;
    for (Vertex v : c) mask |= std::uint64_t{1} << (v - 1);
    const CycleGainClass cls = classify(cycle_gain(g, c));
    const Vertex start = c.front();
    cycles_from[start].push_back({std::move(c), mask, cls});
  }
  const DegreeVector d = degrees(g);

  std::vector<ElementaryComponent> chosen;
  auto emit = [&](std::uint64_t mask) {
    ElementarySubgraph sub;
    sub.components = chosen;
    sub.order = order;
    sub.components_count = static_cast<int>(chosen.size());
    sub.rank = order - sub.components_count;
    boost::multiprecision::cpp_int denominator = 1;
    for (Vertex v = 1; v <= n; ++v) {
      if (mask & (std::uint64_t{1} << (v - 1))) denominator *= d[v - 1];
    }
    sub.weight = Rational(boost::multiprecision::cpp_int(1), denominator);
    for (const auto& comp : chosen) {
      const auto* cyc = std::get_if<CycleComponent>(&comp);
      if (!cyc) continue;
      ++sub.cycles;
      switch (cyc->gain_class) {
        case CycleGainClass::Positive: ++sub.positive; break;
        case CycleGainClass::Negative: ++sub.negative; break;
        case CycleGainClass::SemiPositive: ++sub.semi_positive; break;
        case CycleGainClass::SemiNegative: ++sub.semi_negative; break;
      }
    }
    fn(sub);
  };

  // Each component is introduced at its smallest vertex, so every subgraph
  // is produced exactly once.
  auto visit = [&](auto&& self, Vertex v, int covered, std::uint64_t mask) -> void {
    if (covered == order) {
      emit(mask);
      return;
    }
    if (v > n || covered + (n - v + 1) < order) return;
    const std::uint64_t bit = std::uint64_t{1} << (v - 1);
    if (mask & bit) {
      self(self, v + 1, covered, mask);
      return;
    }
    self(self, v + 1, covered, mask);
    if (covered + 2 <= order) {
      for (Vertex w : g.neighbors(v)) {
        const std::uint64_t wbit = std::uint64_t{1} << (w - 1);
        if (w < v || (mask & wbit)) continue;
        chosen.emplace_back(EdgeComponent{v, w});
        self(self, v + 1, covered + 2, mask | bit | wbit);
        chosen.pop_back();
      }
    }
    for (const CycleInfo& info : cycles_from[v]) {
      const int len = static_cast<int>(info.cycle.size());
      if (covered + len > order || (mask & info.mask)) continue;
      chosen.emplace_back(CycleComponent{info.cycle, info.gain_class});
      self(self, v + 1, covered + len, mask | info.mask);
      chosen.pop_back();
    }
  };
  visit(visit, 1, 0, 0);
}

std::vector<ElementarySubgraph> enumerate_elementary_subgraphs(const MixedGraph& g, int order) {
  std::vector<ElementarySubgraph> out;
  for_each_elementary_subgraph(g, order, [&](const ElementarySubgraph& s) { out.push_back(s); });
  return out;
}

std::size_t pair_count(int n) {
  return n < 2 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2;
}

MixedGraph graph_from_states(int n, std::span<const PairState> states) {
  if (states.size() != pair_count(n)) throw GraphError("edge-state vector has wrong length");
  std::vector<Edge> edges;
  std::size_t p = 0;
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j, ++p) {
      switch (states[p]) {
        case PairState::Absent: break;
        case PairState::Unoriented: edges.push_back(Edge::unoriented(i, j)); break;
        case PairState::Forward: edges.push_back(Edge::arc(i, j)); break;
        case PairState::Backward: edges.push_back(Edge::arc(j, i)); break;
      }
    }
  }
  return MixedGraph(n, std::move(edges));
}

bool passes_filter(const MixedGraph& g, const EnumerationOptions& opts) {
  if (opts.min_degree > 0) {
    for (Vertex v = 1; v <= g.order(); ++v) {
      if (g.degree(v) < opts.min_degree) return false;
    }
  }
  return !opts.connected_only || is_connected(g);
}

namespace {

void check_vertex_count(int n, const EnumerationOptions& opts) {
  if (n < 1) throw GraphError("vertex count must be at least 1");
  if (n > opts.max_vertices) {
    throw GraphError("vertex count " + std::to_string(n) + " exceeds enumeration cap " +
                     std::to_string(opts.max_vertices));
  }
}

}  // namespace

void for_each_mixed_graph(int n, const EnumerationOptions& opts,
                          const std::function<void(const MixedGraph&)>& fn) {
  check_vertex_count(n, opts);
  std::vector<PairState> states(pair_count(n), PairState::Absent);
  while (true) {
    MixedGraph g = graph_from_states(n, states);
    if (passes_filter(g, opts)) fn(g);
    std::size_t i = states.size();
    while (i > 0) {
      --i;
      auto next = static_cast<std::uint8_t>(states[i]) + 1;
      if (next < 4) {
        states[i] = static_cast<PairState>(next);
        break;
      }
      states[i] = PairState::Absent;
      if (i == 0) return;
    }
    if (states.empty()) return;
  }
}

std::vector<MixedGraph> enumerate_mixed_graphs(int n, const EnumerationOptions& opts) {
  std::vector<MixedGraph> out;
  for_each_mixed_graph(n, opts, [&](const MixedGraph& g) { out.push_back(g); });
  return out;
}

std::vector<MixedGraph> sample_mixed_graphs(int n, std::size_t count, std::uint64_t seed,
                                            const EnumerationOptions& opts) {
  check_vertex_count(n, opts);
  std::mt19937_64 rng(seed);
  std::vector<MixedGraph> out;
  out.reserve(count);
  std::vector<PairState> states(pair_count(n));
  const std::size_t max_attempts = 1000 * count + 10000;
  for (std::size_t attempt = 0; out.size() < count; ++attempt) {
    if (attempt >= max_attempts) throw GraphError("sampling filter rejects almost every graph");
    // Top two bits of each draw pick the pair state.
    for (auto& s : states) s = static_cast<PairState>(rng() >> 62);
    MixedGraph g = graph_from_states(n, states);
    if (passes_filter(g, opts)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace randic
