// Independent reference computations for the tests. Nothing here calls the
// library beyond MixedGraph accessors.
#ifndef RANDIC_TESTS_ORACLES_HPP
#define RANDIC_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

#include "randic/mixed_graph.hpp"
#include "randic/rational.hpp"

namespace oracle {

using randic::MixedGraph;
using randic::Rational;
using Complex = std::complex<double>;

// a + b w with w = e^{i pi / 3}, so w^2 = w - 1 and conj(w) = 1 - w.
struct Eisen {
  long long a = 0;
  long long b = 0;

  Eisen operator+(Eisen o) const { return {a + o.a, b + o.b}; }
  Eisen operator-(Eisen o) const { return {a - o.a, b - o.b}; }
  Eisen operator*(Eisen o) const { return {a * o.a - b * o.b, a * o.b + b * o.a + b * o.b}; }
  bool operator==(const Eisen&) const = default;
  Complex value() const { return Complex(a + 0.5 * b, b * std::sqrt(3.0) / 2.0); }
};

inline const Eisen kOne{1, 0};
inline const Eisen kOmega{0, 1};
inline const Eisen kOmegaBar{1, -1};

using EisenMatrix = std::vector<std::vector<Eisen>>;

inline EisenMatrix adjacency(const MixedGraph& g) {
  const int n = g.order();
  EisenMatrix h(n, std::vector<Eisen>(n));
  for (const auto& e : g.edges()) {
    const int i = e.from - 1;
    const int j = e.to - 1;
    if (e.kind == randic::EdgeKind::Unoriented) {
      h[i][j] = h[j][i] = kOne;
    } else {
      h[i][j] = kOmega;
      h[j][i] = kOmegaBar;
    }
  }
  return h;
}

inline int permutation_sign(const std::vector<int>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) sign = -sign;
    }
  }
  return sign;
}

// Leibniz expansion of the principal minor on rows/cols `idx`.
inline Eisen leibniz_minor(const EisenMatrix& m, const std::vector<int>& idx) {
  std::vector<int> p(idx.size());
  std::iota(p.begin(), p.end(), 0);
  Eisen total;
  do {
    Eisen term = kOne;
    for (std::size_t r = 0; r < idx.size() && (term.a || term.b); ++r) {
      term = term * m[idx[r]][idx[p[r]]];
    }
    total = permutation_sign(p) > 0 ? total + term : total - term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// Exact coefficients {1, a_1, ..., a_n} of det(xI - R) from principal minors:
// a_k = (-1)^k sum_{|S| = k} det H_S / prod_{i in S} d_i. Every det H_S is a
// real element of Z[w], hence an integer.
inline std::vector<Rational> char_poly_by_minors(const MixedGraph& g) {
  const int n = g.order();
  const EisenMatrix h = adjacency(g);
  std::vector<Rational> a(n + 1);
  a[0] = 1;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    long long degree_product = 1;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1u) {
        idx.push_back(i);
        degree_product *= g.degree(i + 1);
      }
    }
    const Eisen det = leibniz_minor(h, idx);
    if (det.b != 0) throw std::logic_error("principal minor of a Hermitian matrix is not real");
    const int k = static_cast<int>(idx.size());
    Rational term(det.a, degree_product);
    a[k] += k % 2 == 0 ? term : Rational(-term);
  }
  return a;
}

inline Rational determinant_by_leibniz(const MixedGraph& g) {
  std::vector<int> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  const Eisen det = leibniz_minor(adjacency(g), all);
  if (det.b != 0) throw std::logic_error("determinant of a Hermitian matrix is not real");
  long long degree_product = 1;
  for (int v = 1; v <= g.order(); ++v) degree_product *= g.degree(v);
  return Rational(det.a, degree_product);
}

// Dense R computed straight from the definition.
inline std::vector<std::vector<Complex>> randic_dense(const MixedGraph& g) {
  const EisenMatrix h = adjacency(g);
  const int n = g.order();
  std::vector<std::vector<Complex>> r(n, std::vector<Complex>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      r[i][j] = h[i][j].value() / std::sqrt(double(g.degree(i + 1)) * g.degree(j + 1));
    }
  }
  return r;
}

// Gain of the closed walk c[0] -> c[1] -> ... -> c[0], or nullopt when a step
// is not an edge.
inline std::optional<Eisen> closed_walk_gain(const MixedGraph& g, const std::vector<int>& c) {
  const EisenMatrix h = adjacency(g);
  Eisen gain = kOne;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Eisen step = h[c[i] - 1][c[(i + 1) % c.size()] - 1];
    if (step == Eisen{}) return std::nullopt;
    gain = gain * step;
  }
  return gain;
}

// Number of simple cycles, by trying every cyclic ordering of every vertex
// subset of size >= 3.
inline std::size_t count_cycles_by_permutation(const MixedGraph& g) {
  const int n = g.order();
  std::size_t count = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> vs;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1u) vs.push_back(i + 1);
    }
    if (vs.size() < 3) continue;
    std::size_t orderings = 0;
    do {
      bool closed = true;
      for (std::size_t i = 0; i < vs.size() && closed; ++i) {
        closed = g.adjacent(vs[i], vs[(i + 1) % vs.size()]);
      }
      if (closed) ++orderings;
    } while (std::next_permutation(vs.begin() + 1, vs.end()));
    count += orderings / 2;
  }
  return count;
}

// Positivity: every simple cycle closes with gain 1.
inline bool all_cycles_gain_one(const MixedGraph& g) {
  const int n = g.order();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> vs;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1u) vs.push_back(i + 1);
    }
    if (vs.size() < 3) continue;
    do {
      const auto gain = closed_walk_gain(g, vs);
      if (gain && !(*gain == kOne)) return false;
    } while (std::next_permutation(vs.begin() + 1, vs.end()));
  }
  return true;
}

// Signed sum over order-k elementary subgraphs, found by testing every edge
// subset for being a disjoint union of K2's and cycles.
inline Rational elementary_sum_by_edge_subsets(const MixedGraph& g, int k, std::size_t* count = nullptr) {
  const int n = g.order();
  const std::size_t m = g.size();
  Rational total = 0;
  if (count) *count = 0;
  if (k == 0) {
    if (count) *count = 1;
    return 1;
  }
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << m); ++subset) {
    std::vector<std::vector<int>> adj(n + 1);
    for (std::size_t e = 0; e < m; ++e) {
      if (subset >> e & 1u) {
        adj[g.edge(e).from].push_back(g.edge(e).to);
        adj[g.edge(e).to].push_back(g.edge(e).from);
      }
    }
    int covered = 0;
    bool ok = true;
    for (int v = 1; v <= n; ++v) {
      if (adj[v].size() > 2) ok = false;
      if (!adj[v].empty()) ++covered;
    }
    if (!ok || covered != k) continue;
    std::vector<bool> seen(n + 1, false);
    int components = 0, l_p = 0, l_n = 0, l_sp = 0, l_sn = 0;
    for (int v = 1; v <= n && ok; ++v) {
      if (adj[v].empty() || seen[v]) continue;
      ++components;
      std::vector<int> comp;
      std::vector<int> stack{v};
      seen[v] = true;
      std::size_t degree_sum = 0;
      while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        comp.push_back(u);
        degree_sum += adj[u].size();
        for (int w : adj[u]) {
          if (!seen[w]) {
            seen[w] = true;
            stack.push_back(w);
          }
        }
      }
      if (comp.size() == 2) continue;
      if (degree_sum != 2 * comp.size()) {
        ok = false;  // a path with three or more vertices
        break;
      }
      std::vector<int> order{v};
      int prev = 0, cur = v;
      while (true) {
        const int next = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
        if (next == v) break;
        order.push_back(next);
        prev = cur;
        cur = next;
      }
      const Eisen gain = *closed_walk_gain(g, order);
      if (gain == kOne) ++l_p;
      else if (gain == Eisen{-1, 0}) ++l_n;
      else if (gain == kOmega || gain == kOmegaBar) ++l_sp;
      else ++l_sn;
    }
    if (!ok) continue;
    long long q = 1;
    for (int v = 1; v <= n; ++v) {
      if (!adj[v].empty()) q *= g.degree(v);
    }
    const int r = k - components;
    Rational term(1LL << (l_n + l_p), q);
    if ((r + l_n + l_sn) % 2 != 0) term = -term;
    total += term;
    if (count) ++*count;
  }
  return total;
}

inline MixedGraph path(int n) {
  std::vector<randic::Edge> e;
  for (int v = 1; v < n; ++v) e.push_back(randic::Edge::unoriented(v, v + 1));
  return MixedGraph(n, e);
}

inline MixedGraph cycle(int n) {
  std::vector<randic::Edge> e;
  for (int v = 1; v <= n; ++v) e.push_back(randic::Edge::unoriented(v, v % n + 1));
  return MixedGraph(n, e);
}

inline MixedGraph directed_cycle(int n) {
  std::vector<randic::Edge> e;
  for (int v = 1; v <= n; ++v) e.push_back(randic::Edge::arc(v, v % n + 1));
  return MixedGraph(n, e);
}

inline MixedGraph complete(int n) {
  std::vector<randic::Edge> e;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) e.push_back(randic::Edge::unoriented(u, v));
  }
  return MixedGraph(n, e);
}

inline MixedGraph star(int leaves) {
  std::vector<randic::Edge> e;
  for (int v = 2; v <= leaves + 1; ++v) e.push_back(randic::Edge::unoriented(1, v));
  return MixedGraph(leaves + 1, e);
}

// Closed forms: C_n has cos(2 pi j / n); the directed n-cycle has
// cos(2 pi j / n + pi / 3); K_n has 1 and -1/(n-1) (n-1 times); the star
// K_{1,m} has -1, 0 (m-1 times), 1.
inline std::vector<double> sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<double> cycle_spectrum(int n) {
  std::vector<double> v;
  for (int j = 0; j < n; ++j) v.push_back(std::cos(2.0 * M_PI * j / n));
  return sorted(v);
}

inline std::vector<double> directed_cycle_spectrum(int n) {
  std::vector<double> v;
  for (int j = 0; j < n; ++j) v.push_back(std::cos(2.0 * M_PI * j / n + M_PI / 3.0));
  return sorted(v);
}

inline std::vector<double> complete_spectrum(int n) {
  std::vector<double> v(n - 1, -1.0 / (n - 1));
  v.push_back(1.0);
  return sorted(v);
}

inline std::vector<double> star_spectrum(int leaves) {
  std::vector<double> v(leaves - 1, 0.0);
  v.push_back(-1.0);
  v.push_back(1.0);
  return sorted(v);
}

inline double max_gap(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return INFINITY;
  double gap = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) gap = std::max(gap, std::abs(a[i] - b[i]));
  return gap;
}

}  // namespace oracle

#endif  // RANDIC_TESTS_ORACLES_HPP
