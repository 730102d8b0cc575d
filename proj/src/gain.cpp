#include "randic/gain.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>

#include "randic/enumeration.hpp"

namespace randic {

UnitComplex::UnitComplex(std::complex<double> z) : value_(z), root_(std::nullopt) {
  if (std::abs(std::norm(z) - 1.0) > kTolerance) {
    throw std::invalid_argument("value is not of unit modulus");
  }
}

std::optional<SixthRoot> UnitComplex::as_sixth_root() const {
  if (root_) return root_;
  for (int k = 0; k < 6; ++k) {
    if (std::abs(value_ - SixthRoot(k).to_complex()) <= kTolerance) return SixthRoot(k);
  }
  return std::nullopt;
}

UnitComplex UnitComplex::inverse() const {
  if (root_) return root_->inverse();
  return UnitComplex(std::conj(value_), std::nullopt);
}

UnitComplex UnitComplex::operator*(const UnitComplex& other) const {
  if (root_ && other.root_) return *root_ * *other.root_;
  return UnitComplex(value_ * other.value_, std::nullopt);
}

bool UnitComplex::equals(const UnitComplex& other, double tol) const {
  if (root_ && other.root_) return *root_ == *other.root_;
  return std::abs(value_ - other.value_) <= tol;
}

GainView::GainView(MixedGraph base, std::vector<UnitComplex> gains)
    : base_(std::move(base)), gains_(std::move(gains)) {
  if (gains_.size() != base_.size()) throw GainError("one gain per edge is required");
}

GainView GainView::constant(const MixedGraph& base, UnitComplex value) {
  if (!value.equals(value.inverse())) {
    throw std::invalid_argument("a constant gain function must be 1 or -1");
  }
  return GainView(base, std::vector<UnitComplex>(base.size(), value));
}

UnitComplex GainView::gain(Vertex u, Vertex v) const {
  const auto idx = base_.edge_index(u, v);
  if (!idx) {
    throw GainError("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                    " are not adjacent");
  }
  const UnitComplex& g = gains_[*idx];
  return u < v ? g : g.inverse();
}

GainView gain_view(const MixedGraph& g) {
  std::vector<UnitComplex> gains;
  gains.reserve(g.size());
  for (const Edge& e : g.edges()) gains.emplace_back(e.gain(e.low(), e.high()));
  return GainView(g, std::move(gains));
}

UnitComplex cycle_gain(const GainView& view, std::span<const Vertex> cycle) {
  const MixedGraph& g = view.base();
  if (cycle.size() < 3) throw GainError("a cycle needs at least three vertices");
  std::vector<char> seen(g.order() + 1, 0);
  for (Vertex v : cycle) {
    if (v < 1 || v > g.order() || seen[v]) throw GainError("not a simple cycle");
    seen[v] = 1;
  }
  UnitComplex total;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    total = total * view.gain(cycle[i], cycle[(i + 1) % cycle.size()]);
  }
  return total;
}

CycleGainClass classify_cycle(const GainView& view, std::span<const Vertex> cycle) {
  const auto root = cycle_gain(view, cycle).as_sixth_root();
  if (!root) throw GainError("unclassified: cycle gain is not a sixth root of unity");
  return classify(*root);
}

namespace {

// Switching function making every spanning-forest edge carry `target`,
// rooted at the smallest vertex of each component with value 1.
std::vector<UnitComplex> propagate(const GainView& view, const UnitComplex& target) {
  const MixedGraph& g = view.base();
  std::vector<UnitComplex> zeta(g.order());
  std::vector<char> seen(g.order() + 1, 0);
  for (Vertex root = 1; root <= g.order(); ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::queue<Vertex> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const Vertex u = frontier.front();
      frontier.pop();
      for (Vertex w : g.neighbors(u)) {
        if (seen[w]) continue;
        seen[w] = 1;
        // zeta(u)^{-1} gain(u, w) zeta(w) = target
        zeta[w - 1] = zeta[u - 1] * view.gain(u, w).inverse() * target;
        frontier.push(w);
      }
    }
  }
  return zeta;
}

bool all_edges_equal(const GainView& view, const UnitComplex& target) {
  for (const UnitComplex& g : view.edge_gains()) {
    if (!g.equals(target)) return false;
  }
  return true;
}

}  // namespace

bool is_positive(const GainView& view) {
  const SwitchingFunction zeta(propagate(view, UnitComplex::one()));
  return all_edges_equal(apply_switching(view, zeta), UnitComplex::one());
}

bool is_positive_graph(const MixedGraph& g) { return is_positive(gain_view(g)); }

bool is_positive_by_path_values(const GainView& view) {
  const MixedGraph& g = view.base();
  const int n = g.order();
  std::vector<char> on_path(n + 1, 0);
  for (Vertex s = 1; s <= n; ++s) {
    std::vector<std::optional<UnitComplex>> first(n + 1);
    bool consistent = true;
    auto walk = [&](auto&& self, Vertex u, const UnitComplex& value) -> void {
      if (!consistent) return;
      if (!first[u]) {
        first[u] = value;
      } else if (!first[u]->equals(value)) {
        consistent = false;
        return;
      }
      for (Vertex w : g.neighbors(u)) {
        if (on_path[w]) continue;
        on_path[w] = 1;
        self(self, w, value * view.gain(u, w));
        on_path[w] = 0;
      }
    };
    on_path[s] = 1;
    walk(walk, s, UnitComplex::one());
    on_path[s] = 0;
    if (!consistent) return false;
  }
  return true;
}

GainView apply_switching(const GainView& view, const SwitchingFunction& zeta) {
  const MixedGraph& g = view.base();
  if (zeta.size() != g.order()) throw GainError("switching function must cover every vertex");
  std::vector<UnitComplex> gains;
  gains.reserve(g.size());
  for (std::size_t e = 0; e < g.size(); ++e) {
    const Vertex i = g.edge(e).low();
    const Vertex j = g.edge(e).high();
    gains.push_back(zeta(i).inverse() * view.edge_gains()[e] * zeta(j));
  }
  return GainView(g, std::move(gains));
}

std::optional<SwitchingFunction> switching_certificate_to_constant(const GainView& view,
                                                                   const UnitComplex& target) {
  if (!target.equals(UnitComplex::one()) && !target.equals(UnitComplex::minus_one())) {
    throw std::invalid_argument("target gain must be 1 or -1");
  }
  if (!is_connected(view.base())) {
    throw PreconditionError("switching certificate requires a connected graph");
  }
  SwitchingFunction zeta(propagate(view, target));
  if (!all_edges_equal(apply_switching(view, zeta), target)) return std::nullopt;
  return zeta;
}

bool are_switching_equivalent(const GainView& a, const GainView& b) {
  if (!(a.base().underlying() == b.base().underlying())) {
    throw GainError("gain views are defined on different underlying graphs");
  }
  if (!is_connected(a.base())) {
    throw PreconditionError("switching equivalence requires a connected graph");
  }
  // a ~ b iff the quotient gain a^{-1} b switches to the all-ones gain.
  std::vector<UnitComplex> quotient;
  quotient.reserve(a.base().size());
  for (const Edge& e : a.base().edges()) {
    quotient.push_back(a.gain(e.low(), e.high()).inverse() * b.gain(e.low(), e.high()));
  }
  return switching_certificate_to_constant(GainView(a.base(), std::move(quotient)),
                                           UnitComplex::one())
      .has_value();
}

}  // namespace randic
