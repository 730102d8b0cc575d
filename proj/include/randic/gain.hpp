#ifndef RANDIC_GAIN_HPP
#define RANDIC_GAIN_HPP

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "randic/mixed_graph.hpp"
#include "randic/sixth_root.hpp"

namespace randic {

/// Unit complex number. Values built from sixth roots carry the exact root
/// along; products of exact values stay exact, anything else falls back to
/// floating point.
class UnitComplex {
 public:
  static constexpr double kTolerance = 1e-12;

  UnitComplex() = default;
  UnitComplex(SixthRoot root) : value_(root.to_complex()), root_(root) {}  // NOLINT
  /// Throws std::invalid_argument unless | |z|^2 - 1 | <= 1e-12.
  explicit UnitComplex(std::complex<double> z);

  static UnitComplex one() { return SixthRoot::one(); }
  static UnitComplex omega() { return SixthRoot::omega(); }
  static UnitComplex omega_bar() { return SixthRoot::omega_bar(); }
  static UnitComplex minus_one() { return SixthRoot::minus_one(); }

  std::complex<double> value() const { return value_; }
  const std::optional<SixthRoot>& root() const { return root_; }
  bool exact() const { return root_.has_value(); }

  /// The sixth root this value equals, exactly or within kTolerance.
  std::optional<SixthRoot> as_sixth_root() const;

  UnitComplex inverse() const;
  UnitComplex operator*(const UnitComplex& other) const;

  /// Exact comparison when both sides are exact, otherwise |a - b| <= tol.
  bool equals(const UnitComplex& other, double tol = kTolerance) const;

 private:
  UnitComplex(std::complex<double> z, std::nullopt_t) : value_(z), root_(std::nullopt) {}

  std::complex<double> value_{1.0, 0.0};
  std::optional<SixthRoot> root_ = SixthRoot::one();
};

class GainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// T-gain graph on the underlying graph of a mixed graph. Gains are stored
/// per edge for the direction low -> high; the reverse direction is the
/// inverse.
class GainView {
 public:
  /// `gains[e]` is the gain of edge e in the direction low -> high.
  GainView(MixedGraph base, std::vector<UnitComplex> gains);
  /// Every oriented edge gets the same gain (must be 1 or -1 to be inverse
  /// symmetric).
  static GainView constant(const MixedGraph& base, UnitComplex value);

  const MixedGraph& base() const { return base_; }
  /// Gain of the oriented edge (u, v); throws GainError if not adjacent.
  UnitComplex gain(Vertex u, Vertex v) const;
  const std::vector<UnitComplex>& edge_gains() const { return gains_; }

 private:
  MixedGraph base_;
  std::vector<UnitComplex> gains_;
};

/// Gain function with gain 1 on un-oriented edges, w along arcs and conj(w)
/// against them.
GainView gain_view(const MixedGraph& g);

/// Product of gains along a simple cycle in the listed direction.
UnitComplex cycle_gain(const GainView& view, std::span<const Vertex> cycle);

/// Throws GainError ("unclassified") when the cycle gain is not a sixth root.
CycleGainClass classify_cycle(const GainView& view, std::span<const Vertex> cycle);

/// Every cycle has gain 1 (acyclic graphs are positive). Checked by
/// propagating gains along a spanning forest and testing each co-tree edge.
bool is_positive(const GainView& view);
bool is_positive_graph(const MixedGraph& g);

/// Brute-force criterion: for every pair of vertices, all simple paths between
/// them carry the same gain product. Exponential; small graphs only.
bool is_positive_by_path_values(const GainView& view);

class SwitchingFunction {
 public:
  explicit SwitchingFunction(std::vector<UnitComplex> values) : values_(std::move(values)) {}
  static SwitchingFunction identity(int n) { return SwitchingFunction(std::vector<UnitComplex>(n)); }

  int size() const { return static_cast<int>(values_.size()); }
  const UnitComplex& operator()(Vertex v) const { return values_.at(v - 1); }
  const std::vector<UnitComplex>& values() const { return values_; }

 private:
  std::vector<UnitComplex> values_;
};

/// gain'(i, j) = zeta(i)^{-1} gain(i, j) zeta(j).
GainView apply_switching(const GainView& view, const SwitchingFunction& zeta);

/// A switching function taking every gain to the constant `target` (1 or -1),
/// built by breadth-first propagation from vertex 1 with zeta(1) = 1.
/// Empty when none exists. Throws PreconditionError on a disconnected graph
/// and std::invalid_argument when target is not +-1.
std::optional<SwitchingFunction> switching_certificate_to_constant(const GainView& view,
                                                                   const UnitComplex& target);

/// Whether some switching function maps `a` onto `b`. Throws GainError when the
/// underlying graphs differ and PreconditionError when disconnected.
bool are_switching_equivalent(const GainView& a, const GainView& b);

}  // namespace randic

#endif  // RANDIC_GAIN_HPP
