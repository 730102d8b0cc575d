#ifndef RANDIC_BOUNDS_HPP
#define RANDIC_BOUNDS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "randic/mixed_graph.hpp"
#include "randic/spectral.hpp"

namespace randic {

/// One-sided slack allowed on every inequality, scaled by max(1, |rhs|).
inline constexpr double kBoundTolerance = 1e-9;
/// Tolerance for matching an eigenvalue against +-1 or against another spectrum.
inline constexpr double kEigenvalueMatchTolerance = 1e-8;

/// An inequality written as lhs <= rhs. Lower bounds on a quantity q appear
/// with lhs = bound and rhs = q.
struct BoundRecord {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  bool satisfied = true;
  bool skipped = false;
  std::string reason;
};

BoundRecord make_bound(std::string name, double lhs, double rhs, std::string reason = {});
BoundRecord skipped_bound(std::string name, std::string reason);

/// Spectrum inside [-1 - 1e-9, 1 + 1e-9].
bool check_unit_interval(const Spectrum& s);

/// Spectra before and after deleting one edge, with the verdict of
/// lambda_{k-1} <= theta_k <= lambda_{k+1} (lambda_0 = -1, lambda_{n+1} = 1)
/// for k = 1..n.
struct InterlacingResult {
  Edge removed;
  std::vector<double> lambda;
  std::vector<double> theta;
  std::vector<bool> holds;

  bool all_hold() const;
};

/// Throws GraphError when {u, v} is not an edge and PreconditionError when the
/// deletion leaves an isolated vertex.
InterlacingResult interlacing_check(const MixedGraph& g, Vertex u, Vertex v);
InterlacingResult interlacing_check(const MixedGraph& g, std::size_t edge_index);
/// Whether deleting the edge keeps every degree positive.
bool edge_deletable(const MixedGraph& g, std::size_t edge_index);

struct EigenvalueOneResult {
  bool has_one = false;
  int multiplicity = 0;
  bool graph_positive = false;
};
/// Requires a connected graph without isolated vertices.
EigenvalueOneResult check_eigenvalue_one(const MixedGraph& g);

struct SymmetryResult {
  bool symmetric = false;
  bool bipartite = false;
};
SymmetryResult check_spectral_symmetry(const MixedGraph& g);
bool is_symmetric_about_zero(const Spectrum& s, double tol = kEigenvalueMatchTolerance);

struct MinusOneResult {
  bool has_minus_one = false;
  bool positive_bipartite = false;
  /// Switching equivalent to the constant gain -1.
  bool antibalanced = false;
};
MinusOneResult check_minus_one(const MixedGraph& g);

struct SpectrumEqualityResult {
  bool spectra_equal = false;
  bool switch_equiv_allones = false;
};
/// Compares the spectrum with that of the un-oriented underlying graph.
SpectrumEqualityResult check_spectrum_equals_underlying(const MixedGraph& g);

/// S = sum over un-oriented edges of 2 / sqrt(d_i d_j) plus sum over arcs of
/// 1 / sqrt(d_i d_j), which is the sum of all entries of the Randic matrix.
struct GammaBounds {
  double entry_sum = 0.0;
  double gamma1 = 0.0;  // -S / (n (n - 1))
  double gamma2 = 0.0;  // S / n
  double lambda1 = 0.0;
  double lambdan = 0.0;
  bool ordered = false;
  double spread_bound = 0.0;  // S / (n - 1)
  bool spread_holds = false;
};
GammaBounds gamma_bounds(const MixedGraph& g);
GammaBounds gamma_bounds(const MixedGraph& g, const Spectrum& s);

struct SmallestEigenvalueBound {
  double lambda1_squared = 0.0;
  double bound = 0.0;  // 2 R^(-1) / (n (n - 1))
  bool satisfied = false;
};
SmallestEigenvalueBound smallest_eig_bound(const MixedGraph& g);

/// Everything the energy bounds are stated in, plus the evaluated bounds.
struct BoundsReport {
  int n = 0;
  std::size_t edges = 0;
  double randic_index = 0.0;  // R^(-1) of the underlying graph
  double determinant = 0.0;   // product of eigenvalues, 0 once sigma <= kZeroTolerance
  double rho = 0.0;
  double sigma = 0.0;
  int negatives = 0;
  double energy = 0.0;
  std::vector<BoundRecord> bounds;

  const BoundRecord& find(std::string_view name) const;
};

/// Eight energy bounds named energy_lower_det, energy_upper_sqrt,
/// energy_lower_negative, energy_upper_exp, energy_upper_rho,
/// energy_lower_sigma, energy_lower_polya_szego and energy_lower_ozeki.
/// Requires a connected graph with n >= 2.
BoundsReport energy_bounds_report(const MixedGraph& g);
/// Same bounds from a spectrum and R^(-1) alone.
BoundsReport energy_bounds_report(const Spectrum& s, double randic_index, std::size_t edges = 0);

/// gamma_lower, gamma_middle, gamma_upper, spread and smallest_eigenvalue.
std::vector<BoundRecord> eigenvalue_bound_records(const MixedGraph& g, const Spectrum& s);

enum class CheckStatus { Pass, Fail, Skip };
std::string_view to_string(CheckStatus s);

/// One theorem verdict. Non-asserted records are observations; a failing one
/// is a divergence, not a failure.
struct TheoremRecord {
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  bool asserted = true;
  std::optional<double> lhs;
  std::optional<double> rhs;
  std::optional<double> slack;
  std::string reason;
};

struct TheoremSuite {
  std::vector<TheoremRecord> records;

  int failures() const;     // asserted records with status Fail
  int divergences() const;  // non-asserted records with status Fail
  int skips() const;
  const TheoremRecord* find(std::string_view id) const;
};

struct SuiteOptions {
  /// Two-route characteristic polynomial checks are skipped above this order.
  int combinatorial_cap = kCombinatorialCap;
};

/// Runs every checker on g. Pure function of g. Throws PreconditionError when
/// g is disconnected, has an isolated vertex or fewer than two vertices.
TheoremSuite run_theorem_suite(const MixedGraph& g, const SuiteOptions& opts = {});

}  // namespace randic

#endif  // RANDIC_BOUNDS_HPP
