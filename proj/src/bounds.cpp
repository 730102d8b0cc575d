#include "randic/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "randic/gain.hpp"

namespace randic {

namespace {

double scaled_tolerance(double rhs) { return kBoundTolerance * std::max(1.0, std::abs(rhs)); }

void require_connected(const MixedGraph& g, const char* what) {
  if (!is_connected(g)) throw PreconditionError(std::string(what) + " requires a connected graph");
}

void require_suite_graph(const MixedGraph& g) {
  if (g.order() < 2) throw PreconditionError("graph must have at least two vertices");
  require_connected(g, "the theorem suite");
}

double randic_index_value(const MixedGraph& g) { return to_double(general_randic_index(g, -1)); }

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(17);
  out << x;
  return out.str();
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

BoundRecord make_bound(std::string name, double lhs, double rhs, std::string reason) {
  BoundRecord r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.satisfied = r.slack >= -scaled_tolerance(rhs);
  r.reason = std::move(reason);
  return r;
}

BoundRecord skipped_bound(std::string name, std::string reason) {
  BoundRecord r;
  r.name = std::move(name);
  r.skipped = true;
  r.reason = std::move(reason);
  return r;
}

bool check_unit_interval(const Spectrum& s) {
  return std::all_of(s.eigenvalues().begin(), s.eigenvalues().end(), [](double x) {
    return x >= -1.0 - kBoundTolerance && x <= 1.0 + kBoundTolerance;
  });
}

bool InterlacingResult::all_hold() const {
  return std::all_of(holds.begin(), holds.end(), [](bool b) { return b; });
}

bool edge_deletable(const MixedGraph& g, std::size_t edge_index) {
  const Edge& e = g.edge(edge_index);
  return g.degree(e.from) > 1 && g.degree(e.to) > 1;
}

InterlacingResult interlacing_check(const MixedGraph& g, std::size_t edge_index) {
  const Edge& e = g.edge(edge_index);
  if (!edge_deletable(g, edge_index)) {
    const Vertex lonely = g.degree(e.from) == 1 ? e.from : e.to;
    throw PreconditionError("deleting edge " + std::to_string(e.from) + "," +
                            std::to_string(e.to) + " isolates vertex " + std::to_string(lonely) +
                            "; the Randic matrix needs every degree >= 1");
  }
  InterlacingResult out;
  out.removed = e;
  out.lambda = randic_spectrum(g).eigenvalues();
  out.theta = randic_spectrum(g.without_edge(edge_index)).eigenvalues();
  const int n = g.order();
  // padded[k] = lambda_k for k = 0..n+1
  std::vector<double> padded;
  padded.reserve(n + 2);
  padded.push_back(-1.0);
  padded.insert(padded.end(), out.lambda.begin(), out.lambda.end());
  padded.push_back(1.0);
  for (int k = 1; k <= n; ++k) {
    const double theta = out.theta[k - 1];
    out.holds.push_back(padded[k - 1] <= theta + kBoundTolerance &&
                        theta <= padded[k + 1] + kBoundTolerance);
  }
  return out;
}

InterlacingResult interlacing_check(const MixedGraph& g, Vertex u, Vertex v) {
  const auto idx = g.edge_index(u, v);
  if (!idx) {
    throw GraphError(std::to_string(u) + "," + std::to_string(v) + " is not an edge of the graph");
  }
  return interlacing_check(g, *idx);
}

EigenvalueOneResult check_eigenvalue_one(const MixedGraph& g) {
  require_connected(g, "the eigenvalue-one check");
  const Spectrum s = randic_spectrum(g);
  EigenvalueOneResult out;
  out.multiplicity = s.multiplicity(1.0, kEigenvalueMatchTolerance);
  out.has_one = out.multiplicity > 0;
  out.graph_positive = is_positive_graph(g);
  return out;
}

bool is_symmetric_about_zero(const Spectrum& s, double tol) {
  const auto& v = s.eigenvalues();
  for (std::size_t i = 0, j = v.size(); i < v.size(); ++i) {
    --j;
    if (std::abs(v[i] + v[j]) > tol) return false;
  }
  return true;
}

SymmetryResult check_spectral_symmetry(const MixedGraph& g) {
  require_connected(g, "the spectral symmetry check");
  return {is_symmetric_about_zero(randic_spectrum(g)), is_bipartite(g).bipartite};
}

MinusOneResult check_minus_one(const MixedGraph& g) {
  require_connected(g, "the eigenvalue minus-one check");
  const Spectrum s = randic_spectrum(g);
  MinusOneResult out;
  out.has_minus_one = s.multiplicity(-1.0, kEigenvalueMatchTolerance) > 0;
  out.positive_bipartite = is_positive_graph(g) && is_bipartite(g).bipartite;
  out.antibalanced =
      switching_certificate_to_constant(gain_view(g), UnitComplex::minus_one()).has_value();
  return out;
}

SpectrumEqualityResult check_spectrum_equals_underlying(const MixedGraph& g) {
  require_connected(g, "the underlying-spectrum comparison");
  const Spectrum mixed = randic_spectrum(g);
  const Spectrum plain = randic_spectrum(g.underlying());
  SpectrumEqualityResult out;
  out.spectra_equal = true;
  for (int i = 0; i < mixed.size(); ++i) {
    if (std::abs(mixed[i] - plain[i]) > kEigenvalueMatchTolerance) out.spectra_equal = false;
  }
  out.switch_equiv_allones =
      switching_certificate_to_constant(gain_view(g), UnitComplex::one()).has_value();
  return out;
}

GammaBounds gamma_bounds(const MixedGraph& g, const Spectrum& s) {
  const int n = g.order();
  if (n < 2) throw PreconditionError("gamma bounds need at least two vertices");
  GammaBounds out;
  for (const Edge& e : g.edges()) {
    const double w = 1.0 / std::sqrt(double(g.degree(e.from)) * double(g.degree(e.to)));
    out.entry_sum += e.kind == EdgeKind::Unoriented ? 2.0 * w : w;
  }
  out.gamma1 = -out.entry_sum / (double(n) * (n - 1));
  out.gamma2 = out.entry_sum / n;
  out.lambda1 = s.smallest();
  out.lambdan = s.largest();
  out.ordered = out.lambda1 <= out.gamma1 + scaled_tolerance(out.gamma1) &&
                out.gamma1 <= out.gamma2 + scaled_tolerance(out.gamma2) &&
                out.gamma2 <= out.lambdan + scaled_tolerance(out.lambdan);
  out.spread_bound = out.entry_sum / (n - 1);
  const double spread = out.lambdan - out.lambda1;
  out.spread_holds = out.spread_bound <= spread + scaled_tolerance(spread);
  return out;
}

GammaBounds gamma_bounds(const MixedGraph& g) { return gamma_bounds(g, randic_spectrum(g)); }

SmallestEigenvalueBound smallest_eig_bound(const MixedGraph& g) {
  const int n = g.order();
  if (n < 2) throw PreconditionError("the smallest-eigenvalue bound needs at least two vertices");
  const Spectrum s = randic_spectrum(g);
  SmallestEigenvalueBound out;
  out.lambda1_squared = s.smallest() * s.smallest();
  out.bound = 2.0 * randic_index_value(g) / (double(n) * (n - 1));
  out.satisfied = out.lambda1_squared >= out.bound - kBoundTolerance;
  return out;
}

const BoundRecord& BoundsReport::find(std::string_view name) const {
  for (const BoundRecord& r : bounds) {
    if (r.name == name) return r;
  }
  throw std::out_of_range("no bound named " + std::string(name));
}

BoundsReport energy_bounds_report(const Spectrum& s, double randic_index, std::size_t edges) {
  BoundsReport rep;
  rep.n = s.size();
  rep.edges = edges;
  rep.randic_index = randic_index;
  rep.rho = s.spectral_radius();
  rep.sigma = s.min_modulus();
  rep.determinant = rep.sigma <= kZeroTolerance
                        ? 0.0
                        : std::accumulate(s.eigenvalues().begin(), s.eigenvalues().end(), 1.0,
                                          std::multiplies<>());
  rep.negatives = s.negative_count();
  rep.energy = s.energy();

  const double n = rep.n;
  const double r = randic_index;
  const double e = rep.energy;
  auto& b = rep.bounds;

  b.push_back(make_bound(
      "energy_lower_det",
      std::sqrt(2.0 * r + n * (n - 1) * std::pow(rep.determinant * rep.determinant, 1.0 / n)), e));
  b.push_back(make_bound("energy_upper_sqrt", e, std::sqrt(2.0 * n * r)));

  if (rep.negatives < 1) {
    b.push_back(skipped_bound("energy_lower_negative", "no negative eigenvalue"));
  } else if (rep.sigma <= kZeroTolerance) {
    b.push_back(skipped_bound("energy_lower_negative", "determinant is zero"));
  } else {
    double negative_product = 1.0;
    for (int i = 0; i < rep.negatives; ++i) negative_product *= s[i];
    const double m = n - rep.negatives;
    b.push_back(make_bound("energy_lower_negative",
                           2.0 * m * std::pow(rep.determinant / negative_product, 1.0 / m), e));
  }

  b.push_back(make_bound("energy_upper_exp", e, std::exp(std::sqrt(2.0 * r))));
  b.push_back(make_bound(
      "energy_upper_rho", e,
      0.5 * (rep.rho * (n - 2) + std::sqrt(rep.rho * rep.rho * (n - 2) * (n - 2) + 16.0 * r))));
  b.push_back(make_bound(
      "energy_lower_sigma",
      0.5 * (rep.sigma * (n - 2) + std::sqrt(rep.sigma * rep.sigma * (n - 2) * (n - 2) + 16.0 * r)),
      e));

  if (rep.sigma <= kZeroTolerance) {
    b.push_back(make_bound("energy_lower_polya_szego", 0.0, e, "sigma is zero; bound is 0"));
  } else {
    b.push_back(make_bound("energy_lower_polya_szego",
                           std::sqrt(8.0 * n * rep.rho * rep.sigma * r) / (rep.rho + rep.sigma), e));
  }

  const double radicand = 8.0 * n * r - n * n * (rep.rho - rep.sigma) * (rep.rho - rep.sigma);
  if (radicand < 0.0) {
    b.push_back(skipped_bound("energy_lower_ozeki", "radicand " + fmt(radicand) + " is negative"));
  } else {
    b.push_back(make_bound("energy_lower_ozeki", 0.5 * std::sqrt(radicand), e));
  }
  return rep;
}

BoundsReport energy_bounds_report(const MixedGraph& g) {
  if (g.order() < 2) throw PreconditionError("energy bounds need at least two vertices");
  require_connected(g, "the energy bounds");
  return energy_bounds_report(randic_spectrum(g), randic_index_value(g), g.size());
}

std::vector<BoundRecord> eigenvalue_bound_records(const MixedGraph& g, const Spectrum& s) {
  const GammaBounds gb = gamma_bounds(g, s);
  const double n = g.order();
  const double smallest = 2.0 * randic_index_value(g) / (n * (n - 1));
  return {
      make_bound("gamma_lower", gb.lambda1, gb.gamma1),
      make_bound("gamma_middle", gb.gamma1, gb.gamma2),
      make_bound("gamma_upper", gb.gamma2, gb.lambdan),
      make_bound("spread", gb.spread_bound, gb.lambdan - gb.lambda1),
      make_bound("smallest_eigenvalue", smallest, gb.lambda1 * gb.lambda1),
  };
}

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

int TheoremSuite::failures() const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [](const auto& r) {
    return r.asserted && r.status == CheckStatus::Fail;
  }));
}

int TheoremSuite::divergences() const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [](const auto& r) {
    return !r.asserted && r.status == CheckStatus::Fail;
  }));
}

int TheoremSuite::skips() const {
  return static_cast<int>(std::count_if(records.begin(), records.end(),
                                        [](const auto& r) { return r.status == CheckStatus::Skip; }));
}

const TheoremRecord* TheoremSuite::find(std::string_view id) const {
  for (const auto& r : records) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

namespace {

TheoremRecord from_bound(const BoundRecord& b) {
  TheoremRecord t;
  t.id = b.name;
  t.reason = b.reason;
  if (b.skipped) {
    t.status = CheckStatus::Skip;
    return t;
  }
  t.status = b.satisfied ? CheckStatus::Pass : CheckStatus::Fail;
  t.lhs = b.lhs;
  t.rhs = b.rhs;
  t.slack = b.slack;
  return t;
}

TheoremRecord verdict(std::string id, bool ok, std::string reason, bool asserted = true) {
  TheoremRecord t;
  t.id = std::move(id);
  t.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  t.asserted = asserted;
  t.reason = std::move(reason);
  return t;
}

TheoremRecord within(std::string id, double gap, double limit) {
  TheoremRecord t;
  t.id = std::move(id);
  t.lhs = gap;
  t.rhs = limit;
  t.slack = limit - gap;
  t.status = gap <= limit ? CheckStatus::Pass : CheckStatus::Fail;
  return t;
}

}  // namespace

TheoremSuite run_theorem_suite(const MixedGraph& g, const SuiteOptions& opts) {
  require_suite_graph(g);
  TheoremSuite suite;
  auto& out = suite.records;

  const Spectrum s = randic_spectrum(g);
  const Rational randic_exact = general_randic_index(g, -1);
  const double randic = to_double(randic_exact);
  const auto& lam = s.eigenvalues();

  out.push_back(from_bound(make_bound("unit_interval", s.spectral_radius(), 1.0)));
  out.back().status = check_unit_interval(s) ? CheckStatus::Pass : CheckStatus::Fail;

  const double trace = std::accumulate(lam.begin(), lam.end(), 0.0);
  out.push_back(within("trace_zero", std::abs(trace), kBoundTolerance));
  const double trace_sq =
      std::accumulate(lam.begin(), lam.end(), 0.0, [](double acc, double x) { return acc + x * x; });
  out.push_back(within("trace_square", std::abs(trace_sq - 2.0 * randic), kBoundTolerance));

  for (std::size_t e = 0; e < g.size(); ++e) {
    const Edge& edge = g.edge(e);
    TheoremRecord t;
    t.id = "interlacing:" + std::to_string(edge.from) + "-" + std::to_string(edge.to);
    if (!edge_deletable(g, e)) {
      t.status = CheckStatus::Skip;
      t.reason = "deletion isolates a vertex";
    } else {
      const InterlacingResult res = interlacing_check(g, e);
      double worst = std::numeric_limits<double>::infinity();
      const int n = g.order();
      for (int k = 1; k <= n; ++k) {
        const double lo = k == 1 ? -1.0 : res.lambda[k - 2];
        const double hi = k == n ? 1.0 : res.lambda[k];
        worst = std::min({worst, res.theta[k - 1] - lo, hi - res.theta[k - 1]});
      }
      t.slack = worst;
      t.status = res.all_hold() ? CheckStatus::Pass : CheckStatus::Fail;
    }
    out.push_back(std::move(t));
  }

  const bool bipartite = is_bipartite(g).bipartite;
  const bool positive = is_positive_graph(g);
  const GainView view = gain_view(g);
  const bool allones = switching_certificate_to_constant(view, UnitComplex::one()).has_value();
  const bool antibalanced =
      switching_certificate_to_constant(view, UnitComplex::minus_one()).has_value();
  const int ones = s.multiplicity(1.0, kEigenvalueMatchTolerance);
  const int minus_ones = s.multiplicity(-1.0, kEigenvalueMatchTolerance);

  {
    const Spectrum plain = randic_spectrum(g.underlying());
    bool equal = true;
    for (int i = 0; i < s.size(); ++i) {
      if (std::abs(s[i] - plain[i]) > kEigenvalueMatchTolerance) equal = false;
    }
    out.push_back(verdict("spectrum_equals_underlying", equal == allones,
                          "spectra_equal=" + yes_no(equal) + " switchable_to_ones=" + yes_no(allones)));
  }
  if (ones > 0) {
    out.push_back(verdict("eigenvalue_one", positive && ones == 1,
                          "multiplicity=" + std::to_string(ones) + " positive=" + yes_no(positive)));
  } else {
    out.push_back(verdict("eigenvalue_one", true, "1 is not an eigenvalue"));
  }
  const bool symmetric = is_symmetric_about_zero(s);
  out.push_back(verdict("bipartite_symmetric", symmetric == bipartite,
                        "bipartite=" + yes_no(bipartite) + " symmetric=" + yes_no(symmetric)));
  out.push_back(verdict("minus_one_antibalanced", (minus_ones > 0) == antibalanced,
                        "has_minus_one=" + yes_no(minus_ones > 0) +
                            " antibalanced=" + yes_no(antibalanced)));
  out.push_back(verdict("minus_one_positive_bipartite", (minus_ones > 0) == (positive && bipartite),
                        "has_minus_one=" + yes_no(minus_ones > 0) +
                            " positive_bipartite=" + yes_no(positive && bipartite),
                        /*asserted=*/false));
  if (positive && bipartite) {
    out.push_back(verdict("positive_bipartite_plus_minus_one", ones > 0 && minus_ones > 0,
                          "has_one=" + yes_no(ones > 0) + " has_minus_one=" + yes_no(minus_ones > 0)));
  } else {
    TheoremRecord t;
    t.id = "positive_bipartite_plus_minus_one";
    t.status = CheckStatus::Skip;
    t.reason = "graph is not positive bipartite";
    out.push_back(std::move(t));
  }

  for (const BoundRecord& b : eigenvalue_bound_records(g, s)) out.push_back(from_bound(b));
  for (const BoundRecord& b : energy_bounds_report(s, randic, g.size()).bounds) {
    out.push_back(from_bound(b));
  }

  if (g.order() <= opts.combinatorial_cap) {
    const CharPoly<Rational> exact = char_poly_combinatorial(g, opts.combinatorial_cap);
    const CharPoly<double> numeric = char_poly_numeric(s);
    out.push_back(within("charpoly_two_route", max_coefficient_gap(to_double(exact), numeric), 1e-8));
    const double det_numeric = std::accumulate(lam.begin(), lam.end(), 1.0, std::multiplies<>());
    Rational det_exact = exact.coefficients.back();
    if (g.order() % 2 != 0) det_exact = -det_exact;
    out.push_back(within("determinant_two_route", std::abs(to_double(det_exact) - det_numeric), 1e-9));
  } else {
    for (const char* id : {"charpoly_two_route", "determinant_two_route"}) {
      TheoremRecord t;
      t.id = id;
      t.status = CheckStatus::Skip;
      t.reason = "order exceeds combinatorial cap";
      out.push_back(std::move(t));
    }
  }
  return suite;
}

}  // namespace randic
