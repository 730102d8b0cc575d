#include "randic/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "randic/enumeration.hpp"

namespace randic {

Spectrum::Spectrum(std::vector<double> eigenvalues, std::optional<Eigen::MatrixXcd> eigenvectors)
    : values_(std::move(eigenvalues)), vectors_(std::move(eigenvectors)) {
  if (!std::is_sorted(values_.begin(), values_.end())) {
    if (vectors_) throw std::invalid_argument("eigenvalues with vectors must be ascending");
    std::sort(values_.begin(), values_.end());
  }
  sigma_ = values_.empty() ? 0.0 : std::numeric_limits<double>::infinity();
  for (double x : values_) {
    energy_ += std::abs(x);
    rho_ = std::max(rho_, std::abs(x));
    sigma_ = std::min(sigma_, std::abs(x));
    if (x < -kZeroTolerance) ++negatives_;
  }
}

int Spectrum::multiplicity(double x, double tol) const {
  return static_cast<int>(
      std::count_if(values_.begin(), values_.end(), [&](double v) { return std::abs(v - x) <= tol; }));
}

Spectrum eigen_decompose(const HermitianMatrix& h, bool with_vectors) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      h.matrix(), with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver did not converge");
  const Eigen::VectorXd& ev = solver.eigenvalues();
  std::vector<double> values(ev.data(), ev.data() + ev.size());
  if (with_vectors) return Spectrum(std::move(values), solver.eigenvectors());
  return Spectrum(std::move(values));
}

Spectrum randic_spectrum(const MixedGraph& g) { return eigen_decompose(build_randic(g)); }

double energy(const Spectrum& s) { return s.energy(); }
double spectral_radius(const Spectrum& s) { return s.spectral_radius(); }

namespace {

// Unevaluated sum hi + lo with |lo| <= ulp(hi) / 2.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;
};

DoubleDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

DoubleDouble add(DoubleDouble a, DoubleDouble b) {
  DoubleDouble s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return two_sum(s.hi, s.lo);
}

DoubleDouble scale(DoubleDouble a, double x) {
  const double p = a.hi * x;
  const double err = std::fma(a.hi, x, -p);
  return two_sum(p, err + a.lo * x);
}

}  // namespace

CharPoly<double> char_poly_numeric(const Spectrum& s) {
  std::vector<DoubleDouble> c(1, DoubleDouble{1.0, 0.0});
  for (double lambda : s.eigenvalues()) {
    c.emplace_back();
    for (std::size_t k = c.size() - 1; k >= 1; --k) {
      c[k] = add(c[k], scale(c[k - 1], -lambda));
    }
  }
  CharPoly<double> out;
  out.coefficients.reserve(c.size());
  for (const DoubleDouble& x : c) out.coefficients.push_back(x.hi + x.lo);
  return out;
}

CharPoly<double> char_poly_numeric(const HermitianMatrix& h) {
  return char_poly_numeric(eigen_decompose(h));
}

namespace {

void check_combinatorial_preconditions(const MixedGraph& g, int cap) {
  if (g.order() > cap) {
    throw PreconditionError("graph has " + std::to_string(g.order()) +
                            " vertices; the combinatorial route is capped at " +
                            std::to_string(cap) + " (use the numeric method)");
  }
  if (const auto v = isolated_vertex(g)) {
    throw PreconditionError("vertex " + std::to_string(*v) + " is isolated");
  }
}

Rational signed_sum(const MixedGraph& g, int order) {
  Rational total = 0;
  for_each_elementary_subgraph(g, order,
                               [&](const ElementarySubgraph& s) { total += s.signed_term(); });
  return total;
}

}  // namespace

CharPoly<Rational> char_poly_combinatorial(const MixedGraph& g, int cap) {
  check_combinatorial_preconditions(g, cap);
  CharPoly<Rational> out;
  out.coefficients.reserve(g.order() + 1);
  for (int k = 0; k <= g.order(); ++k) {
    Rational sum = signed_sum(g, k);
    out.coefficients.push_back(k % 2 == 0 ? sum : Rational(-sum));
  }
  return out;
}

Rational determinant_combinatorial(const MixedGraph& g, int cap) {
  check_combinatorial_preconditions(g, cap);
  return signed_sum(g, g.order());
}

CharPoly<double> to_double(const CharPoly<Rational>& p) {
  CharPoly<double> out;
  out.coefficients.reserve(p.coefficients.size());
  for (const Rational& r : p.coefficients) out.coefficients.push_back(randic::to_double(r));
  return out;
}

double max_coefficient_gap(const CharPoly<double>& a, const CharPoly<double>& b) {
  if (a.coefficients.size() != b.coefficients.size()) {
    return std::numeric_limits<double>::infinity();
  }
  double gap = 0.0;
  for (std::size_t k = 0; k < a.coefficients.size(); ++k) {
    gap = std::max(gap, std::abs(a.coefficients[k] - b.coefficients[k]));
  }
  return gap;
}

}  // namespace randic
