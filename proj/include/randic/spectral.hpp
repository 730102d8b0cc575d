#ifndef RANDIC_SPECTRAL_HPP
#define RANDIC_SPECTRAL_HPP

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "randic/hermitian.hpp"
#include "randic/mixed_graph.hpp"
#include "randic/rational.hpp"

namespace randic {

/// Eigenvalues in [-tol, tol] count as zero when counting negatives.
inline constexpr double kZeroTolerance = 1e-9;

/// Ascending real eigenvalues plus the quantities the bounds are stated in.
class Spectrum {
 public:
  explicit Spectrum(std::vector<double> eigenvalues,
                    std::optional<Eigen::MatrixXcd> eigenvectors = std::nullopt);

  const std::vector<double>& eigenvalues() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }
  double operator[](int i) const { return values_.at(i); }
  double smallest() const { return values_.front(); }
  double largest() const { return values_.back(); }

  double energy() const { return energy_; }
  /// rho = max |lambda|.
  double spectral_radius() const { return rho_; }
  /// sigma = min |lambda|.
  double min_modulus() const { return sigma_; }
  /// Eigenvalues below -kZeroTolerance.
  int negative_count() const { return negatives_; }
  /// Eigenvalues within tol of x.
  int multiplicity(double x, double tol) const;

  /// Column i belongs to eigenvalue i, when requested.
  const std::optional<Eigen::MatrixXcd>& eigenvectors() const { return vectors_; }

 private:
  std::vector<double> values_;
  std::optional<Eigen::MatrixXcd> vectors_;
  double energy_ = 0.0;
  double rho_ = 0.0;
  double sigma_ = 0.0;
  int negatives_ = 0;
};

Spectrum eigen_decompose(const HermitianMatrix& h, bool with_vectors = false);
/// Convenience: spectrum of the Randic matrix of g.
Spectrum randic_spectrum(const MixedGraph& g);

double energy(const Spectrum& s);
double spectral_radius(const Spectrum& s);

/// x^n + a_1 x^{n-1} + ... + a_n, stored as {1, a_1, ..., a_n}.
template <class Scalar>
struct CharPoly {
  std::vector<Scalar> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  const Scalar& operator[](int k) const { return coefficients.at(k); }
};

/// Expands prod (x - lambda_i) over the eigenvalues, carrying each
/// coefficient as an unevaluated double-double sum.
CharPoly<double> char_poly_numeric(const HermitianMatrix& h);
CharPoly<double> char_poly_numeric(const Spectrum& s);

inline constexpr int kCombinatorialCap = 10;

/// Exact coefficients from signed elementary-subgraph sums:
/// (-1)^k a_k = sum over order-k elementary subgraphs of
/// (-1)^{r + l_n + l_sn} 2^{l_n + l_p} Q.
/// Throws PreconditionError on isolated vertices or n > cap.
CharPoly<Rational> char_poly_combinatorial(const MixedGraph& g, int cap = kCombinatorialCap);

/// Same signed sum over spanning elementary subgraphs; equals det R.
Rational determinant_combinatorial(const MixedGraph& g, int cap = kCombinatorialCap);

CharPoly<double> to_double(const CharPoly<Rational>& p);

/// Largest |a_k - b_k|; infinity when the degrees differ.
double max_coefficient_gap(const CharPoly<double>& a, const CharPoly<double>& b);

}  // namespace randic

#endif  // RANDIC_SPECTRAL_HPP
