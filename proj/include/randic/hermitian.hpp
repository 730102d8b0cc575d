#ifndef RANDIC_HERMITIAN_HPP
#define RANDIC_HERMITIAN_HPP

#include <complex>
#include <span>
#include <string>

#include <Eigen/Dense>

#include "randic/gain.hpp"
#include "randic/mixed_graph.hpp"

namespace randic {

using Complex = std::complex<double>;

class NotHermitianError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense complex matrix with conj(a_ij) == a_ji exactly. Row/column v - 1
/// belongs to vertex v.
class HermitianMatrix {
 public:
  /// Copies the upper triangle and mirrors it; the diagonal keeps its real part.
  static HermitianMatrix from_upper(const Eigen::MatrixXcd& m);
  /// Throws NotHermitianError when |a_ij - conj(a_ji)| > tol anywhere.
  static HermitianMatrix from_dense(const Eigen::MatrixXcd& m, double tol = 0.0);

  int dim() const { return static_cast<int>(m_.rows()); }
  Complex operator()(int row, int col) const { return m_(row, col); }
  const Eigen::MatrixXcd& matrix() const { return m_; }

 private:
  explicit HermitianMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {}
  Eigen::MatrixXcd m_;
};

/// Entries 1 / w / conj(w) / 0 from the mixed graph.
HermitianMatrix build_hermitian_adjacency(const MixedGraph& g);
/// Adjacency matrix of a general gain graph.
HermitianMatrix build_gain_adjacency(const GainView& view);

/// D^{-1/2} H D^{-1/2}. Throws PreconditionError naming the first isolated
/// vertex.
HermitianMatrix build_randic(const MixedGraph& g);
HermitianMatrix build_randic(const GainView& view);

struct Laplacians {
  HermitianMatrix laplacian;             // D - H
  HermitianMatrix normalized_laplacian;  // D^{-1/2} (D - H) D^{-1/2}
};
/// Throws PreconditionError when a vertex is isolated.
Laplacians build_laplacians(const MixedGraph& g);
/// D - H alone, defined for every graph.
HermitianMatrix build_laplacian(const MixedGraph& g);

/// n x m vertex-edge incidence matrix, columns in edge order.
class IncidenceMatrix {
 public:
  explicit IncidenceMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {}
  const Eigen::MatrixXcd& matrix() const { return m_; }
  int vertices() const { return static_cast<int>(m_.rows()); }
  int edges() const { return static_cast<int>(m_.cols()); }
  Complex operator()(Vertex v, std::size_t edge) const {
    return m_(v - 1, static_cast<Eigen::Index>(edge));
  }

 private:
  Eigen::MatrixXcd m_;
};

/// Fixed gauge: un-oriented {k, l} with k < l gets s_k = 1, s_l = -1; arc k -> l
/// gets s_l = 1, s_k = -w.
IncidenceMatrix build_incidence(const MixedGraph& g);
/// Multiplies column e by phases[e].
IncidenceMatrix regauge(const IncidenceMatrix& s, std::span<const UnitComplex> phases);
/// Checks unit moduli on incident entries, zeros elsewhere, and the relations
/// s_k = -s_l (un-oriented) or s_k = -w s_l (arc k -> l).
bool satisfies_incidence_relations(const MixedGraph& g, const IncidenceMatrix& s, double tol = 1e-12);
/// I - (D^{-1/2} S)(D^{-1/2} S)^*.
Eigen::MatrixXcd randic_from_incidence(const MixedGraph& g, const IncidenceMatrix& s);

/// Product of Randic entries along consecutive walk vertices; throws
/// GraphError on a non-adjacent step.
Complex walk_value(const MixedGraph& g, std::span<const Vertex> walk);

/// y^* H y evaluated as the edge sum of |y_i + h_ij y_j|^2 - |y_i|^2 - |y_j|^2.
double quadratic_form(const MixedGraph& g, std::span<const Complex> y);

/// Row-major dump, tab-separated "a+bi" entries with 17 significant digits.
std::string dump_matrix(const HermitianMatrix& m);
std::string format_complex(Complex z);

}  // namespace randic

#endif  // RANDIC_HERMITIAN_HPP
