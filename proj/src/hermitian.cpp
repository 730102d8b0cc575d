#include "randic/hermitian.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace randic {

HermitianMatrix HermitianMatrix::from_upper(const Eigen::MatrixXcd& m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw NotHermitianError("matrix is not square");
  Eigen::MatrixXcd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out(i, i) = Complex(m(i, i).real(), 0.0);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      out(i, j) = m(i, j);
      out(j, i) = std::conj(m(i, j));
    }
  }
  return HermitianMatrix(std::move(out));
}

HermitianMatrix HermitianMatrix::from_dense(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() != m.cols()) throw NotHermitianError("matrix is not square");
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) {
        throw NotHermitianError("entries (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ") and (" + std::to_string(j + 1) + "," +
                                std::to_string(i + 1) + ") are not conjugate");
      }
    }
  }
  return from_upper(m);
}

HermitianMatrix build_gain_adjacency(const GainView& view) {
  const MixedGraph& g = view.base();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(g.order(), g.order());
  for (std::size_t e = 0; e < g.size(); ++e) {
    const Edge& edge = g.edge(e);
    h(edge.low() - 1, edge.high() - 1) = view.edge_gains()[e].value();
  }
  return HermitianMatrix::from_upper(h);
}

HermitianMatrix build_hermitian_adjacency(const MixedGraph& g) {
  return build_gain_adjacency(gain_view(g));
}

namespace {

Eigen::VectorXd inverse_sqrt_degrees(const MixedGraph& g) {
  if (const auto v = isolated_vertex(g)) {
    throw PreconditionError("vertex " + std::to_string(*v) +
                            " is isolated; D^{-1/2} is undefined");
  }
  Eigen::VectorXd s(g.order());
  for (Vertex v = 1; v <= g.order(); ++v) s(v - 1) = 1.0 / std::sqrt(double(g.degree(v)));
  return s;
}

HermitianMatrix normalize(const HermitianMatrix& m, const Eigen::VectorXd& s) {
  const Eigen::MatrixXcd scaled = s.asDiagonal() * m.matrix() * s.asDiagonal();
  return HermitianMatrix::from_upper(scaled);
}

}  // namespace

HermitianMatrix build_randic(const GainView& view) {
  return normalize(build_gain_adjacency(view), inverse_sqrt_degrees(view.base()));
}

HermitianMatrix build_randic(const MixedGraph& g) { return build_randic(gain_view(g)); }

HermitianMatrix build_laplacian(const MixedGraph& g) {
  Eigen::MatrixXcd l = -build_hermitian_adjacency(g).matrix();
  for (Vertex v = 1; v <= g.order(); ++v) l(v - 1, v - 1) = double(g.degree(v));
  return HermitianMatrix::from_upper(l);
}

Laplacians build_laplacians(const MixedGraph& g) {
  const Eigen::VectorXd s = inverse_sqrt_degrees(g);
  HermitianMatrix l = build_laplacian(g);
  HermitianMatrix normalized = normalize(l, s);
  return {std::move(l), std::move(normalized)};
}

IncidenceMatrix build_incidence(const MixedGraph& g) {
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(g.order(), static_cast<Eigen::Index>(g.size()));
  const Complex omega = SixthRoot::omega().to_complex();
  for (std::size_t e = 0; e < g.size(); ++e) {
    const Edge& edge = g.edge(e);
    const auto col = static_cast<Eigen::Index>(e);
    if (edge.kind == EdgeKind::Unoriented) {
      s(edge.from - 1, col) = 1.0;
      s(edge.to - 1, col) = -1.0;
    } else {
      s(edge.to - 1, col) = 1.0;
      s(edge.from - 1, col) = -omega;
    }
  }
  return IncidenceMatrix(std::move(s));
}

IncidenceMatrix regauge(const IncidenceMatrix& s, std::span<const UnitComplex> phases) {
  if (static_cast<int>(phases.size()) != s.edges()) {
    throw std::invalid_argument("one phase per edge is required");
  }
  Eigen::MatrixXcd m = s.matrix();
  for (Eigen::Index e = 0; e < m.cols(); ++e) m.col(e) *= phases[e].value();
  return IncidenceMatrix(std::move(m));
}

bool satisfies_incidence_relations(const MixedGraph& g, const IncidenceMatrix& s, double tol) {
  if (s.vertices() != g.order() || s.edges() != static_cast<int>(g.size())) return false;
  const Complex omega = SixthRoot::omega().to_complex();
  for (std::size_t e = 0; e < g.size(); ++e) {
    const Edge& edge = g.edge(e);
    for (Vertex v = 1; v <= g.order(); ++v) {
      const bool incident = v == edge.from || v == edge.to;
      const double modulus = std::abs(s(v, e));
      if (incident ? std::abs(modulus - 1.0) > tol : modulus > tol) return false;
    }
    const Complex expected = edge.kind == EdgeKind::Unoriented ? -s(edge.to, e)
                                                                : -omega * s(edge.to, e);
    if (std::abs(s(edge.from, e) - expected) > tol) return false;
  }
  return true;
}

Eigen::MatrixXcd randic_from_incidence(const MixedGraph& g, const IncidenceMatrix& s) {
  const Eigen::VectorXd scale = inverse_sqrt_degrees(g);
  const Eigen::MatrixXcd scaled = scale.asDiagonal() * s.matrix();
  return Eigen::MatrixXcd::Identity(g.order(), g.order()) - scaled * scaled.adjoint();
}

Complex walk_value(const MixedGraph& g, std::span<const Vertex> walk) {
  Complex value = 1.0;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    const Vertex u = walk[i];
    const Vertex v = walk[i + 1];
    const auto idx = g.edge_index(u, v);
    if (!idx) {
      throw GraphError("walk step " + std::to_string(u) + " -> " + std::to_string(v) +
                       " is not an edge");
    }
    value *= g.edge(*idx).gain(u, v).to_complex() /
             std::sqrt(double(g.degree(u)) * double(g.degree(v)));
  }
  return value;
}

double quadratic_form(const MixedGraph& g, std::span<const Complex> y) {
  if (static_cast<int>(y.size()) != g.order()) {
    throw std::invalid_argument("vector length " + std::to_string(y.size()) +
                                " does not match vertex count " + std::to_string(g.order()));
  }
  double total = 0.0;
  for (const Edge& e : g.edges()) {
    const Vertex i = e.low();
    const Vertex j = e.high();
    const Complex h = e.gain(i, j).to_complex();
    total += std::norm(y[i - 1] + h * y[j - 1]) - std::norm(y[i - 1]) - std::norm(y[j - 1]);
  }
  return total;
}

std::string format_complex(Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real() + 0.0, z.imag() + 0.0);
  return buf;
}

std::string dump_matrix(const HermitianMatrix& m) {
  std::ostringstream out;
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      if (j) out << '\t';
      out << format_complex(m(i, j));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace randic
