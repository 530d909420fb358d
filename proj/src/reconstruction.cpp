#include "mood1d/reconstruction.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace mood1d {

namespace {

// Mean of xi^k over the unit-width cell at offset m (xi = (x - x_i)/h):
// integral of xi^k from m-1/2 to m+1/2.
double monomial_mean(int m, int k) {
  return (std::pow(m + 0.5, k + 1) - std::pow(m - 0.5, k + 1)) / (k + 1);
}

// Scaled moments X_{i,k}/h^k; independent of the cell on a uniform mesh.
double scaled_moment(int k) {
  if (k % 2 == 1) return 0.0;
  return std::pow(0.5, k) / (k + 1);
}

// Design matrix in the scaled basis xi^k - X_k: one row per stencil offset.
Eigen::MatrixXd design_matrix(int d, std::span<const int> offsets) {
  Eigen::MatrixXd m(offsets.size(), d);
  for (Eigen::Index j = 0; j < m.rows(); ++j)
    for (int k = 1; k <= d; ++k)
      m(j, k - 1) = monomial_mean(offsets[j], k) - scaled_moment(k);
  return m;
}

Eigen::MatrixXd pseudo_inverse(const Eigen::MatrixXd& m) {
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(m);
  if (cod.rank() < m.cols())
    throw std::runtime_error("fit_polynomial: singular design matrix (rank " +
                             std::to_string(cod.rank()) + " for degree " +
                             std::to_string(m.cols()) + ")");
  return cod.pseudoInverse();
}

}  // namespace

std::vector<double> cell_moments(const Mesh& mesh, int i, int d) {
  (void)i;  // uniform mesh: moments are cell-independent
  std::vector<double> x(d);
  for (int k = 1; k <= d; ++k)
    x[k - 1] = (k % 2 == 1) ? 0.0 : std::pow(mesh.h / 2, k) / (k + 1);
  return x;
}

ReconPoly fit_polynomial(std::span<const double> phi, const Mesh& mesh, int i, int d,
                         const Stencil& stencil) {
  const int n = static_cast<int>(stencil.members.size());
  if (d < 0) throw std::invalid_argument("fit_polynomial: negative degree");
  if (n < d) throw std::invalid_argument("fit_polynomial: stencil smaller than degree");

  ReconPoly p;
  p.cell = i;
  p.degree = d;
  p.mean = phi[i - 1];
  p.center = mesh.center(i);
  if (d == 0) return p;

  std::vector<int> offsets(n);
  for (int j = 0; j < n; ++j) offsets[j] = stencil.members[j] - i;

  const Eigen::MatrixXd pinv = pseudo_inverse(design_matrix(d, offsets));
  Eigen::VectorXd rhs(n);
  for (int j = 0; j < n; ++j) rhs[j] = phi[stencil.members[j] - 1] - p.mean;
  const Eigen::VectorXd scaled = pinv * rhs;

  p.coeffs.resize(d);
  p.moments = cell_moments(mesh, i, d);
  for (int k = 1; k <= d; ++k) p.coeffs[k - 1] = scaled[k - 1] / std::pow(mesh.h, k);
  return p;
}

double eval_poly(const ReconPoly& p, double x) {
  double v = p.mean;
  const double dx = x - p.center;
  double pw = 1.0;
  for (int k = 1; k <= p.degree; ++k) {
    pw *= dx;
    v += p.coeffs[k - 1] * (pw - p.moments[k - 1]);
  }
  return v;
}

std::vector<double> trace_weights(int d, std::span<const int> offsets, double xi) {
  if (d == 0) return {};
  const Eigen::MatrixXd pinv = pseudo_inverse(design_matrix(d, offsets));
  Eigen::VectorXd basis(d);
  for (int k = 1; k <= d; ++k) basis[k - 1] = std::pow(xi, k) - scaled_moment(k);
  const Eigen::VectorXd w = pinv.transpose() * basis;
  return {w.data(), w.data() + w.size()};
}

}  // namespace mood1d
