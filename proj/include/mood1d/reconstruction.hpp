#ifndef MOOD1D_RECONSTRUCTION_HPP_
#define MOOD1D_RECONSTRUCTION_HPP_

#include <span>
#include <vector>

#include "mood1d/mesh.hpp"
#include "mood1d/stencil.hpp"

namespace mood1d {

/// Conservative polynomial representation of cell data,
///   phi_hat(x) = mean + sum_k coeffs[k-1] * ((x - center)^k - moments[k-1]),
/// whose mean over the owning cell equals `mean` by construction.
struct ReconPoly {
  int cell = 0;
  int degree = 0;
  double mean = 0.0;
  double center = 0.0;
  std::vector<double> coeffs;
  std::vector<double> moments;
};

/// Centered monomial means X_{i,k} = (1/h) int_{K_i} (x - x_i)^k dx for k = 1..d.
/// Closed form on a uniform mesh: zero for odd k, (h/2)^k/(k+1) for even k.
std::vector<double> cell_moments(const Mesh& mesh, int i, int d);

/// Least-squares fit of degree d on the given stencil. phi holds one component of
/// cell means with cell j stored at phi[j-1]. The fit minimizes the mismatch of the
/// polynomial's means over the stencil cells; the mean over cell i is matched
/// exactly. Uses an orthogonal factorization of the design matrix; |stencil| = d
/// (square system) is allowed and solved exactly.
ReconPoly fit_polynomial(std::span<const double> phi, const Mesh& mesh, int i, int d,
                         const Stencil& stencil);

double eval_poly(const ReconPoly& p, double x);

/// Weights w such that the degree-d fit of cell i on neighbor offsets o_j,
/// evaluated at x = x_i + xi*h, equals phi_i + sum_j w_j (phi_{i+o_j} - phi_i).
/// Depends only on (d, offsets, xi), so it is precomputed once per map
/// configuration and reused for every residual evaluation.
std::vector<double> trace_weights(int d, std::span<const int> offsets, double xi);

}  // namespace mood1d

#endif
