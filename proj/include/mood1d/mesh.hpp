#ifndef MOOD1D_MESH_HPP_
#define MOOD1D_MESH_HPP_

#include <functional>
#include <span>

namespace mood1d {

/// Uniform 1D mesh over [x_left, x_right] with 1-based cell indexing.
/// Cell i occupies [interface(i-1), interface(i)] for i = 1..n_cells.
struct Mesh {
  double x_left = 0.0;
  double x_right = 1.0;
  int n_cells = 0;
  double h = 0.0;

  double center(int i) const { return x_left + (i - 0.5) * h; }
  /// interface(k) = x_{k+1/2}; k ranges over 0..n_cells, so interface(0) = x_left.
  double interface(int k) const { return x_left + k * h; }
  /// Cell whose interior contains x, clamped to [1, n_cells].
  int cell_containing(double x) const;
};

Mesh build_mesh(double x_left, double x_right, int n_cells);

/// 5-point Gauss-Legendre quadrature of f over [a, b] (exact through degree 9).
double gauss_legendre5(const std::function<double(double)>& f, double a, double b);

/// Mean of f over cell i, splitting the cell at any interior breakpoints so the
/// quadrature never straddles a discontinuity. Breakpoints must be sorted.
double cell_mean(const std::function<double(double)>& f, const Mesh& mesh, int i,
                 std::span<const double> breakpoints = {});

}  // namespace mood1d

#endif
