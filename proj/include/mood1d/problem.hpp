#ifndef MOOD1D_PROBLEM_HPP_
#define MOOD1D_PROBLEM_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mood1d/field.hpp"

namespace mood1d {

/// Physics bundle for one steady conservation law d/dx F(phi) = S(x) on
/// [x_left, x_right]: fluxes, source, boundary data, admissibility, exact
/// solution, and the initial profile the solvers start from.
struct ProblemSpec {
  std::string name;
  double x_left = 0.0;
  double x_right = 1.0;
  int n_components = 1;

  /// Physical flux F(state) at position x.
  std::function<State(const State&, double)> physical_flux;

  /// Two-point numerical flux at interface position x. mean_left/mean_right are
  /// the adjacent cell means (boundary states outside the domain), needed by
  /// dissipation coefficients such as the Rusanov lambda.
  std::function<State(const State& left, const State& right, double x,
                      const State& mean_left, const State& mean_right)>
      numerical_flux;

  /// Componentwise antiderivative of the source; per-cell source means are exact
  /// differences when present. Otherwise `source` is integrated by quadrature.
  /// Both empty means a source-free problem.
  std::function<State(double)> source_antiderivative;
  std::function<State(double)> source;

  /// Dirichlet states, applied to the exterior trace at the corresponding
  /// boundary interface; absent means a transparent (outflow) boundary where the
  /// exterior trace copies the interior one.
  std::optional<State> dirichlet_left;
  std::optional<State> dirichlet_right;

  /// Physical admissibility predicate (PAD). Always true for scalar problems.
  std::function<bool(const State&)> admissible;

  /// Largest characteristic speed of a cell-mean state, for pseudo-time steps.
  std::function<double(const State&, double x)> max_wavespeed;

  /// Exact steady solution in conserved variables, with its discontinuities.
  std::function<State(double)> exact_solution;
  std::vector<double> exact_breakpoints;

  /// Initial profile the solve hierarchy starts from.
  std::function<State(double)> initial_profile;
  std::vector<double> initial_breakpoints;

  /// Detector chain configuration: PAD participates only when enabled (Euler),
  /// and the smoothness detectors test a single component (density for Euler).
  bool pad_enabled = false;
  int detector_component = 0;
};

}  // namespace mood1d

#endif
