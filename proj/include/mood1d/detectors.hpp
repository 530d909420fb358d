#ifndef MOOD1D_DETECTORS_HPP_
#define MOOD1D_DETECTORS_HPP_

#include <span>
#include <utility>
#include <vector>

#include "mood1d/field.hpp"
#include "mood1d/mesh.hpp"
#include "mood1d/problem.hpp"
#include "mood1d/stencil.hpp"

namespace mood1d {

struct DetectorConfig {
  /// Plateau tolerance; non-positive means "use the mesh width h".
  double eps_pd = 0.0;
  /// Smoothness threshold on the min/max curvature ratio.
  double eps_sd = 0.25;
  /// Alternate smoothness reading: require ratio >= 1 - eps_sd instead.
  bool sd_strict = false;
  /// Decreasing degree sequence tried on detection failure; ends at 0.
  std::vector<int> cascade = {5, 2, 1, 0};
};

/// (min, max) of the second differences chi_j = phi_{j+1} - 2 phi_j + phi_{j-1}
/// over the interior members of {i-1, i, i+1}. phi stores cell j at phi[j-1].
std::pair<double, double> curvature_pair(std::span<const double> phi, int i);

/// Runs the validity chain PAD -> ED -> PD -> LOD -> SD on cell i of a candidate.
/// Scalar problems skip PAD; Euler tests density/pressure positivity there and
/// the smoothness detectors look at the density component only. Boundary cells
/// pass the chain once PAD holds.
bool cell_is_valid(const Field& candidate, int i, const DetectorConfig& cfg,
                   const ProblemSpec& problem, const Mesh& mesh);

/// One decrementing sweep: every invalid cell with a positive degree moves to the
/// next lower cascade entry; all other cells keep their degree. Never increases
/// a degree, so repeated application reaches a fixed point.
CpdMap detect_and_decrement(const Field& candidate, const CpdMap& cpd,
                            const DetectorConfig& cfg, const ProblemSpec& problem,
                            const Mesh& mesh);

}  // namespace mood1d

#endif
