#include "mood1d/detectors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mood1d {

std::pair<double, double> curvature_pair(std::span<const double> phi, int i) {
  const int n = static_cast<int>(phi.size());
  const int lo = std::max(2, i - 1);
  const int hi = std::min(n - 1, i + 1);
  double mn = 0.0, mx = 0.0;
  bool any = false;
  for (int j = lo; j <= hi; ++j) {
    const double chi = phi[j] - 2.0 * phi[j - 1] + phi[j - 2];
    if (!any) {
      mn = mx = chi;
      any = true;
    } else {
      mn = std::min(mn, chi);
      mx = std::max(mx, chi);
    }
  }
  return {mn, mx};
}

bool cell_is_valid(const Field& candidate, int i, const DetectorConfig& cfg,
                   const ProblemSpec& problem, const Mesh& mesh) {
  // PAD
  if (problem.pad_enabled && !problem.admissible(candidate.state(i))) return false;

  const int n = candidate.cells();
  // ED: boundary cells carry one-sided data only; PAD already guarded them.
  if (i == 1 || i == n) return true;
  const auto phi = candidate.comp(problem.detector_component);
  const double dm = phi[i - 1] - phi[i - 2];
  const double dp = phi[i] - phi[i - 1];
  if (dm * dp > 0.0) return true;  // no local extremum

  const auto [chi_min, chi_max] = curvature_pair(phi, i);
  const double amin = std::min(std::abs(chi_min), std::abs(chi_max));
  const double amax = std::max(std::abs(chi_min), std::abs(chi_max));

  // PD
  const double eps_pd = cfg.eps_pd > 0.0 ? cfg.eps_pd : mesh.h;
  if (amax <= eps_pd) return true;

  // LOD
  if (chi_min * chi_max < 0.0) return false;

  // SD
  const double ratio = amin / amax;
  const double threshold = cfg.sd_strict ? 1.0 - cfg.eps_sd : cfg.eps_sd;
  return ratio >= threshold;
}

CpdMap detect_and_decrement(const Field& candidate, const CpdMap& cpd,
                            const DetectorConfig& cfg, const ProblemSpec& problem,
                            const Mesh& mesh) {
  CpdMap out = cpd;
  for (int i = 1; i <= candidate.cells(); ++i) {
    if (out[i - 1] == 0) continue;
    if (cell_is_valid(candidate, i, cfg, problem, mesh)) continue;
    auto pos = std::find(cfg.cascade.begin(), cfg.cascade.end(), out[i - 1]);
    if (pos == cfg.cascade.end())
      throw std::logic_error("detect_and_decrement: degree not in cascade");
    if (pos + 1 != cfg.cascade.end()) out[i - 1] = *(pos + 1);
  }
  return out;
}

}  // namespace mood1d
