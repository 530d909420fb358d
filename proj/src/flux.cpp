#include "mood1d/flux.hpp"

#include <cassert>
#include <cmath>

namespace mood1d {

double upwind_flux(double left, double right, double x,
                   const std::function<double(double)>& velocity) {
  (void)right;
  const double u = velocity(x);
  if (!(u > 0.0)) throw std::invalid_argument("upwind_flux: requires positive velocity");
  return u * left;
}

double rusanov_flux(double left, double right, double lambda) {
  assert(lambda >= 0.0);
  return 0.5 * (0.5 * left * left + 0.5 * right * right) - lambda * (right - left);
}

EulerPrim cons_to_prim(const State& cons, double gamma) {
  const double rho = cons[0];
  if (!(rho > 0.0)) throw InadmissibleState("cons_to_prim: non-positive density");
  const double u = cons[1] / rho;
  const double p = (gamma - 1.0) * (cons[2] - 0.5 * rho * u * u);
  return {rho, u, p};
}

State prim_to_cons(const EulerPrim& prim, double gamma) {
  const double e = 0.5 * prim.rho * prim.u * prim.u + prim.p / (gamma - 1.0);
  return {prim.rho, prim.rho * prim.u, e};
}

double sound_speed(const EulerPrim& prim, double gamma) {
  if (!(prim.rho > 0.0 && prim.p > 0.0))
    throw InadmissibleState("sound_speed: non-positive density or pressure");
  return std::sqrt(gamma * prim.p / prim.rho);
}

State euler_flux(const State& cons, double gamma) {
  const EulerPrim v = cons_to_prim(cons, gamma);
  return {cons[1], cons[1] * v.u + v.p, v.u * (cons[2] + v.p)};
}

State hll_flux(const State& left, const State& right, double gamma) {
  const EulerPrim vl = cons_to_prim(left, gamma);
  const EulerPrim vr = cons_to_prim(right, gamma);
  const double al = sound_speed(vl, gamma);
  const double ar = sound_speed(vr, gamma);
  const double sm = std::min(vl.u - al, vr.u - ar);
  const double sp = std::max(vl.u + al, vr.u + ar);
  assert(sp > sm);  // a > 0 on both sides

  if (sm >= 0.0) return euler_flux(left, gamma);
  if (sp <= 0.0) return euler_flux(right, gamma);
  const State fl = euler_flux(left, gamma);
  const State fr = euler_flux(right, gamma);
  State f;
  for (int c = 0; c < 3; ++c)
    f[c] = (sp * fl[c] - sm * fr[c] + sp * sm * (right[c] - left[c])) / (sp - sm);
  return f;
}

}  // namespace mood1d
