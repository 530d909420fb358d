#ifndef MOOD1D_FLUX_HPP_
#define MOOD1D_FLUX_HPP_

#include <functional>
#include <stdexcept>

#include "mood1d/field.hpp"

namespace mood1d {

/// Thrown when a state leaves the physically admissible set (rho <= 0 or p <= 0).
class InadmissibleState : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Upwind flux u(x) * left for advection with positive velocity.
double upwind_flux(double left, double right, double x,
                   const std::function<double(double)>& velocity);

/// Rusanov flux for the Burgers flux phi^2/2 with dissipation coefficient lambda.
double rusanov_flux(double left, double right, double lambda);

struct EulerPrim {
  double rho = 0.0;
  double u = 0.0;
  double p = 0.0;
};

EulerPrim cons_to_prim(const State& cons, double gamma);
State prim_to_cons(const EulerPrim& prim, double gamma);
double sound_speed(const EulerPrim& prim, double gamma);

/// Physical Euler flux (rho u, rho u^2 + p, u (E + p)).
State euler_flux(const State& cons, double gamma);

/// HLL flux with wave speeds s- = min(u- - a-, u+ - a+), s+ = max(u- + a-, u+ + a+).
/// The one-sided branches return the physical flux of the corresponding state.
State hll_flux(const State& left, const State& right, double gamma);

}  // namespace mood1d

#endif
