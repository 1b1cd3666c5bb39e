#include "ftcslab/smoothness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ftcslab {

namespace {

constexpr double kCflSlack = 1e-12;

Theta ratio(double numerator, double denominator) {
  if (denominator != 0.0) return Theta(numerator / denominator);
  if (numerator == 0.0) return Theta::indeterminate();
  return Theta(std::copysign(std::numeric_limits<double>::infinity(), numerator));
}

}  // namespace

Theta theta(double u_minus, double u_center, double u_plus, Wind wind) {
  const double backward = u_center - u_minus;
  const double forward = u_plus - u_center;
  return wind == Wind::Positive ? ratio(backward, forward) : ratio(forward, backward);
}

RegionBounds linear_region(double cfl) {
  if (!(cfl > 0.0) || cfl > 1.0)
    throw std::invalid_argument("linear stability region needs CFL number in (0, 1]");
  return {-1.0, cfl / (2.0 - cfl)};
}

LocalSpeed local_speed(double u_left, double u_right, const FluxFn& flux,
                       const FluxDerivativeFn& derivative) {
  const double du = u_right - u_left;
  if (du != 0.0) return {(flux(u_right) - flux(u_left)) / du};
  return {derivative(u_left)};
}

RegionBounds nonlinear_region(LocalSpeed speed_minus, LocalSpeed speed_plus, double lambda) {
  const double am = speed_minus.value;
  const double ap = speed_plus.value;
  if (!(am * ap > 0.0)) throw SonicCell();
  if (!(lambda > 0.0)) throw std::invalid_argument("mesh ratio lambda must be positive");
  if (lambda * std::max(std::abs(am), std::abs(ap)) > 1.0 + kCflSlack)
    throw std::invalid_argument("nonlinear stability region needs lambda * max|speed| <= 1");

  if (am > 0.0) return {-ap / am, lambda * ap / (2.0 - lambda * am)};
  return {-am / ap, -lambda * am / (2.0 + lambda * ap)};
}

bool in_stable_region(Theta theta, RegionBounds bounds) {
  if (theta.is_indeterminate()) return true;
  const double t = theta.value();
  return t <= bounds.lower_cut || t >= bounds.right_cut;
}

}  // namespace ftcslab
