#pragma once

#include <functional>
#include <limits>
#include <stdexcept>

namespace ftcslab {

using FluxFn = std::function<double(double)>;
using FluxDerivativeFn = std::function<double(double)>;

/// Direction information travels: Positive means the upwind neighbour is j-1.
enum class Wind { Positive, Negative };

inline Wind wind_of(double speed) { return speed >= 0.0 ? Wind::Positive : Wind::Negative; }

/// Wind-oriented ratio of consecutive gradients.
///
/// Holds a finite value, +inf/-inf when the downwind difference vanishes, or
/// Indeterminate (stored as NaN) when both differences vanish.
class Theta {
 public:
  explicit Theta(double value) : value_(value) {}
  static Theta indeterminate() { return Theta(std::numeric_limits<double>::quiet_NaN()); }

  double value() const { return value_; }
  bool is_indeterminate() const { return value_ != value_; }
  bool is_infinite() const {
    return value_ == std::numeric_limits<double>::infinity() ||
           value_ == -std::numeric_limits<double>::infinity();
  }

 private:
  double value_;
};

/// Thresholds of the stable set: theta <= lower_cut or theta >= right_cut.
struct RegionBounds {
  double lower_cut;
  double right_cut;
};

/// Secant approximation of g'(u) at the interface between two nodes.
struct LocalSpeed {
  double value;
};

class SonicCell : public std::domain_error {
 public:
  SonicCell() : std::domain_error("local speeds change sign across the cell (sonic point)") {}
};

/// Positive wind: (u_c - u_m)/(u_p - u_c). Negative wind: (u_p - u_c)/(u_c - u_m).
Theta theta(double u_minus, double u_center, double u_plus, Wind wind);

/// Stable set for linear advection at CFL number C = |a| lambda, 0 < C <= 1.
RegionBounds linear_region(double cfl);

LocalSpeed local_speed(double u_left, double u_right, const FluxFn& flux,
                       const FluxDerivativeFn& derivative);

/// Stable set for a nonlinear flux from the two interface speeds around a cell.
/// Throws SonicCell when the speeds do not share a strict sign.
RegionBounds nonlinear_region(LocalSpeed speed_minus, LocalSpeed speed_plus, double lambda);

/// Infinite theta and constant data (Indeterminate) are both classified stable.
bool in_stable_region(Theta theta, RegionBounds bounds);

}  // namespace ftcslab
