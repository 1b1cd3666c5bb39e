#include "ftcslab/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ftcslab {

double total_variation(const SolutionField& field, bool periodic) {
  const auto& u = field.values;
  double tv = 0.0;
  for (std::size_t j = 0; j + 1 < u.size(); ++j) tv += std::abs(u[j + 1] - u[j]);
  if (periodic && !u.empty()) tv += std::abs(u.front() - u.back());
  return tv;
}

OscillationReport oscillation_report(const SolutionField& field, double initial_min,
                                     double initial_max, bool periodic) {
  if (initial_min > initial_max) throw std::invalid_argument("initial_min exceeds initial_max");
  const auto& u = field.values;
  OscillationReport r;
  r.total_variation = total_variation(field, periodic);
  if (u.empty()) return r;

  const auto [lo, hi] = std::minmax_element(u.begin(), u.end());
  r.overshoot = std::max(0.0, *hi - initial_max);
  r.undershoot = std::max(0.0, initial_min - *lo);

  for (std::size_t j = 1; j + 1 < u.size(); ++j) {
    const bool strict_max = u[j] > u[j - 1] && u[j] > u[j + 1];
    const bool strict_min = u[j] < u[j - 1] && u[j] < u[j + 1];
    if ((strict_max && u[j] > initial_max + kExtremumTolerance) ||
        (strict_min && u[j] < initial_min - kExtremumTolerance))
      ++r.new_extrema;
  }
  return r;
}

ErrorNorms error_norms(const SolutionField& numeric, const SolutionField& exact) {
  if (!(numeric.grid == exact.grid) || numeric.size() != exact.size())
    throw std::invalid_argument("error norms need fields on the same grid");
  ErrorNorms e{0.0, 0.0};
  for (std::size_t j = 0; j < numeric.size(); ++j) {
    const double d = std::abs(numeric.values[j] - exact.values[j]);
    e.l1 += d;
    e.linf = std::max(e.linf, d);
  }
  e.l1 *= numeric.grid.h;
  return e;
}

double amplification_factor(double cfl, double xi) {
  const double s = std::sin(xi);
  return std::sqrt(1.0 + cfl * cfl * s * s);
}

}  // namespace ftcslab
