#pragma once

#include <cstddef>

#include "ftcslab/core.hpp"

namespace ftcslab {

struct OscillationReport {
  double total_variation = 0.0;
  double overshoot = 0.0;   // max(u) - initial max, floored at 0
  double undershoot = 0.0;  // initial min - min(u), floored at 0
  std::size_t new_extrema = 0;
};

struct ErrorNorms {
  double l1;
  double linf;
};

/// Tolerance separating roundoff from a genuine new extremum.
inline constexpr double kExtremumTolerance = 1e-10;

/// Sum of |u_{j+1} - u_j| over the nodes, plus |u_0 - u_{n-1}| when periodic.
double total_variation(const SolutionField& field, bool periodic = false);

/// new_extrema counts strict interior local extrema lying outside
/// [initial_min, initial_max] by more than kExtremumTolerance.
OscillationReport oscillation_report(const SolutionField& field, double initial_min,
                                     double initial_max, bool periodic = false);

/// L1 = h * sum |diff|, Linf = max |diff|. Throws on grid mismatch.
ErrorNorms error_norms(const SolutionField& numeric, const SolutionField& exact);

/// |G(xi)| = sqrt(1 + C^2 sin^2 xi), the modulus of the FTCS symbol 1 - i C sin xi.
double amplification_factor(double cfl, double xi);

}  // namespace ftcslab
