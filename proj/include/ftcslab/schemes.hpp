#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ftcslab/core.hpp"
#include "ftcslab/problems.hpp"
#include "ftcslab/smoothness.hpp"

namespace ftcslab {

/// FTCSUP runs FTCS only where theta lies in the stable set and upwind
/// elsewhere; FTUPCS does the reverse.
enum class SchemeKind { FTCS, Upwind, FTCSUP, FTUPCS };

const char* to_string(SchemeKind kind);
SchemeKind scheme_from_string(const std::string& name);
inline bool is_hybrid(SchemeKind kind) {
  return kind == SchemeKind::FTCSUP || kind == SchemeKind::FTUPCS;
}

/// FTCS written as alpha * u_j + beta * u_upwind.
struct ConvexCoefficients {
  double alpha;
  double beta;
};

class DegenerateTheta : public std::domain_error {
 public:
  DegenerateTheta() : std::domain_error("theta is zero or indeterminate; no upwind-stencil form") {}
};

class CflViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct StepReport {
  SolutionField field;
  std::size_t cells_ftcs = 0;
  std::size_t cells_upwind = 0;
  double dt = 0.0;
};

// Single-step operators. Ghosts of the input must already be filled; the
// output keeps the input's ghosts and advances time by lambda * h.

SolutionField ftcs_step_linear(const SolutionField& field, double a, double lambda);
SolutionField upwind_step_linear(const SolutionField& field, double a, double lambda);
SolutionField ftcs_step_nonlinear(const SolutionField& field, const FluxFn& flux, double lambda);
SolutionField upwind_step_nonlinear(const SolutionField& field, const FluxFn& flux,
                                    const FluxDerivativeFn& derivative, double lambda);

/// Coefficients of the upwind-stencil rewriting of FTCS. c_signed is a*lambda.
/// Throws DegenerateTheta for theta == 0 or Indeterminate.
ConvexCoefficients convex_coefficients(Theta theta, double c_signed, Wind wind);

/// Per-cell switching between FTCS and upwind, classified on the frozen input field.
StepReport hybrid_step(const SolutionField& field, SchemeKind mode, const ProblemSpec& problem,
                       double lambda);

/// Dispatches any scheme kind; pure schemes report all cells under one count.
StepReport step(const SolutionField& field, SchemeKind scheme, const ProblemSpec& problem,
                double lambda);

/// Largest |interface speed| over the field including both ghost interfaces.
double max_local_speed(const SolutionField& field, const ProblemSpec& problem);

struct FinalTime {
  double value;
};
struct StepCount {
  std::size_t value;
};
using StopRule = std::variant<FinalTime, StepCount>;

struct MarchConfig {
  ProblemSpec problem = ProblemSpec::linear(1.0);
  SchemeKind scheme = SchemeKind::FTCS;
  double cfl = 0.5;
  StopRule stop = FinalTime{0.0};
  BoundaryRule boundary = BoundaryRule::Periodic;
};

/// Raised when a run diverges; carries everything accepted before the bad step.
class OscillationBlowup : public std::runtime_error {
 public:
  OscillationBlowup(std::size_t failed_step, SolutionField last_good,
                    std::vector<StepReport> trajectory);

  std::size_t failed_step() const { return failed_step_; }
  const SolutionField& last_good() const { return last_good_; }
  const std::vector<StepReport>& trajectory() const { return trajectory_; }

 private:
  std::size_t failed_step_;
  SolutionField last_good_;
  std::vector<StepReport> trajectory_;
};

/// Divergence guard: a run aborts once any value exceeds this multiple of the
/// initial max norm.
inline constexpr double kBlowupFactor = 1e6;

/// Marches from `initial` with boundary fill before each step. Linear problems
/// use a fixed k = C h / |a|; nonlinear problems recompute k = C h / max speed
/// every step. In FinalTime mode the last step is shortened to land on T.
std::vector<StepReport> advance(const MarchConfig& config, const SolutionField& initial);

}  // namespace ftcslab
