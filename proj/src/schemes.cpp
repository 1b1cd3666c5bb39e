#include "ftcslab/schemes.hpp"

#include <algorithm>
#include <cmath>

namespace ftcslab {

namespace {

constexpr double kCflSlack = 1e-12;

// Per-cell update formulas shared by the pure and hybrid operators so that a
// hybrid step selecting one formula everywhere is bit-identical to the pure step.

double ftcs_linear_cell(double um, double u, double up, double a, double lambda) {
  return u - 0.5 * a * lambda * (up - um);
}

double upwind_linear_cell(double um, double u, double up, double a, double lambda) {
  return a >= 0.0 ? u - a * lambda * (u - um) : u - a * lambda * (up - u);
}

double ftcs_nonlinear_cell(double um, double u, double up, const FluxFn& g, double lambda) {
  return u - 0.5 * lambda * (g(up) - g(um));
}

double upwind_interface_flux(double ul, double ur, const FluxFn& g, const FluxDerivativeFn& dg) {
  return local_speed(ul, ur, g, dg).value >= 0.0 ? g(ul) : g(ur);
}

double upwind_nonlinear_cell(double um, double u, double up, const FluxFn& g,
                             const FluxDerivativeFn& dg, double lambda) {
  return u - lambda * (upwind_interface_flux(u, up, g, dg) - upwind_interface_flux(um, u, g, dg));
}

void check_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument("mesh ratio lambda must be positive and finite");
}

SolutionField advanced_copy(const SolutionField& field, double lambda) {
  SolutionField out = field;
  out.time = field.time + lambda * field.grid.h;
  return out;
}

}  // namespace

const char* to_string(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::FTCS: return "ftcs";
    case SchemeKind::Upwind: return "upwind";
    case SchemeKind::FTCSUP: return "ftcsup";
    case SchemeKind::FTUPCS: return "ftupcs";
  }
  return "?";
}

SchemeKind scheme_from_string(const std::string& name) {
  if (name == "ftcs") return SchemeKind::FTCS;
  if (name == "upwind") return SchemeKind::Upwind;
  if (name == "ftcsup") return SchemeKind::FTCSUP;
  if (name == "ftupcs") return SchemeKind::FTUPCS;
  throw std::invalid_argument("unknown scheme '" + name + "'");
}

SolutionField ftcs_step_linear(const SolutionField& field, double a, double lambda) {
  check_lambda(lambda);
  SolutionField out = advanced_copy(field, lambda);
  for (std::size_t j = 0; j < field.size(); ++j)
    out.values[j] = ftcs_linear_cell(field.left(j), field.values[j], field.right(j), a, lambda);
  return out;
}

SolutionField upwind_step_linear(const SolutionField& field, double a, double lambda) {
  check_lambda(lambda);
  if (std::abs(a) * lambda > 1.0 + kCflSlack)
    throw CflViolation("upwind step needs |a| lambda <= 1");
  SolutionField out = advanced_copy(field, lambda);
  for (std::size_t j = 0; j < field.size(); ++j)
    out.values[j] = upwind_linear_cell(field.left(j), field.values[j], field.right(j), a, lambda);
  return out;
}

SolutionField ftcs_step_nonlinear(const SolutionField& field, const FluxFn& flux, double lambda) {
  check_lambda(lambda);
  SolutionField out = advanced_copy(field, lambda);
  for (std::size_t j = 0; j < field.size(); ++j)
    out.values[j] = ftcs_nonlinear_cell(field.left(j), field.values[j], field.right(j), flux, lambda);
  return out;
}

SolutionField upwind_step_nonlinear(const SolutionField& field, const FluxFn& flux,
                                    const FluxDerivativeFn& derivative, double lambda) {
  check_lambda(lambda);
  const std::size_t n = field.size();
  // Interface i sits between node i-1 and node i; interfaces 0 and n touch the ghosts.
  std::vector<double> interface_flux(n + 1);
  double max_speed = 0.0;
  for (std::size_t i = 0; i <= n; ++i) {
    const double ul = i == 0 ? field.ghost_left : field.values[i - 1];
    const double ur = i == n ? field.ghost_right : field.values[i];
    const double speed = local_speed(ul, ur, flux, derivative).value;
    max_speed = std::max(max_speed, std::abs(speed));
    interface_flux[i] = speed >= 0.0 ? flux(ul) : flux(ur);
  }
  if (lambda * max_speed > 1.0 + kCflSlack)
    throw CflViolation("upwind step needs lambda * max|local speed| <= 1");

  SolutionField out = advanced_copy(field, lambda);
  for (std::size_t j = 0; j < n; ++j)
    out.values[j] = field.values[j] - lambda * (interface_flux[j + 1] - interface_flux[j]);
  return out;
}

ConvexCoefficients convex_coefficients(Theta theta, double c_signed, Wind wind) {
  if (theta.is_indeterminate() || theta.value() == 0.0) throw DegenerateTheta();
  // theta = +-inf gives a reciprocal of exactly zero.
  const double inv = 1.0 / theta.value();
  const double beta = wind == Wind::Positive ? 0.5 * c_signed * (inv + 1.0)
                                             : -0.5 * c_signed * (1.0 + inv);
  return {1.0 - beta, beta};
}

double max_local_speed(const SolutionField& field, const ProblemSpec& problem) {
  if (problem.is_linear()) return std::abs(problem.speed());
  const std::size_t n = field.size();
  double m = 0.0;
  for (std::size_t i = 0; i <= n; ++i) {
    const double ul = i == 0 ? field.ghost_left : field.values[i - 1];
    const double ur = i == n ? field.ghost_right : field.values[i];
    m = std::max(m, std::abs(local_speed(ul, ur, problem.flux_fn(), problem.derivative_fn()).value));
  }
  return m;
}

StepReport hybrid_step(const SolutionField& field, SchemeKind mode, const ProblemSpec& problem,
                       double lambda) {
  if (!is_hybrid(mode)) throw std::invalid_argument("hybrid_step needs FTCSUP or FTUPCS");
  check_lambda(lambda);
  const bool ftcs_when_stable = mode == SchemeKind::FTCSUP;

  StepReport report{advanced_copy(field, lambda), 0, 0, lambda * field.grid.h};
  auto& out = report.field.values;

  if (problem.is_linear()) {
    const double a = problem.speed();
    const double cfl = std::abs(a) * lambda;
    if (cfl > 1.0 + kCflSlack) throw CflViolation("hybrid step needs |a| lambda <= 1");
    const RegionBounds bounds = linear_region(std::min(cfl, 1.0));
    const Wind wind = wind_of(a);
    for (std::size_t j = 0; j < field.size(); ++j) {
      const double um = field.left(j), u = field.values[j], up = field.right(j);
      const bool stable = in_stable_region(theta(um, u, up, wind), bounds);
      if (stable == ftcs_when_stable) {
        out[j] = ftcs_linear_cell(um, u, up, a, lambda);
        ++report.cells_ftcs;
      } else {
        out[j] = upwind_linear_cell(um, u, up, a, lambda);
        ++report.cells_upwind;
      }
    }
    return report;
  }

  const FluxFn& g = problem.flux_fn();
  const FluxDerivativeFn& dg = problem.derivative_fn();
  if (lambda * max_local_speed(field, problem) > 1.0 + kCflSlack)
    throw CflViolation("hybrid step needs lambda * max|local speed| <= 1");
  for (std::size_t j = 0; j < field.size(); ++j) {
    const double um = field.left(j), u = field.values[j], up = field.right(j);
    const LocalSpeed minus = local_speed(um, u, g, dg);
    const LocalSpeed plus = local_speed(u, up, g, dg);
    bool use_ftcs = false;
    if (minus.value * plus.value > 0.0) {
      const bool stable = in_stable_region(theta(um, u, up, wind_of(plus.value)),
                                           nonlinear_region(minus, plus, lambda));
      use_ftcs = stable == ftcs_when_stable;
    }
    // Sonic cells always take the upwind update.
    if (use_ftcs) {
      out[j] = ftcs_nonlinear_cell(um, u, up, g, lambda);
      ++report.cells_ftcs;
    } else {
      out[j] = upwind_nonlinear_cell(um, u, up, g, dg, lambda);
      ++report.cells_upwind;
    }
  }
  return report;
}

StepReport step(const SolutionField& field, SchemeKind scheme, const ProblemSpec& problem,
                double lambda) {
  if (is_hybrid(scheme)) return hybrid_step(field, scheme, problem, lambda);
  const std::size_t n = field.size();
  const double dt = lambda * field.grid.h;
  if (scheme == SchemeKind::FTCS) {
    SolutionField out = problem.is_linear() ? ftcs_step_linear(field, problem.speed(), lambda)
                                            : ftcs_step_nonlinear(field, problem.flux_fn(), lambda);
    return {std::move(out), n, 0, dt};
  }
  SolutionField out =
      problem.is_linear()
          ? upwind_step_linear(field, problem.speed(), lambda)
          : upwind_step_nonlinear(field, problem.flux_fn(), problem.derivative_fn(), lambda);
  return {std::move(out), 0, n, dt};
}

OscillationBlowup::OscillationBlowup(std::size_t failed_step, SolutionField last_good,
                                     std::vector<StepReport> trajectory)
    : std::runtime_error("solution diverged at step " + std::to_string(failed_step)),
      failed_step_(failed_step),
      last_good_(std::move(last_good)),
      trajectory_(std::move(trajectory)) {}

std::vector<StepReport> advance(const MarchConfig& config, const SolutionField& initial) {
  if (!(config.cfl > 0.0) || config.cfl > 1.0)
    throw std::invalid_argument("CFL number must lie in (0, 1]");
  const bool fixed_steps = std::holds_alternative<StepCount>(config.stop);
  const double t_end = fixed_steps ? 0.0 : initial.time + std::get<FinalTime>(config.stop).value;
  if (!fixed_steps && !(std::get<FinalTime>(config.stop).value >= 0.0))
    throw std::invalid_argument("final time must be non-negative");
  if (config.problem.is_linear() && config.problem.speed() == 0.0)
    throw std::invalid_argument("linear advection with a = 0 has no CFL time step");

  const double h = initial.grid.h;
  const double guard = kBlowupFactor * initial.max_norm();
  std::vector<StepReport> trajectory;
  SolutionField current = initial;

  for (std::size_t s = 0;; ++s) {
    if (fixed_steps) {
      if (s >= std::get<StepCount>(config.stop).value) break;
    } else if (current.time >= t_end) {
      break;
    }

    apply_boundary_in_place(current, config.boundary);
    double speed = max_local_speed(current, config.problem);
    if (speed == 0.0) speed = 1.0;  // nothing moves; any k is stable
    double k = config.cfl * h / speed;
    bool last = false;
    if (!fixed_steps && t_end - current.time <= k * (1.0 + 1e-10)) {
      k = t_end - current.time;
      last = true;
    }

    StepReport report = step(current, config.scheme, config.problem, k / h);
    if (last) report.field.time = t_end;
    apply_boundary_in_place(report.field, config.boundary);

    if (!report.field.all_finite() || report.field.max_norm() > guard)
      throw OscillationBlowup(s, std::move(current), std::move(trajectory));

    current = report.field;
    trajectory.push_back(std::move(report));
  }
  return trajectory;
}

}  // namespace ftcslab
