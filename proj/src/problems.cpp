#include "ftcslab/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ftcslab {

ProblemSpec ProblemSpec::linear(double a) {
  if (!std::isfinite(a)) throw std::invalid_argument("advection speed must be finite");
  return ProblemSpec(
      ProblemKind::LinearAdvection, a, [a](double u) { return a * u; },
      [a](double) { return a; });
}

ProblemSpec ProblemSpec::burgers() {
  return ProblemSpec(
      ProblemKind::Burgers, 0.0, [](double u) { return 0.5 * u * u; },
      [](double u) { return u; });
}

double flux_eval(const ProblemSpec& problem, double u) { return problem.flux(u); }

Interval default_domain(IcKind kind) {
  switch (kind) {
    case IcKind::Sine:
    case IcKind::Square:
      return {-1.0, 1.0};
    case IcKind::Bump:
      return {-2.0, 4.0};
    case IcKind::BurgersStep:
      return {0.0, 1.0};
    case IcKind::Spike:
      return {0.0, 2.0};
  }
  throw std::logic_error("unhandled initial condition");
}

InitialCondition InitialCondition::standard(IcKind kind) { return {kind, default_domain(kind)}; }

const char* to_string(IcKind kind) {
  switch (kind) {
    case IcKind::Sine: return "sine";
    case IcKind::Square: return "square";
    case IcKind::Bump: return "bump";
    case IcKind::BurgersStep: return "step";
    case IcKind::Spike: return "spike";
  }
  return "?";
}

IcKind ic_from_string(const std::string& name) {
  if (name == "sine") return IcKind::Sine;
  if (name == "square") return IcKind::Square;
  if (name == "bump") return IcKind::Bump;
  if (name == "step") return IcKind::BurgersStep;
  if (name == "spike") return IcKind::Spike;
  throw std::invalid_argument("unknown initial condition '" + name + "'");
}

const char* to_string(ProblemKind kind) {
  return kind == ProblemKind::LinearAdvection ? "linear" : "burgers";
}

double ic_value(IcKind kind, double x) {
  switch (kind) {
    case IcKind::Sine:
      return std::sin(std::numbers::pi * x);
    case IcKind::Square:
      return std::abs(x) <= 1.0 / 3.0 ? 1.0 : 0.0;
    case IcKind::Bump:
      // exp(-1/(1-x^2)) tends to 0 as |x| -> 1; the closed end takes the limit.
      return std::abs(x) < 1.0 ? std::exp(-1.0 / (1.0 - x * x)) : 0.0;
    case IcKind::BurgersStep:
      return x <= 0.5 ? 1.0 : 0.0;
    case IcKind::Spike:
      break;
  }
  throw std::invalid_argument("spike initial condition has no pointwise form");
}

namespace {

void check_grid_spans(const InitialCondition& ic, const Grid1D& grid) {
  const double tol = 1e-12 * std::max(1.0, ic.domain.length());
  const bool left_ok = std::abs(grid.x_min - ic.domain.lo) <= tol;
  const bool closed = std::abs(grid.x_max - ic.domain.hi) <= tol;
  const bool half_open = std::abs(grid.x_max + grid.h - ic.domain.hi) <= tol;
  if (!left_ok || !(closed || half_open))
    throw std::invalid_argument("grid does not span the initial condition's domain");
}

std::size_t nearest_node(const Grid1D& grid, double x) {
  std::size_t best = 0;
  double best_dist = std::abs(grid.node(0) - x);
  for (std::size_t j = 1; j < grid.n; ++j) {
    const double d = std::abs(grid.node(j) - x);
    if (d < best_dist) {
      best = j;
      best_dist = d;
    }
  }
  return best;
}

}  // namespace

SolutionField sample_ic(const InitialCondition& ic, const Grid1D& grid) {
  check_grid_spans(ic, grid);
  SolutionField field(grid);
  if (ic.kind == IcKind::Spike) {
    field.values[nearest_node(grid, 1.0)] = 1.0;
    return field;
  }
  for (std::size_t j = 0; j < grid.n; ++j) field.values[j] = ic_value(ic.kind, grid.node(j));
  return field;
}

SolutionField exact_linear(const InitialCondition& ic, const Grid1D& grid,
                           const ProblemSpec& problem, double t, BoundaryRule boundary) {
  if (!problem.is_linear())
    throw std::invalid_argument("exact solution is only available for linear advection");
  if (ic.kind == IcKind::Spike)
    throw std::invalid_argument("spike initial condition has no exact transport solution");
  check_grid_spans(ic, grid);

  SolutionField field(grid, t);
  const double shift = problem.speed() * t;
  const double period = ic.domain.length();
  for (std::size_t j = 0; j < grid.n; ++j) {
    double xi = grid.node(j) - shift;
    if (boundary == BoundaryRule::Periodic && (xi < ic.domain.lo || xi >= ic.domain.hi)) {
      xi = ic.domain.lo + std::fmod(xi - ic.domain.lo, period);
      if (xi < ic.domain.lo) xi += period;
    }
    field.values[j] = ic_value(ic.kind, xi);
  }
  return field;
}

}  // namespace ftcslab
