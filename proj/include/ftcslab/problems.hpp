#pragma once

#include <string>

#include "ftcslab/core.hpp"
#include "ftcslab/smoothness.hpp"

namespace ftcslab {

enum class ProblemKind { LinearAdvection, Burgers };

/// A scalar conservation law u_t + g(u)_x = 0.
class ProblemSpec {
 public:
  static ProblemSpec linear(double a);
  static ProblemSpec burgers();

  ProblemKind kind() const { return kind_; }
  bool is_linear() const { return kind_ == ProblemKind::LinearAdvection; }
  /// Advection speed; only meaningful for linear advection.
  double speed() const { return a_; }

  double flux(double u) const { return flux_(u); }
  double derivative(double u) const { return derivative_(u); }
  const FluxFn& flux_fn() const { return flux_; }
  const FluxDerivativeFn& derivative_fn() const { return derivative_; }

 private:
  ProblemSpec(ProblemKind kind, double a, FluxFn flux, FluxDerivativeFn derivative)
      : kind_(kind), a_(a), flux_(std::move(flux)), derivative_(std::move(derivative)) {}

  ProblemKind kind_;
  double a_;
  FluxFn flux_;
  FluxDerivativeFn derivative_;
};

double flux_eval(const ProblemSpec& problem, double u);

enum class IcKind { Sine, Square, Bump, BurgersStep, Spike };

struct Interval {
  double lo;
  double hi;
  double length() const { return hi - lo; }
};

struct InitialCondition {
  IcKind kind;
  Interval domain;

  /// Initial condition on its customary domain: sine and square on [-1,1],
  /// bump on [-2,4], Burgers step on [0,1], spike on [0,2].
  static InitialCondition standard(IcKind kind);
};

Interval default_domain(IcKind kind);
const char* to_string(IcKind kind);
IcKind ic_from_string(const std::string& name);
const char* to_string(ProblemKind kind);

/// Pointwise value of an analytic initial profile. The spike has no pointwise
/// form (it lives on a grid node), so it is rejected here.
double ic_value(IcKind kind, double x);

/// Samples the initial condition on the grid. The grid must start at the
/// domain's left end and end either at its right end or one spacing short of
/// it (periodic sampling).
SolutionField sample_ic(const InitialCondition& ic, const Grid1D& grid);

/// u0(x - a t) for linear advection; with periodic boundaries the argument is
/// wrapped back into the initial condition's domain.
SolutionField exact_linear(const InitialCondition& ic, const Grid1D& grid,
                           const ProblemSpec& problem, double t, BoundaryRule boundary);

}  // namespace ftcslab
