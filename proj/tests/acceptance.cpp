// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ftcslab/diagnostics.hpp"
#include "ftcslab/experiment.hpp"
#include "ftcslab/problems.hpp"
#include "ftcslab/schemes.hpp"
#include "ftcslab/smoothness.hpp"

using namespace ftcslab;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

SolutionField stencil(double um, double u, double up) {
  SolutionField f(build_grid(0.0, 1.0, 3), {um, u, up});
  f.ghost_left = um;
  f.ghost_right = up;
  return f;
}

ExperimentResult run(ProblemKind problem, IcKind ic, SchemeKind scheme, std::size_t n, double cfl,
                     StopRule stop) {
  RunConfig c;
  c.problem = problem;
  c.a = 1.0;
  c.ic = ic;
  c.domain = default_domain(ic);
  c.scheme = scheme;
  c.n = n;
  c.cfl = cfl;
  c.stop = stop;
  c.boundary = problem == ProblemKind::LinearAdvection ? BoundaryRule::Periodic : BoundaryRule::Outflow;
  c.output_path = "unused.csv";
  return simulate(c);
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// 1. Stable theta keeps the FTCS update between u_j and its upwind neighbour;
//    theta strictly inside the oscillatory band always yields a negative coefficient.
Outcome single_step_interval() {
  std::mt19937_64 rng(20240101);
  std::uniform_real_distribution<double> u(-10.0, 10.0), cdist(0.0, 1.0);
  std::size_t stable = 0, inside = 0, violations = 0, nonnegative = 0;
  for (std::size_t i = 0; stable < 100000 || inside < 100000; ++i) {
    const double um = u(rng), uc = u(rng), up = u(rng);
    double cfl = cdist(rng);
    if (cfl == 0.0) continue;
    const double a = i % 2 ? 1.0 : -1.0;
    const Wind w = wind_of(a);
    const Theta t = theta(um, uc, up, w);
    const RegionBounds b = linear_region(cfl);
    if (in_stable_region(t, b)) {
      ++stable;
      const double next = ftcs_step_linear(stencil(um, uc, up), a, cfl).values[1];
      const double nb = a > 0 ? um : up;
      const double slack = 1e-12 * std::max({std::abs(um), std::abs(uc), std::abs(up)});
      if (next < std::min(uc, nb) - slack || next > std::max(uc, nb) + slack) ++violations;
    } else {
      if (!(t.value() > b.lower_cut && t.value() < b.right_cut)) continue;
      ++inside;
      if (t.value() == 0.0) continue;  // reciprocal is infinite: beta diverges
      const auto k = convex_coefficients(t, a * cfl, w);
      if (k.alpha >= 0.0 && k.beta >= 0.0) ++nonnegative;
    }
  }
  return {violations == 0 && nonnegative == 0,
          fmt("%zu stable stencils, %zu violations; %zu oscillatory, %zu without a negative coefficient",
              stable, violations, inside, nonnegative)};
}

// 2. Equal interface speeds collapse the nonlinear region onto the linear one.
Outcome nonlinear_reduction() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> speed(0.01, 10.0), frac(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double a = speed(rng) * (i % 2 ? 1.0 : -1.0);
    double f = frac(rng);
    if (f == 0.0) f = 0.5;
    const double lambda = f / std::abs(a);
    const auto lin = linear_region(std::abs(a) * lambda);
    const auto nl = nonlinear_region({a}, {a}, lambda);
    worst = std::max({worst, std::abs(nl.lower_cut - lin.lower_cut),
                      std::abs(nl.right_cut - lin.right_cut) / std::abs(lin.right_cut)});
  }
  return {worst <= 1e-14, fmt("max relative difference %.3e over 1000 pairs", worst)};
}

// 3. A single discrete Fourier mode grows by |G| per FTCS step, and max |G| > 1 for every C.
Outcome von_neumann() {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> cdist(1e-3, 1.0);
  const std::size_t n = 128;
  std::uniform_int_distribution<std::size_t> mode(0, n - 1);
  const Grid1D g = build_periodic_grid(0.0, 1.0, n);
  double worst = 0.0;
  bool all_unstable = true;
  for (int i = 0; i < 50; ++i) {
    const double cfl = cdist(rng);
    const double xi = 2.0 * std::numbers::pi * static_cast<double>(mode(rng)) / n;
    SolutionField re(g), im(g);
    for (std::size_t j = 0; j < n; ++j) {
      re.values[j] = std::cos(xi * j);
      im.values[j] = std::sin(xi * j);
    }
    double amp_prev = 1.0;
    for (int s = 0; s < 5; ++s) {
      re = ftcs_step_linear(apply_boundary(re, BoundaryRule::Periodic), 1.0, cfl);
      im = ftcs_step_linear(apply_boundary(im, BoundaryRule::Periodic), 1.0, cfl);
      const double amp = std::hypot(re.values[n / 3], im.values[n / 3]);
      worst = std::max(worst, std::abs(amp / amp_prev - amplification_factor(cfl, xi)));
      amp_prev = amp;
    }
    double max_g = 0.0;
    for (int k = 0; k <= 1000; ++k)
      max_g = std::max(max_g, amplification_factor(cfl, std::numbers::pi * k / 1000.0));
    all_unstable = all_unstable && max_g > 1.0;
  }
  return {worst <= 1e-10 && all_unstable,
          fmt("max per-step growth error %.3e; max|G| > 1 for all C: %s", worst,
              all_unstable ? "yes" : "no")};
}

// 4. Sine wave under FTCS: oscillations shrink with the CFL number.
Outcome sine_cfl_trend() {
  double over[3];
  const double cfl[3] = {0.05, 0.25, 0.5};
  for (int i = 0; i < 3; ++i)
    over[i] = run(ProblemKind::LinearAdvection, IcKind::Sine, SchemeKind::FTCS, 80, cfl[i],
                  FinalTime{4.0})
                  .oscillation.overshoot;
  return {over[0] < over[1] && over[1] < over[2] && over[0] < 0.05,
          fmt("overshoot C=0.05: %.4g, C=0.25: %.4g, C=0.5: %.4g", over[0], over[1], over[2])};
}

// 5. Square wave: FTCSUP is clean, FTUPCS oscillates.
Outcome square_hybrids() {
  const auto up = run(ProblemKind::LinearAdvection, IcKind::Square, SchemeKind::FTCSUP, 80, 0.1,
                      FinalTime{0.1}).oscillation;
  const auto down = run(ProblemKind::LinearAdvection, IcKind::Square, SchemeKind::FTUPCS, 80, 0.1,
                        FinalTime{0.1}).oscillation;
  const bool ok = up.new_extrema == 0 && up.overshoot < 1e-10 && up.undershoot < 1e-10 &&
                  down.new_extrema >= 1 && down.overshoot > 0.01;
  return {ok, fmt("FTCSUP extrema=%zu over=%.2e under=%.2e; FTUPCS extrema=%zu over=%.4g",
                  up.new_extrema, up.overshoot, up.undershoot, down.new_extrema, down.overshoot)};
}

// 6. Smooth bump: FTCSUP is clean, FTUPCS creates extrema.
Outcome bump_hybrids() {
  const auto up = run(ProblemKind::LinearAdvection, IcKind::Bump, SchemeKind::FTCSUP, 120, 0.6,
                      FinalTime{1.0}).oscillation;
  const auto down = run(ProblemKind::LinearAdvection, IcKind::Bump, SchemeKind::FTUPCS, 120, 0.6,
                        FinalTime{1.0}).oscillation;
  return {up.new_extrema == 0 && down.new_extrema >= 1,
          fmt("FTCSUP extrema=%zu; FTUPCS extrema=%zu (under=%.3e)", up.new_extrema,
              down.new_extrema, down.undershoot)};
}

// 7. Burgers step after 6 steps at CFL 0.9.
Outcome burgers_step() {
  const auto ftcs = run(ProblemKind::Burgers, IcKind::BurgersStep, SchemeKind::FTCS, 80, 0.9, StepCount{6});
  const auto ftupcs = run(ProblemKind::Burgers, IcKind::BurgersStep, SchemeKind::FTUPCS, 80, 0.9, StepCount{6});
  const auto ftcsup = run(ProblemKind::Burgers, IcKind::BurgersStep, SchemeKind::FTCSUP, 80, 0.9, StepCount{6});
  const auto& v = ftcsup.final_field.values;
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  const bool ok = ftcs.oscillation.overshoot > 0.01 && ftupcs.oscillation.overshoot > 0.01 &&
                  *lo >= -1e-10 && *hi <= 1.0 + 1e-10 && ftcsup.oscillation.new_extrema == 0;
  return {ok, fmt("overshoot FTCS=%.4g FTUPCS=%.4g; FTCSUP range [%.3g, %.17g], extrema=%zu",
                  ftcs.oscillation.overshoot, ftupcs.oscillation.overshoot, *lo, *hi,
                  ftcsup.oscillation.new_extrema)};
}

// 8. Nonlinear FTCS conserves the periodic sum.
Outcome conservation() {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1.0, 1.0), lam(0.05, 1.0);
  const auto b = ProblemSpec::burgers();
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    SolutionField f(build_periodic_grid(0.0, 1.0, 64));
    for (auto& x : f.values) x = u(rng);
    f = apply_boundary(f, BoundaryRule::Periodic);
    const auto next = ftcs_step_nonlinear(f, b.flux_fn(), lam(rng));
    const double before = std::accumulate(f.values.begin(), f.values.end(), 0.0);
    const double after = std::accumulate(next.values.begin(), next.values.end(), 0.0);
    double mass = 0.0;
    for (double x : f.values) mass += std::abs(x);
    worst = std::max(worst, std::abs(after - before) / mass);
  }
  return {worst <= 1e-12, fmt("max relative change in sum %.3e over 1000 fields", worst)};
}

// 9. Upwind is TVD.
Outcome upwind_tvd() {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-10.0, 10.0), cdist(0.0, 1.0);
  std::size_t increases = 0;
  double worst = -1e300;
  for (int i = 0; i < 10000; ++i) {
    SolutionField f(build_periodic_grid(0.0, 1.0, 32));
    for (auto& x : f.values) x = u(rng);
    f = apply_boundary(f, BoundaryRule::Periodic);
    double c = cdist(rng);
    if (c == 0.0) c = 1.0;
    const double a = i % 2 ? 1.0 : -1.0;
    const double delta = total_variation(upwind_step_linear(f, a, c), true) - total_variation(f, true);
    worst = std::max(worst, delta);
    if (delta > 1e-12) ++increases;
  }
  return {increases == 0, fmt("%zu increases; largest TV change %.3e", increases, worst)};
}

// 10. FTCS is exact on affine data; unit-CFL upwind is an exact shift.
Outcome exactness() {
  const Grid1D g = build_grid(-1.0, 1.0, 81);
  SolutionField f(g);
  const double slope = 1.7, offset = -0.3;
  for (std::size_t j = 0; j < g.n; ++j) f.values[j] = slope * g.node(j) + offset;
  f.ghost_left = slope * (g.x_min - g.h) + offset;
  f.ghost_right = slope * (g.x_max + g.h) + offset;
  double affine_err = 0.0;
  for (double a : {1.0, -0.6}) {
    for (double lambda : {0.1, 0.5, 1.0}) {
      const auto next = ftcs_step_linear(f, a, lambda);
      const double shift = slope * a * lambda * g.h;
      for (std::size_t j = 0; j < g.n; ++j)
        affine_err = std::max(affine_err, std::abs(next.values[j] - (f.values[j] - shift)));
    }
  }

  const auto r = run(ProblemKind::LinearAdvection, IcKind::Sine, SchemeKind::Upwind, 80, 1.0,
                     FinalTime{2.0});
  double shift_err = 0.0;
  for (std::size_t j = 0; j < r.initial.size(); ++j)
    shift_err = std::max(shift_err, std::abs(r.final_field.values[j] - r.initial.values[j]));

  const auto one = stencil(0.25, 1.0, -2.0);
  const bool one_node = upwind_step_linear(one, 1.0, 1.0).values[1] == 0.25 &&
                        upwind_step_linear(one, -1.0, 1.0).values[1] == -2.0;
  return {affine_err <= 1e-12 && shift_err <= 1e-10 && one_node && r.steps == 80,
          fmt("affine error %.3e; traversal error %.3e after %zu steps", affine_err, shift_err,
              r.steps)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1  single-step interval on the stable set", single_step_interval},
      {"2  nonlinear region reduces to linear", nonlinear_reduction},
      {"3  von Neumann amplification oracle", von_neumann},
      {"4  sine FTCS oscillation vs CFL", sine_cfl_trend},
      {"5  square wave FTCSUP / FTUPCS", square_hybrids},
      {"6  bump FTCSUP / FTUPCS", bump_hybrids},
      {"7  Burgers step FTCS / FTUPCS / FTCSUP", burgers_step},
      {"8  nonlinear FTCS conservation", conservation},
      {"9  upwind total variation", upwind_tvd},
      {"10 affine FTCS and unit-CFL upwind exactness", exactness},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
