#include "ftcslab/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ftcslab {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

bool has_exact(const RunConfig& c) {
  return c.problem == ProblemKind::LinearAdvection && c.ic != IcKind::Spike;
}

}  // namespace

void validate(const RunConfig& c) {
  if (c.n < 3) throw ConfigError("--n must be at least 3");
  if (!(c.cfl > 0.0) || c.cfl > 1.0) throw ConfigError("--cfl must lie in (0, 1]");
  if (!(c.domain.lo < c.domain.hi) || !std::isfinite(c.domain.lo) || !std::isfinite(c.domain.hi))
    throw ConfigError("domain must satisfy x_min < x_max");
  if (c.problem == ProblemKind::LinearAdvection && (!std::isfinite(c.a) || c.a == 0.0))
    throw ConfigError("--a must be finite and nonzero for linear advection");
  if (const auto* t = std::get_if<FinalTime>(&c.stop); t && !(t->value >= 0.0 && std::isfinite(t->value)))
    throw ConfigError("--tfinal must be finite and non-negative");
  if (c.output_path.empty()) throw ConfigError("--out is required");
}

ProblemSpec make_problem(const RunConfig& c) {
  return c.problem == ProblemKind::LinearAdvection ? ProblemSpec::linear(c.a) : ProblemSpec::burgers();
}

Grid1D make_grid(const RunConfig& c) {
  return c.boundary == BoundaryRule::Periodic ? build_periodic_grid(c.domain.lo, c.domain.hi, c.n)
                                              : build_grid(c.domain.lo, c.domain.hi, c.n);
}

ExperimentResult simulate(const RunConfig& config) {
  validate(config);
  const ProblemSpec problem = make_problem(config);
  const Grid1D grid = make_grid(config);
  const InitialCondition ic{config.ic, config.domain};

  ExperimentResult r;
  r.initial = apply_boundary(sample_ic(ic, grid), config.boundary);
  const auto [lo, hi] = std::minmax_element(r.initial.values.begin(), r.initial.values.end());
  r.initial_min = *lo;
  r.initial_max = *hi;

  const MarchConfig march{problem, config.scheme, config.cfl, config.stop, config.boundary};
  std::vector<StepReport> trajectory;
  try {
    trajectory = advance(march, r.initial);
    r.final_field = trajectory.empty() ? r.initial : trajectory.back().field;
  } catch (const OscillationBlowup& e) {
    r.status = RunStatus::Blowup;
    r.blowup_step = e.failed_step();
    trajectory = e.trajectory();
    r.final_field = e.last_good();
  }
  r.steps = trajectory.size();
  for (const auto& s : trajectory) r.counts.push_back({s.cells_ftcs, s.cells_upwind, s.dt});

  const bool periodic = config.boundary == BoundaryRule::Periodic;
  r.oscillation = oscillation_report(r.final_field, r.initial_min, r.initial_max, periodic);
  if (has_exact(config)) {
    r.exact = exact_linear(ic, grid, problem, r.final_field.time, config.boundary);
    r.errors = error_norms(r.final_field, *r.exact);
  }
  return r;
}

std::string solution_csv(const ExperimentResult& r) {
  std::ostringstream os;
  os << (r.exact ? "x,u_numeric,u_exact\n" : "x,u_numeric\n");
  const Grid1D& g = r.final_field.grid;
  for (std::size_t j = 0; j < g.n; ++j) {
    os << fmt17(g.node(j)) << ',' << fmt17(r.final_field.values[j]);
    if (r.exact) os << ',' << fmt17(r.exact->values[j]);
    os << '\n';
  }
  return os.str();
}

nlohmann::json config_to_json(const RunConfig& c) {
  nlohmann::json j;
  j["problem"] = to_string(c.problem);
  j["a"] = c.a;
  j["ic"] = to_string(c.ic);
  j["x_min"] = c.domain.lo;
  j["x_max"] = c.domain.hi;
  j["scheme"] = to_string(c.scheme);
  j["n"] = c.n;
  j["cfl"] = c.cfl;
  if (const auto* t = std::get_if<FinalTime>(&c.stop)) {
    j["t_final"] = t->value;
  } else {
    j["steps"] = std::get<StepCount>(c.stop).value;
  }
  j["bc"] = to_string(c.boundary);
  j["out"] = c.output_path;
  return j;
}

RunConfig config_from_json(const nlohmann::json& j) {
  try {
    RunConfig c;
    const std::string problem = j.at("problem").get<std::string>();
    if (problem == "linear") {
      c.problem = ProblemKind::LinearAdvection;
    } else if (problem == "burgers") {
      c.problem = ProblemKind::Burgers;
    } else {
      throw ConfigError("unknown problem '" + problem + "'");
    }
    c.a = j.at("a").get<double>();
    c.ic = ic_from_string(j.at("ic").get<std::string>());
    c.domain = {j.at("x_min").get<double>(), j.at("x_max").get<double>()};
    c.scheme = scheme_from_string(j.at("scheme").get<std::string>());
    c.n = j.at("n").get<std::size_t>();
    c.cfl = j.at("cfl").get<double>();
    const bool has_t = j.contains("t_final"), has_s = j.contains("steps");
    if (has_t == has_s) throw ConfigError("exactly one of t_final / steps must be set");
    c.stop = has_t ? StopRule{FinalTime{j.at("t_final").get<double>()}}
                   : StopRule{StepCount{j.at("steps").get<std::size_t>()}};
    c.boundary = boundary_from_string(j.at("bc").get<std::string>());
    c.output_path = j.at("out").get<std::string>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed run config: ") + e.what());
  }
}

nlohmann::json manifest_json(const RunConfig& config, const ExperimentResult& r) {
  nlohmann::json m;
  m["config"] = config_to_json(config);
  m["status"] = r.status == RunStatus::Completed ? "completed" : "blowup";
  if (r.blowup_step) m["blowup_step"] = *r.blowup_step;
  m["steps_taken"] = r.steps;
  m["final_time"] = r.final_field.time;
  m["grid"] = {{"x_first", r.final_field.grid.x_min},
               {"x_last", r.final_field.grid.x_max},
               {"h", r.final_field.grid.h}};
  m["initial_min"] = r.initial_min;
  m["initial_max"] = r.initial_max;
  m["oscillation"] = {{"total_variation", r.oscillation.total_variation},
                      {"overshoot", r.oscillation.overshoot},
                      {"undershoot", r.oscillation.undershoot},
                      {"new_extrema", r.oscillation.new_extrema}};
  if (r.errors) m["error_norms"] = {{"l1", r.errors->l1}, {"linf", r.errors->linf}};
  if (is_hybrid(config.scheme)) {
    auto& counts = m["cell_counts"] = nlohmann::json::array();
    for (const auto& c : r.counts)
      counts.push_back({{"ftcs", c.ftcs}, {"upwind", c.upwind}, {"dt", c.dt}});
  }
  return m;
}

std::filesystem::path manifest_path(const std::filesystem::path& csv_path) {
  std::filesystem::path p = csv_path;
  p += ".manifest.json";
  return p;
}

ExperimentResult run_experiment(const RunConfig& config) {
  ExperimentResult r = simulate(config);
  write_text(config.output_path, solution_csv(r));
  write_text(manifest_path(config.output_path), manifest_json(config, r).dump(2) + "\n");
  return r;
}

std::string region_csv(double c_min, double c_max, std::size_t samples) {
  if (!(c_min > 0.0) || !(c_min < c_max) || c_max > 1.0)
    throw ConfigError("region needs 0 < cmin < cmax <= 1");
  if (samples < 2) throw ConfigError("region needs at least 2 samples");
  std::ostringstream os;
  os << "C,lower_cut,right_cut\n";
  for (std::size_t i = 0; i < samples; ++i) {
    const double c = i + 1 == samples
                         ? c_max
                         : c_min + (c_max - c_min) * static_cast<double>(i) /
                                       static_cast<double>(samples - 1);
    const RegionBounds b = linear_region(c);
    os << fmt17(c) << ',' << fmt17(b.lower_cut) << ',' << fmt17(b.right_cut) << '\n';
  }
  return os.str();
}

void emit_region(double c_min, double c_max, std::size_t samples,
                 const std::filesystem::path& output_path) {
  const std::string csv = region_csv(c_min, c_max, samples);
  write_text(output_path, csv);
}

std::vector<FigureRun> figure_runs(const std::filesystem::path& outdir) {
  std::vector<FigureRun> runs;
  auto add = [&](std::string name, ProblemKind problem, IcKind ic, SchemeKind scheme,
                 std::size_t n, double cfl, StopRule stop) {
    RunConfig c;
    c.problem = problem;
    c.a = 1.0;
    c.ic = ic;
    c.domain = default_domain(ic);
    c.scheme = scheme;
    c.n = n;
    c.cfl = cfl;
    c.stop = stop;
    c.boundary = problem == ProblemKind::LinearAdvection ? BoundaryRule::Periodic
                                                         : BoundaryRule::Outflow;
    c.output_path = (outdir / (name + ".csv")).string();
    runs.push_back({std::move(name), std::move(c)});
  };
  const auto linear = ProblemKind::LinearAdvection;
  const auto burgers = ProblemKind::Burgers;

  // Sine wave under pure FTCS at three CFL numbers.
  add("fig2a_sine_ftcs_c0.05", linear, IcKind::Sine, SchemeKind::FTCS, 80, 0.05, FinalTime{4.0});
  add("fig2b_sine_ftcs_c0.25", linear, IcKind::Sine, SchemeKind::FTCS, 80, 0.25, FinalTime{4.0});
  add("fig2c_sine_ftcs_c0.5", linear, IcKind::Sine, SchemeKind::FTCS, 80, 0.5, FinalTime{4.0});

  for (SchemeKind s : {SchemeKind::FTCS, SchemeKind::FTCSUP, SchemeKind::FTUPCS})
    add(std::string("fig3_square_") + to_string(s), linear, IcKind::Square, s, 80, 0.1,
        FinalTime{0.1});

  // No grid size is given for the bump; 120 nodes on [-2,4) gives h = 0.05.
  for (SchemeKind s : {SchemeKind::FTCSUP, SchemeKind::FTUPCS})
    add(std::string("fig4_bump_") + to_string(s), linear, IcKind::Bump, s, 120, 0.6,
        FinalTime{1.0});

  for (SchemeKind s : {SchemeKind::FTCS, SchemeKind::FTCSUP, SchemeKind::FTUPCS})
    add(std::string("fig5_burgers_step_") + to_string(s), burgers, IcKind::BurgersStep, s, 80,
        0.9, StepCount{6});

  // The last figure is run with both the spike and the step initial data.
  for (SchemeKind s : {SchemeKind::FTCS, SchemeKind::FTCSUP, SchemeKind::FTUPCS}) {
    add(std::string("fig6_burgers_spike_") + to_string(s), burgers, IcKind::Spike, s, 40, 0.8,
        StepCount{3});
    add(std::string("fig6_burgers_step_") + to_string(s), burgers, IcKind::BurgersStep, s, 40,
        0.8, StepCount{3});
  }
  return runs;
}

}  // namespace ftcslab
