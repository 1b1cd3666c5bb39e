#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ftcslab/core.hpp"
#include "ftcslab/diagnostics.hpp"
#include "ftcslab/problems.hpp"
#include "ftcslab/schemes.hpp"

#include <json.hpp>

namespace ftcslab {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  ProblemKind problem = ProblemKind::LinearAdvection;
  double a = 1.0;  // linear advection only
  IcKind ic = IcKind::Sine;
  Interval domain = default_domain(IcKind::Sine);
  SchemeKind scheme = SchemeKind::FTCS;
  std::size_t n = 80;
  double cfl = 0.5;
  StopRule stop = FinalTime{0.0};
  BoundaryRule boundary = BoundaryRule::Periodic;
  std::string output_path;
};

/// Throws ConfigError describing the first invalid field.
void validate(const RunConfig& config);

ProblemSpec make_problem(const RunConfig& config);
/// Periodic runs sample [lo, hi) with n distinct nodes; outflow runs sample [lo, hi].
Grid1D make_grid(const RunConfig& config);

enum class RunStatus { Completed, Blowup };

struct CellCounts {
  std::size_t ftcs;
  std::size_t upwind;
  double dt;
};

struct ExperimentResult {
  RunStatus status = RunStatus::Completed;
  SolutionField initial;
  SolutionField final_field;
  std::size_t steps = 0;
  std::optional<std::size_t> blowup_step;
  OscillationReport oscillation;
  double initial_min = 0.0;
  double initial_max = 0.0;
  std::optional<SolutionField> exact;
  std::optional<ErrorNorms> errors;
  std::vector<CellCounts> counts;
};

/// Runs the configured experiment in memory; a blowup is reported, not thrown.
ExperimentResult simulate(const RunConfig& config);

/// `x,u_numeric[,u_exact]`, one row per node, 17 significant digits.
std::string solution_csv(const ExperimentResult& result);
nlohmann::json config_to_json(const RunConfig& config);
RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json manifest_json(const RunConfig& config, const ExperimentResult& result);

std::filesystem::path manifest_path(const std::filesystem::path& csv_path);

/// Validates, simulates, then writes the CSV and its manifest. Nothing is
/// written if validation fails.
ExperimentResult run_experiment(const RunConfig& config);

/// CSV `C,lower_cut,right_cut` sampling the linear stable set at evenly
/// spaced CFL numbers in [c_min, c_max].
std::string region_csv(double c_min, double c_max, std::size_t samples);
void emit_region(double c_min, double c_max, std::size_t samples,
                 const std::filesystem::path& output_path);

struct FigureRun {
  std::string name;
  RunConfig config;
};

/// Parameter sets behind every solution figure, outputs rooted at `outdir`.
std::vector<FigureRun> figure_runs(const std::filesystem::path& outdir);

}  // namespace ftcslab
