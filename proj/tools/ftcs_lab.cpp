// ftcs_lab: runs FTCS / upwind / hybrid experiments on 1D scalar conservation
// laws and writes solution CSVs with JSON manifests.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ftcslab/experiment.hpp"

using namespace ftcslab;

namespace {

constexpr int kExitBlowup = 3;

struct RunFlags {
  std::string problem;
  double a = 1.0;
  std::string ic;
  std::string scheme = "ftcs";
  std::optional<std::size_t> n;
  double cfl = 0.5;
  std::optional<double> tfinal;
  std::optional<std::size_t> steps;
  std::string bc;
  std::optional<double> xmin, xmax;
  std::string out;
  std::string from_manifest;
};

RunConfig config_from_flags(const RunFlags& f) {
  if (!f.from_manifest.empty()) {
    std::ifstream in(f.from_manifest);
    if (!in) throw ConfigError("cannot read manifest '" + f.from_manifest + "'");
    nlohmann::json m;
    try {
      m = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("manifest is not valid JSON: ") + e.what());
    }
    RunConfig c = config_from_json(m.contains("config") ? m.at("config") : m);
    if (!f.out.empty()) c.output_path = f.out;
    return c;
  }

  RunConfig c;
  if (f.problem == "linear") {
    c.problem = ProblemKind::LinearAdvection;
  } else if (f.problem == "burgers") {
    c.problem = ProblemKind::Burgers;
  } else {
    throw ConfigError("--problem must be linear or burgers");
  }
  const bool linear = c.problem == ProblemKind::LinearAdvection;
  c.a = f.a;
  c.ic = ic_from_string(f.ic.empty() ? (linear ? "sine" : "step") : f.ic);
  c.domain = default_domain(c.ic);
  if (f.xmin) c.domain.lo = *f.xmin;
  if (f.xmax) c.domain.hi = *f.xmax;
  c.scheme = scheme_from_string(f.scheme);
  c.n = f.n.value_or(c.ic == IcKind::Bump ? 120 : 80);
  c.cfl = f.cfl;
  if (f.tfinal.has_value() == f.steps.has_value())
    throw ConfigError("exactly one of --tfinal / --steps is required");
  c.stop = f.tfinal ? StopRule{FinalTime{*f.tfinal}} : StopRule{StepCount{*f.steps}};
  c.boundary = f.bc.empty() ? (linear ? BoundaryRule::Periodic : BoundaryRule::Outflow)
                            : boundary_from_string(f.bc);
  c.output_path = f.out;
  return c;
}

int report(const RunConfig& c, const ExperimentResult& r) {
  std::cout << c.output_path << ": " << r.steps << " steps, t = " << r.final_field.time
            << ", overshoot = " << r.oscillation.overshoot
            << ", undershoot = " << r.oscillation.undershoot
            << ", new extrema = " << r.oscillation.new_extrema;
  if (r.errors) std::cout << ", L1 = " << r.errors->l1 << ", Linf = " << r.errors->linf;
  std::cout << '\n';
  if (r.status == RunStatus::Blowup) {
    std::cerr << "warning: run diverged at step " << *r.blowup_step
              << "; output holds the last accepted step\n";
    return kExitBlowup;
  }
  return EXIT_SUCCESS;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"FTCS stability laboratory for 1D scalar conservation laws"};
  app.require_subcommand(0, 1);

  RunFlags f;
  app.add_option("--problem", f.problem, "Conservation law")->check(CLI::IsMember({"linear", "burgers"}));
  app.add_option("--a", f.a, "Advection speed (linear problem)");
  app.add_option("--ic", f.ic, "Initial condition")
      ->check(CLI::IsMember({"sine", "square", "bump", "step", "spike"}));
  app.add_option("--scheme", f.scheme, "Stepper")
      ->check(CLI::IsMember({"ftcs", "upwind", "ftcsup", "ftupcs"}));
  app.add_option("--n", f.n, "Grid nodes (default 80; 120 for bump)");
  app.add_option("--cfl", f.cfl, "CFL number in (0,1]");
  auto* tfinal = app.add_option("--tfinal", f.tfinal, "Final time");
  app.add_option("--steps", f.steps, "Fixed number of time steps")->excludes(tfinal);
  app.add_option("--bc", f.bc, "Boundary rule (default periodic for linear, outflow for burgers)")
      ->check(CLI::IsMember({"periodic", "outflow"}));
  app.add_option("--xmin", f.xmin, "Override domain left end");
  app.add_option("--xmax", f.xmax, "Override domain right end");
  app.add_option("--out", f.out, "Solution CSV path; manifest goes to <out>.manifest.json");
  app.add_option("--from-manifest", f.from_manifest, "Re-run the configuration stored in a manifest");

  double cmin = 0.01, cmax = 1.0;
  std::size_t samples = 100;
  std::string region_out;
  auto* region = app.add_subcommand("region", "Write the linear stable-set boundary as CSV");
  region->add_option("--cmin", cmin, "Smallest CFL number");
  region->add_option("--cmax", cmax, "Largest CFL number");
  region->add_option("--samples", samples, "Number of CFL samples");
  region->add_option("--out", region_out, "Output CSV path")->required();

  std::string outdir = "figures";
  auto* reproduce = app.add_subcommand("reproduce", "Run every figure configuration");
  reproduce->add_option("--outdir", outdir, "Output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*region) {
      emit_region(cmin, cmax, samples, region_out);
      std::cout << "wrote " << region_out << '\n';
      return EXIT_SUCCESS;
    }
    if (*reproduce) {
      emit_region(0.01, 1.0, 100, std::filesystem::path(outdir) / "fig1_region.csv");
      for (const auto& run : figure_runs(outdir)) report(run.config, run_experiment(run.config));
      return EXIT_SUCCESS;
    }
    if (f.problem.empty() && f.from_manifest.empty()) {
      std::cerr << app.help();
      return EXIT_FAILURE;
    }
    const RunConfig config = config_from_flags(f);
    return report(config, run_experiment(config));
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return EXIT_FAILURE;
  }
}
