#include "banditlab/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "banditlab/bounds.hpp"
#include "banditlab/config.hpp"
#include "banditlab/csv.hpp"
#include "banditlab/errors.hpp"
#include "banditlab/prior_fit.hpp"
#include "banditlab/runner.hpp"

namespace banditlab {
namespace {

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

std::filesystem::path resolve_out_dir(const std::string& flag_value,
                                      const CliConfig& config) {
  if (!flag_value.empty()) return flag_value;
  if (config.out_dir.has_value()) return *config.out_dir;
  throw DataError("no output directory: pass --out or set [output] dir");
}

void write_curves(const ExperimentConfig& experiment,
                  const std::vector<AggregateCurve>& curves,
                  const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  const std::vector<std::string> labels = policy_labels(experiment.policies);
  for (std::size_t p = 0; p < curves.size(); ++p) {
    const std::filesystem::path path =
        out_dir / curve_file_name(labels[p], experiment.env.arms());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open output file: " + path.string());
    write_curve_csv(out, curves[p], labels[p], experiment.env.name(),
                    experiment.env.arms(), experiment.horizon,
                    experiment.root_seed);
    if (!out) throw DataError("failed writing output file: " + path.string());
    std::cout << path.string() << '\n';
  }
}

int do_simulate(const std::string& config_path, const std::string& out_flag,
                int workers) {
  const CliConfig config = parse_config(read_text_file(config_path));
  const ExperimentConfig experiment = build_experiment(config);
  const std::vector<AggregateCurve> curves =
      run_experiment(experiment, workers);
  write_curves(experiment, curves, resolve_out_dir(out_flag, config));
  return 0;
}

int do_sweep(const std::string& config_path, const std::string& out_flag,
             const std::vector<int>& arm_counts, int workers) {
  const CliConfig config = parse_config(read_text_file(config_path));
  const std::filesystem::path out_dir = resolve_out_dir(out_flag, config);
  for (int k : arm_counts) {
    if (k < 1) throw DomainError("--k values must be >= 1");
    const ExperimentConfig experiment = build_experiment(config, k);
    const std::vector<AggregateCurve> curves =
        run_experiment(experiment, workers);
    write_curves(experiment, curves, out_dir);
  }
  return 0;
}

int do_bound(const std::string& config_path) {
  const CliConfig config = parse_config(read_text_file(config_path));
  const EnvSpec env = build_env(config.env);
  const double delta =
      config.bound_delta.value_or(1.0 / static_cast<double>(config.horizon));

  std::cout << "arms = " << env.arms() << '\n'
            << "horizon = " << config.horizon << '\n'
            << "delta = " << format_double(delta) << '\n';
  if (const auto* known = std::get_if<GaussianKnownVarEnv>(&env.family())) {
    KnownVarianceBoundInputs inputs;
    inputs.prior_var.reserve(known->prior.size());
    for (const GaussianParams& p : known->prior) {
      inputs.prior_var.push_back(p.variance);
    }
    inputs.reward_var = known->sigma2;
    inputs.horizon = config.horizon;
    inputs.delta = delta;
    std::cout << "theorem = known_variance\n"
              << "bound = " << format_double(bound_known_variance(inputs))
              << '\n';
    return 0;
  }
  if (const auto* ng = std::get_if<GaussianNgEnv>(&env.family())) {
    const UnknownVarianceBoundInputs inputs{ng->prior, config.horizon, delta};
    const UnknownVarianceBound result = bound_unknown_variance(inputs);
    std::cout << "theorem = unknown_variance\n"
              << "c = " << format_double(result.c) << '\n'
              << "bound = " << format_double(result.bound) << '\n';
    return 0;
  }
  throw DomainError("bound requires env kind 'gaussian' or 'gaussian_known'");
}

int do_fit_prior(const std::string& means_path,
                 const std::string& precisions_path, const std::string& mode) {
  const std::vector<double> means = read_sample_file(means_path);
  const std::vector<double> precisions = read_sample_file(precisions_path);
  const MomentSummary summary = summarize(means, precisions);
  const NormalGammaParams params = fit_normal_gamma(
      summary, mode == "paper" ? FitMode::paper : FitMode::exact);
  std::cout << "mu0 = " << format_double(params.mu0) << '\n'
            << "kappa0 = " << format_double(params.kappa0) << '\n'
            << "alpha0 = " << format_double(params.alpha0) << '\n'
            << "beta0 = " << format_double(params.beta0) << '\n';
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Bayesian bandit simulation lab"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_flag;
  std::string means_path;
  std::string precisions_path;
  std::string mode = "exact";
  std::vector<int> arm_counts;
  int workers = 1;

  const auto add_workers = [&](CLI::App* cmd) {
    cmd->add_option("--workers", workers, "parallel episode workers")
        ->envname("BANDIT_LAB_WORKERS")
        ->check(CLI::PositiveNumber);
  };
  const auto add_config = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "experiment config file")
        ->required();
  };

  CLI::App* simulate = app.add_subcommand(
      "simulate", "run the configured experiment and write one CSV per policy");
  add_config(simulate);
  simulate->add_option("--out", out_flag, "output directory");
  add_workers(simulate);

  CLI::App* sweep = app.add_subcommand(
      "sweep-k", "repeat the experiment across arm counts");
  add_config(sweep);
  sweep->add_option("--k", arm_counts, "comma-separated arm counts")
      ->required()
      ->delimiter(',');
  sweep->add_option("--out", out_flag, "output directory");
  add_workers(sweep);

  CLI::App* bound = app.add_subcommand(
      "bound", "print the regret bound for the configured environment");
  add_config(bound);

  CLI::App* fit = app.add_subcommand(
      "fit-prior", "fit Normal-Gamma hyper-parameters from sample files");
  fit->add_option("--means", means_path, "file of mean samples, one per line")
      ->required();
  fit->add_option("--precisions", precisions_path,
                  "file of precision samples, one per line")
      ->required();
  fit->add_option("--mode", mode, "fit mode")
      ->check(CLI::IsMember({"exact", "paper"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (simulate->parsed()) return do_simulate(config_path, out_flag, workers);
    if (sweep->parsed()) {
      return do_sweep(config_path, out_flag, arm_counts, workers);
    }
    if (bound->parsed()) return do_bound(config_path);
    return do_fit_prior(means_path, precisions_path, mode);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace banditlab
