#include "cli_app.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "perpsim/rng.hpp"
#include "perpsim/sampler.hpp"
#include "perpsim/stats.hpp"
#include "perpsim/validation.hpp"

namespace perpsim::cli {

namespace {

// Runs `body` against the stream named by config.out: the provided stream
// for "-", otherwise a freshly opened file. Returns 0, or 3 on any I/O
// failure.
template <typename Body>
int with_output(const CliConfig& config, std::ostream& out, std::ostream& err,
                Body body) {
  if (config.out == "-") {
    body(out);
    out.flush();
    if (!out) {
      err << "error: write to standard output failed\n";
      return 3;
    }
    return 0;
  }
  std::ofstream file(config.out);
  if (!file) {
    err << "error: cannot open '" << config.out << "' for writing\n";
    return 3;
  }
  body(file);
  file.flush();
  if (!file) {
    err << "error: write to '" << config.out << "' failed\n";
    return 3;
  }
  return 0;
}

}  // namespace

int cmd_sample(const CliConfig& config, std::ostream& out, std::ostream& err) {
  RngStream rng(config.seed);
  std::vector<double> samples;
  try {
    samples = sample_many(rng, config.n);
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return with_output(config, out, err, [&samples](std::ostream& sink) {
    char line[64];
    for (double v : samples) {
      std::snprintf(line, sizeof(line), "%.16e\n", v);
      sink << line;
    }
  });
}

int cmd_hist(const CliConfig& config, std::ostream& out, std::ostream& err) {
  RngStream rng(config.seed);
  Histogram hist;
  try {
    const std::vector<double> samples = sample_many(rng, config.n);
    hist = build_histogram(samples,
                           HistogramSpec{config.bins, 0.0, 1.0});
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return with_output(config, out, err, [&hist](std::ostream& sink) {
    write_histogram_csv(sink, hist);
  });
}

int cmd_validate(const CliConfig& config, std::ostream& out,
                 std::ostream& err) {
  ValidationReport report;
  try {
    report = run_validation_suite(config.seed, config.n);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  const int io_rc = with_output(config, out, err,
                                [&report](std::ostream& sink) {
                                  write_report_text(sink, report);
                                });
  if (io_rc != 0) return io_rc;
  if (!config.csv.empty()) {
    std::ofstream file(config.csv);
    if (!file) {
      err << "error: cannot open '" << config.csv << "' for writing\n";
      return 3;
    }
    write_report_csv(file, report);
    file.flush();
    if (!file) {
      err << "error: write to '" << config.csv << "' failed\n";
      return 3;
    }
  }
  return report.all_passed() ? 0 : 1;
}

int cmd_bench(const CliConfig& config, std::ostream& out, std::ostream& err) {
  RngStream rng(config.seed);
  const auto start = std::chrono::steady_clock::now();
  for (std::uint64_t i = 0; i < config.n; ++i) sample_one(rng);
  const auto stop = std::chrono::steady_clock::now();
  const double seconds = std::chrono::duration<double>(stop - start).count();

  // sample_one consumes one geometric uniform, one coupling uniform, and N
  // update uniforms, so the mean backoff is (draws - 2n)/n. The reported
  // uniforms-per-sample figure excludes the geometric draw.
  const double dn = static_cast<double>(config.n);
  const double mean_backoff =
      (static_cast<double>(rng.draw_count()) - 2.0 * dn) / dn;

  return with_output(config, out, err, [&](std::ostream& sink) {
    char line[96];
    std::snprintf(line, sizeof(line), "samples: %llu\n",
                  static_cast<unsigned long long>(config.n));
    sink << line;
    std::snprintf(line, sizeof(line), "seed: %llu\n",
                  static_cast<unsigned long long>(config.seed));
    sink << line;
    std::snprintf(line, sizeof(line), "wall_seconds: %.6f\n", seconds);
    sink << line;
    std::snprintf(line, sizeof(line), "samples_per_second: %.6e\n",
                  dn / seconds);
    sink << line;
    std::snprintf(line, sizeof(line), "mean_backoff: %.6f\n", mean_backoff);
    sink << line;
    std::snprintf(line, sizeof(line), "mean_uniforms_per_sample: %.6f\n",
                  mean_backoff + 1.0);
    sink << line;
  });
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Exact sampler for the stationary law of X <- U*X + U*(1-U), "
      "via coupling from the past"};
  app.require_subcommand(1);

  CliConfig config;

  auto add_common = [&config](CLI::App* cmd, bool n_required) {
    auto* n_opt = cmd->add_option("--n", config.n, "number of samples")
                      ->check(CLI::PositiveNumber);
    if (n_required) n_opt->required();
    cmd->add_option("--seed", config.seed, "stream seed (default 1)");
    cmd->add_option("--out", config.out,
                    "output path, or - for standard output (default -)");
  };

  CLI::App* sample = app.add_subcommand("sample", "write samples one per line");
  add_common(sample, true);

  CLI::App* hist =
      app.add_subcommand("hist", "write an area-normalized histogram CSV");
  add_common(hist, true);
  hist->add_option("--bins", config.bins, "histogram bins (default 200)")
      ->check(CLI::PositiveNumber);

  CLI::App* validate =
      app.add_subcommand("validate", "run the validation suite");
  add_common(validate, false);
  validate->add_option("--csv", config.csv,
                       "also write the report as CSV to this path");

  CLI::App* bench =
      app.add_subcommand("bench", "time sampling and report throughput");
  add_common(bench, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (sample->parsed()) {
    config.command = Command::sample;
    return cmd_sample(config, out, err);
  }
  if (hist->parsed()) {
    config.command = Command::hist;
    return cmd_hist(config, out, err);
  }
  if (validate->parsed()) {
    config.command = Command::validate;
    if (validate->count("--n") == 0) config.n = 1000000;
    return cmd_validate(config, out, err);
  }
  config.command = Command::bench;
  return cmd_bench(config, out, err);
}

}  // namespace perpsim::cli
