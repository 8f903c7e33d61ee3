#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "sechmoments/verification.hpp"

using namespace sechmoments::cli;

namespace {

bool parse_range(const std::string& text, unsigned& lo, unsigned& hi) {
  auto pos = text.find("..");
  if (pos == std::string::npos) return false;
  try {
    std::size_t used = 0;
    unsigned long a = std::stoul(text.substr(0, pos), &used);
    if (used != pos) return false;
    std::string tail = text.substr(pos + 2);
    unsigned long b = std::stoul(tail, &used);
    if (used != tail.size()) return false;
    lo = static_cast<unsigned>(a);
    hi = static_cast<unsigned>(b);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

Format to_format(const std::string& name) {
  return name == "csv" ? Format::csv : Format::json;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified checks of hyperbolic secant moment identities"};
  app.require_subcommand(1);

  // euler
  auto* euler = app.add_subcommand("euler", "Print the exact integer/rational sequences");
  std::size_t n_max = 10;
  std::string euler_format = "json";
  euler->add_option("--n-max", n_max, "Largest index to print (<= 200)");
  euler->add_option("--format", euler_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // verify
  auto* verify = app.add_subcommand("verify", "Run one identity suite");
  std::string suite;
  std::string n_range = "0..10";
  std::string verify_format = "json";
  RunConfig cfg;
  bool timings = false;
  verify->add_option("suite", suite, "beta | zeta-even | zeta-star | eq9 | moments | sum-moments | clt")
      ->required();
  verify->add_option("--precision-bits", cfg.precision_bits, "Working precision (>= 64)")
      ->check(CLI::Range(64u, 65536u));
  auto* bound_opt =
      verify->add_option("--bound", cfg.target_bound, "Absolute error target per row");
  verify->add_option("--seed", cfg.seed, "Sampling seed (clt suite)");
  verify->add_option("--n-range", n_range, "Row indices, e.g. 0..10");
  auto* samples_opt =
      verify->add_option("--samples", cfg.sample_count, "Batches for the clt suite");
  verify->add_option("--format", verify_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  verify->add_flag("--timings", timings, "Per-row wall time on stderr");

  // sample
  auto* sample = app.add_subcommand("sample", "Draw deterministic variates");
  std::size_t sample_count = 10;
  std::uint64_t sample_seed = 0;
  std::uint64_t stream_id = 0;
  std::string sample_format = "csv";
  sample->add_option("--samples", sample_count, "Number of draws");
  sample->add_option("--seed", sample_seed, "Stream seed");
  sample->add_option("--stream-id", stream_id, "Sub-stream id");
  sample->add_option("--format", sample_format, "csv or bin");

  // clt
  auto* clt_cmd = app.add_subcommand("clt", "Distance-to-normal table for n-fold sums");
  std::vector<unsigned> folds = {1, 4, 16, 64};
  std::size_t clt_samples = 100000;
  std::uint64_t clt_seed = 0;
  std::string clt_format = "json";
  bool density_grid = true;
  clt_cmd->add_option("--folds", folds, "Fold counts, comma separated")->delimiter(',');
  clt_cmd->add_option("--samples", clt_samples, "Batches per fold (>= 100)");
  clt_cmd->add_option("--seed", clt_seed, "Sampling seed");
  clt_cmd->add_option("--format", clt_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  clt_cmd->add_flag("--density-grid,!--no-density-grid", density_grid,
                    "Also compute the sup density gap per fold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*euler) return cmd_euler(n_max, to_format(euler_format), std::cout);
    if (*verify) {
      if (!parse_range(n_range, cfg.n_lo, cfg.n_hi)) {
        std::cerr << "verify: --n-range wants A..B, got '" << n_range << "'\n";
        return 2;
      }
      cfg.target_bound_explicit = bound_opt->count() > 0;
      cfg.sample_count_explicit = samples_opt->count() > 0;
      cfg.format = to_format(verify_format);
      return cmd_verify(suite, cfg, std::cout, timings);
    }
    if (*sample) return cmd_sample(sample_count, sample_seed, stream_id, sample_format, std::cout);
    if (*clt_cmd)
      return cmd_clt(folds, clt_samples, clt_seed, to_format(clt_format), density_grid, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
