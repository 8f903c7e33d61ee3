#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sechmoments/verification_report.hpp"

namespace sechmoments::cli {

enum class Format { json, csv };

struct RunConfig {
  unsigned precision_bits = kDefaultPrecisionBits;
  double target_bound = 1e-30;
  bool target_bound_explicit = false;  // true when --bound was given
  std::uint64_t seed = 0;
  unsigned n_lo = 0;
  unsigned n_hi = 10;
  std::size_t sample_count = 1'000'000;
  bool sample_count_explicit = false;  // true when --samples was given
  Format format = Format::json;
};

// beta | zeta-even | zeta-star | eq9 | moments | sum-moments | clt
std::vector<std::string> suite_names();
bool is_suite(const std::string& name);

// Runs one identity suite; one report per index (trend rows for clt, see
// --help). Throws std::invalid_argument for unknown suites or an empty range.
std::vector<VerificationReport> run_suite(const std::string& suite,
                                          const RunConfig& config);

// Renderers. All numeric payloads are decimal strings so output is
// byte-stable for a given config; wall-clock time is never serialized.
std::string render_reports(const std::string& suite,
                           const std::vector<VerificationReport>& reports,
                           const RunConfig& config);
std::string render_euler_table(std::size_t n_max, Format format);

// Exit codes: 0 all pass, 1 at least one failed check, 2 usage error.
int cmd_euler(std::size_t n_max, Format format, std::ostream& out);
int cmd_verify(const std::string& suite, const RunConfig& config,
               std::ostream& out, bool timings_to_stderr = false);
int cmd_sample(std::size_t count, std::uint64_t seed, std::uint64_t stream_id,
               const std::string& format, std::ostream& out);
int cmd_clt(const std::vector<unsigned>& fold_counts, std::size_t m,
            std::uint64_t seed, Format format, bool density_grid,
            std::ostream& out);

}  // namespace sechmoments::cli
