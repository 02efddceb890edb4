#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace strongconv::cli {

struct RunConfig {
  std::uint64_t seed = 1;
  std::uint64_t transversal_cap = 1'000'000;
  std::uint64_t subset_cap = 1'000'000;
  std::size_t raster_resolution = 200;
  int ball_sides = 64;
  unsigned jobs = 1;
  std::string out;  // report path; standard output when empty
  std::string svg;  // figure path, for the commands that draw
};

/// Applies `key = value` lines (blank lines and '#' comments skipped). Keys
/// are the field names of RunConfig; anything else is an InputError.
void apply_config_text(RunConfig& cfg, const std::string& text, const std::string& source);

void validate(const RunConfig& cfg);

/// FNV-1a, 64 bit, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

/// Exit codes: 0 success, 1 input or precondition error, 2 when a checked
/// theorem's hypothesis holds and its conclusion fails.
int run_command(int argc, char** argv);
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace strongconv::cli
