#pragma once

#include <tubal/completion.hpp>
#include <tubal/sketch.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace tubal::cli {

enum ExitCode : int {
  kOk = 0,
  kConfigError = 2,
  kIoError = 3,
  kNumericalError = 4,
};

struct CliConfig {
  std::string subcommand;
  std::filesystem::path input;
  std::filesystem::path output;
  std::filesystem::path observed_output;
  std::filesystem::path report;
  std::filesystem::path csv;
  std::filesystem::path mask_file;

  Index rank = 25;
  Index oversample = 5;
  Index power = 2;
  std::uint64_t seed = 0;
  Index iterations = 100;
  std::string algorithm = "krylov";
  std::string basis = "full";

  double mask_ratio = 0.0;
  std::string mask_pattern = "random";
  std::string init = "zero";

  // bench only
  int spectrum_case = 1;
  std::vector<Index> sizes{100};
  std::vector<Index> ranks;
  std::vector<Index> powers;
  Index seeds = 1;
};

// Each command validates its configuration, writes its outputs and returns
// an exit code; errors are reported on `err`.
int cmd_compress(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_complete(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bench(const CliConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv and dispatches.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tubal::cli
