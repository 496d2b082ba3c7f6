#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace itc::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInputError = 2,
  kMismatch = 3,
  kTimeout = 4,
};

/// One enumeration run; time_per_clique_s = wall_time_s / max(num_cliques, 1).
struct RunReport {
  std::string dataset;
  std::string kind;
  std::string c;
  long long delta_base = 0;
  std::size_t delta_layers = 0;
  std::size_t num_cliques = 0;
  double wall_time_s = 0.0;
  double time_per_clique_s = 0.0;
  std::string status = "ok";
};

std::string report_csv_header();
std::string report_csv_row(const RunReport& report);

/// Runs the `itc` command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace itc::cli
