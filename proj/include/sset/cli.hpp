#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sset/homotopy.hpp"

namespace sset::cli {

struct Config {
  int degreeCap = 4;
  int towerBound = 4;
  std::uint64_t searchBudget = 10'000'000;
  Flavor flavor = Flavor::KQ;
  std::string outputFormat = "json";  // json | text

  /// First violated invariant, if any.
  std::optional<std::string> validate() const;
};

/// Config from a JSON file; missing fields keep their defaults.
Config loadConfig(const std::string& path);

enum ExitCode { kAnswered = 0, kUsage = 1, kUnknown = 2 };

/// Runs one invocation. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sset::cli
