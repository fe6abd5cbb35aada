#ifndef POLLING_CONFIG_HPP
#define POLLING_CONFIG_HPP

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polling/params.hpp"

namespace polling {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class RunMode { Solve, Simulate, Both };

/// An experiment description parsed from a flat key = value file. Keys are
/// the NetworkParams field names plus `strategy` (sp|op|both), `n_list`
/// (comma-separated buffer sizes, entry "a:b" for asymmetric caps), and
/// `mode` (solve|simulate|both). `#` starts a comment. The output path is
/// supplied by the caller (CLI --out), not by the file.
struct ExperimentConfig {
  NetworkParams params;
  std::optional<Strategy> strategy;  ///< empty = run both strategies
  std::vector<std::pair<int, int>> buffer_sweep;  ///< empty = params.n1/n2 only
  RunMode mode = RunMode::Solve;
  std::string out_path;

  std::vector<std::pair<int, int>> effective_sweep() const {
    if (!buffer_sweep.empty()) return buffer_sweep;
    return {{params.n1, params.n2}};
  }
  std::vector<Strategy> strategies() const {
    if (strategy) return {*strategy};
    return {Strategy::SP, Strategy::OP};
  }
};

ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_file(const std::string& path);

}  // namespace polling

#endif
