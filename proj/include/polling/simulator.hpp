#ifndef POLLING_SIMULATOR_HPP
#define POLLING_SIMULATOR_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polling/measures.hpp"
#include "polling/params.hpp"

namespace polling {

struct InvalidConfig : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SimConfig {
  NetworkParams params;
  Strategy strategy = Strategy::SP;
  double horizon = 1e6;     ///< simulated time units per replication
  double warmup = -1.0;     ///< discarded prefix; negative = 10% of horizon
  int replications = 10;
  std::uint64_t seed = 1;   ///< base seed; replication r derives its own stream

  double effective_warmup() const { return warmup < 0.0 ? 0.1 * horizon : warmup; }
  void validate() const;
};

/// Point estimate with a 95% confidence half-width from replication means.
struct Estimate {
  double mean = 0.0;
  double half_width = 0.0;

  bool contains(double x) const {
    return x >= mean - half_width && x <= mean + half_width;
  }
};

/// Estimates are indexed by (product, station) where applicable; waiting
/// times come in two flavors: the L/TH ratio (the analytical definition)
/// and tagged per-customer sojourns.
struct SimEstimate {
  Estimate th11, th21, th12, th22;
  Estimate len11, len21, len12, len22;
  Estimate w11, w21, w12, w22;  ///< ratio-based, per station
  Estimate w1, w2;              ///< ratio-based totals per product
  Estimate sojourn1, sojourn2;  ///< tagged per-customer totals per product
  Estimate loss11, loss21, loss12, loss22;
};

/// Exact per-replication event counts over the whole run (no warmup window),
/// used for conservation checks: for each product,
///   arrivals = accepted + lost_at_1,
///   accepted = station1_departures + left_at_station1,
///   station1_departures = lost_at_2 + station2_departures + left_at_station2.
struct ReplicationCounts {
  std::array<std::int64_t, 2> arrivals{};
  std::array<std::int64_t, 2> lost_at_1{};
  std::array<std::int64_t, 2> station1_departures{};
  std::array<std::int64_t, 2> lost_at_2{};
  std::array<std::int64_t, 2> station2_departures{};
  std::array<int, 2> left_at_station1{};
  std::array<int, 2> left_at_station2{};
};

/// Windowed (post-warmup) time averages from one replication.
struct ReplicationStats {
  double th11 = 0, th21 = 0, th12 = 0, th22 = 0;
  double len11 = 0, len21 = 0, len12 = 0, len22 = 0;
  double loss11 = 0, loss21 = 0, loss12 = 0, loss22 = 0;
  double sojourn1 = 0, sojourn2 = 0;  ///< mean tagged sojourn per product
  ReplicationCounts counts;
};

/// Observer invoked after every executed event with the clock and the state
/// (queue lengths and phase); used by tests to audit sample paths.
using TraceHook =
    std::function<void(double t, Phase phase, int l11, int l21, int l12, int l22)>;

/// One replication with the stream derived from (config.seed, rep_index).
ReplicationStats run_replication(const SimConfig& config, int rep_index,
                                 const TraceHook& trace = nullptr);

/// Independent replications aggregated into Student-t confidence intervals.
SimEstimate run_simulation(const SimConfig& config);

/// One row of an analysis-vs-simulation comparison.
struct ValidationRow {
  std::string measure;
  double analytical = 0.0;
  Estimate simulated;
  bool inside_ci = false;
};

struct ValidationResult {
  std::vector<ValidationRow> rows;
  double worst_abs_deviation = 0.0;
  int outside_count = 0;
};

/// Compares a solved report for one product against simulation CIs.
ValidationResult validate_against_analysis(const SimEstimate& sim,
                                           const PerformanceReport& report);

/// Convenience overload that runs the simulation described by config first.
ValidationResult validate_against_analysis(const SimConfig& config,
                                           const PerformanceReport& report);

}  // namespace polling

#endif
