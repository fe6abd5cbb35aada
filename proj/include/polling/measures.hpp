#ifndef POLLING_MEASURES_HPP
#define POLLING_MEASURES_HPP

#include <optional>

#include "polling/solver.hpp"
#include "polling/state_space.hpp"

namespace polling {

/// Steady-state measures of one product, derived from a solved subsystem
/// (or from the full-chain oracle). Waiting times are the ratio L/TH of
/// effective throughput; they are undefined (empty) when the throughput is
/// zero, never infinite.
struct PerformanceReport {
  int product = 1;
  double th1 = 0.0;    ///< effective throughput at station 1 [parts/time]
  double th2 = 0.0;    ///< effective throughput at station 2
  double len1 = 0.0;   ///< mean queue length at station 1 (incl. in service)
  double len2 = 0.0;   ///< mean queue length at station 2
  std::optional<double> w1;       ///< mean time in station 1, len1/th1
  std::optional<double> w2;       ///< mean time in station 2, len2/th2
  std::optional<double> w_total;  ///< w1 + w2
  double loss1 = 0.0;  ///< loss rate at station-1 arrival [parts/time]
  double loss2 = 0.0;  ///< loss rate at station-2 entry
  double wip = 0.0;    ///< len1 + len2 (this product's work in process)
};

/// Both products' reports plus the network-wide work in process.
struct NetworkReport {
  PerformanceReport product1;
  PerformanceReport product2;
  double wip_total = 0.0;  ///< sum of all four mean queue lengths

  const PerformanceReport& product(int i) const { return i == 1 ? product1 : product2; }
};

/// (th_i1, th_i2): mu_i1 * P(phase = U_i) and mu_i2 * P(gate phase, li2 >= 1),
/// where the gate is U_i under SP and U_i' under OP.
std::pair<double, double> throughput(const StationaryDistribution& dist,
                                     const NetworkParams& params,
                                     Strategy strategy, int product);

/// (L_i1, L_i2): expectations of l_i1 and l_i2.
std::pair<double, double> queue_lengths(const StationaryDistribution& dist,
                                        const NetworkParams& params, int product);

/// loss_i1 = lambda_i * P(l_i1 = n_i); loss_i2 = mu_i1 * P(U_i, l_i2 = n_i).
std::pair<double, double> loss_rates(const StationaryDistribution& dist,
                                     const NetworkParams& params, int product);

/// L / TH, or empty when TH = 0.
std::optional<double> waiting_time(double queue_length, double throughput);

/// Fills the waiting-time fields of a report from its lengths/throughputs.
void derive_waiting_times(PerformanceReport& report);

/// All measures of the tracked product from a solved SS(product) distribution.
PerformanceReport subsystem_report(const StationaryDistribution& dist,
                                   const NetworkParams& params,
                                   Strategy strategy, int product);

/// Same measures computed from a solved full-chain distribution (oracle path).
PerformanceReport full_chain_report(const StationaryDistribution& dist,
                                    const NetworkParams& params,
                                    Strategy strategy, int product);

/// Marginal of a full-chain distribution onto the SS(product) state space.
std::vector<double> marginalize_full(const StationaryDistribution& dist,
                                     const NetworkParams& params, int product);

/// Solve SS(product) and derive its report.
PerformanceReport analyze_subsystem(const NetworkParams& params, Strategy strategy,
                                    int product, const SolveOptions& options = {});

/// Solve both subsystems and combine.
NetworkReport analyze_network(const NetworkParams& params, Strategy strategy,
                              const SolveOptions& options = {});

}  // namespace polling

#endif
