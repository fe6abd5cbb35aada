#include "polling/measures.hpp"

#include <stdexcept>
#include <tuple>

namespace polling {

namespace {

void require_dimension(const StationaryDistribution& dist, int expected) {
  if (dist.size() != expected)
    throw std::invalid_argument("distribution dimension does not match state space");
}

Phase gate_phase(Strategy strategy, int product) {
  return serving_phase(strategy == Strategy::SP ? product : 3 - product);
}

}  // namespace

std::pair<double, double> throughput(const StationaryDistribution& dist,
                                     const NetworkParams& params,
                                     Strategy strategy, int product) {
  require_product(product);
  SubsystemSpace space(params, product);
  require_dimension(dist, space.size());
  const Phase busy = serving_phase(product);
  const Phase gate = gate_phase(strategy, product);
  double p_busy = 0.0, p_gate_backlog = 0.0;
  for (int i = 0; i < space.size(); ++i) {
    const SubsystemState& s = space.state(i);
    if (s.phase == busy) p_busy += dist[i];
    if (s.phase == gate && s.li2 >= 1) p_gate_backlog += dist[i];
  }
  return {params.service1(product) * p_busy, params.service2(product) * p_gate_backlog};
}

std::pair<double, double> queue_lengths(const StationaryDistribution& dist,
                                        const NetworkParams& params, int product) {
  require_product(product);
  SubsystemSpace space(params, product);
  require_dimension(dist, space.size());
  double len1 = 0.0, len2 = 0.0;
  for (int i = 0; i < space.size(); ++i) {
    const SubsystemState& s = space.state(i);
    len1 += dist[i] * (product == 1 ? s.l11 : s.l21);
    len2 += dist[i] * s.li2;
  }
  return {len1, len2};
}

std::pair<double, double> loss_rates(const StationaryDistribution& dist,
                                     const NetworkParams& params, int product) {
  require_product(product);
  SubsystemSpace space(params, product);
  require_dimension(dist, space.size());
  const int cap = params.cap(product);
  const Phase busy = serving_phase(product);
  double p_full1 = 0.0, p_busy_full2 = 0.0;
  for (int i = 0; i < space.size(); ++i) {
    const SubsystemState& s = space.state(i);
    int l_i1 = product == 1 ? s.l11 : s.l21;
    if (l_i1 == cap) p_full1 += dist[i];
    if (s.phase == busy && s.li2 == cap) p_busy_full2 += dist[i];
  }
  return {params.lambda(product) * p_full1, params.service1(product) * p_busy_full2};
}

std::optional<double> waiting_time(double queue_length, double throughput) {
  if (throughput <= 0.0) return std::nullopt;
  return queue_length / throughput;
}

void derive_waiting_times(PerformanceReport& report) {
  report.w1 = waiting_time(report.len1, report.th1);
  report.w2 = waiting_time(report.len2, report.th2);
  if (report.w1 && report.w2)
    report.w_total = *report.w1 + *report.w2;
  else
    report.w_total.reset();
}

PerformanceReport subsystem_report(const StationaryDistribution& dist,
                                   const NetworkParams& params,
                                   Strategy strategy, int product) {
  PerformanceReport rep;
  rep.product = product;
  std::tie(rep.th1, rep.th2) = throughput(dist, params, strategy, product);
  std::tie(rep.len1, rep.len2) = queue_lengths(dist, params, product);
  std::tie(rep.loss1, rep.loss2) = loss_rates(dist, params, product);
  rep.wip = rep.len1 + rep.len2;
  derive_waiting_times(rep);
  return rep;
}

std::vector<double> marginalize_full(const StationaryDistribution& dist,
                                     const NetworkParams& params, int product) {
  require_product(product);
  FullSpace full(params);
  require_dimension(dist, full.size());
  SubsystemSpace sub(params, product);
  std::vector<double> marginal(sub.size(), 0.0);
  for (int i = 0; i < full.size(); ++i)
    marginal[sub.index(full.project(full.state(i), product))] += dist[i];
  return marginal;
}

PerformanceReport full_chain_report(const StationaryDistribution& dist,
                                    const NetworkParams& params,
                                    Strategy strategy, int product) {
  require_product(product);
  FullSpace space(params);
  require_dimension(dist, space.size());
  const int cap = params.cap(product);
  const Phase busy = serving_phase(product);
  const Phase gate = gate_phase(strategy, product);

  PerformanceReport rep;
  rep.product = product;
  double p_busy = 0.0, p_gate_backlog = 0.0, p_full1 = 0.0, p_busy_full2 = 0.0;
  for (int i = 0; i < space.size(); ++i) {
    const FullState& s = space.state(i);
    int l_i1 = product == 1 ? s.l11 : s.l21;
    int l_i2 = product == 1 ? s.l12 : s.l22;
    if (s.phase == busy) p_busy += dist[i];
    if (s.phase == gate && l_i2 >= 1) p_gate_backlog += dist[i];
    if (l_i1 == cap) p_full1 += dist[i];
    if (s.phase == busy && l_i2 == cap) p_busy_full2 += dist[i];
    rep.len1 += dist[i] * l_i1;
    rep.len2 += dist[i] * l_i2;
  }
  rep.th1 = params.service1(product) * p_busy;
  rep.th2 = params.service2(product) * p_gate_backlog;
  rep.loss1 = params.lambda(product) * p_full1;
  rep.loss2 = params.service1(product) * p_busy_full2;
  rep.wip = rep.len1 + rep.len2;
  derive_waiting_times(rep);
  return rep;
}

PerformanceReport analyze_subsystem(const NetworkParams& params, Strategy strategy,
                                    int product, const SolveOptions& options) {
  GeneratorMatrix q = build_subsystem_generator(params, strategy, product);
  StationaryDistribution dist = solve_stationary(q, options);
  return subsystem_report(dist, params, strategy, product);
}

NetworkReport analyze_network(const NetworkParams& params, Strategy strategy,
                              const SolveOptions& options) {
  NetworkReport net;
  net.product1 = analyze_subsystem(params, strategy, 1, options);
  net.product2 = analyze_subsystem(params, strategy, 2, options);
  net.wip_total = net.product1.wip + net.product2.wip;
  return net;
}

}  // namespace polling
