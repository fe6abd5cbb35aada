#include <doctest.h>

#include <cmath>

#include "polling/measures.hpp"
#include "test_support.hpp"

using namespace polling;
using namespace polling::test;

namespace {

StationaryDistribution solve_sub(const NetworkParams& p, Strategy s, int product) {
  return solve_stationary(build_subsystem_generator(p, s, product));
}

}  // namespace

TEST_CASE("benchmark N=3 reproduces the published headline measures") {
  NetworkParams p = benchmark_params(3);
  auto sp = solve_sub(p, Strategy::SP, 1);
  auto [th11, th12] = throughput(sp, p, Strategy::SP, 1);
  CHECK(std::fabs(th11 - 0.94) <= 0.02);
  CHECK(std::fabs(th12 - 0.70) <= 0.02);

  PerformanceReport rep = subsystem_report(sp, p, Strategy::SP, 1);
  REQUIRE(rep.w_total.has_value());
  CHECK(std::fabs(*rep.w_total - 3.85) <= 0.02);

  auto op = solve_sub(p, Strategy::OP, 1);
  auto [oth11, oth12] = throughput(op, p, Strategy::OP, 1);
  CHECK(std::fabs(oth11 - 0.94) <= 0.02);
  CHECK(std::fabs(oth12 - 0.54) <= 0.02);
  PerformanceReport orep = subsystem_report(op, p, Strategy::OP, 1);
  CHECK(std::fabs(*orep.w_total - 4.02) <= 0.02);

  // station-2 entry loss implied by the published throughputs
  CHECK(std::fabs(rep.loss2 - 0.24) <= 0.01);
}

TEST_CASE("flow balance and Little identities hold on random instances") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    NetworkParams p = random_params(rng, 3);
    Strategy s = trial % 2 ? Strategy::SP : Strategy::OP;
    for (int product : {1, 2}) {
      PerformanceReport rep = subsystem_report(solve_sub(p, s, product), p, s, product);
      CHECK(rep.th1 == doctest::Approx(p.lambda(product) - rep.loss1).epsilon(1e-9));
      CHECK(rep.th2 == doctest::Approx(rep.th1 - rep.loss2).epsilon(1e-9));
      CHECK(rep.th2 <= rep.th1 + 1e-12);
      CHECK(rep.th1 <= p.lambda(product) + 1e-12);
      CHECK(*rep.w1 == rep.len1 / rep.th1);
      CHECK(*rep.w2 == rep.len2 / rep.th2);
      CHECK(*rep.w_total == *rep.w1 + *rep.w2);
      CHECK(rep.wip == rep.len1 + rep.len2);
    }
  }
}

TEST_CASE("subsystem measures equal the full-chain oracle measures") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 6; ++trial) {
    NetworkParams p = random_params(rng, 3);
    Strategy s = trial % 2 ? Strategy::SP : Strategy::OP;
    StationaryDistribution full = solve_stationary(build_full_generator(p, s));
    for (int product : {1, 2}) {
      PerformanceReport via_sub =
          subsystem_report(solve_sub(p, s, product), p, s, product);
      PerformanceReport via_full = full_chain_report(full, p, s, product);
      CHECK(std::fabs(via_sub.th1 - via_full.th1) <= 1e-8);
      CHECK(std::fabs(via_sub.th2 - via_full.th2) <= 1e-8);
      CHECK(std::fabs(via_sub.len1 - via_full.len1) <= 1e-8);
      CHECK(std::fabs(via_sub.len2 - via_full.len2) <= 1e-8);
      CHECK(std::fabs(via_sub.loss1 - via_full.loss1) <= 1e-8);
      CHECK(std::fabs(via_sub.loss2 - via_full.loss2) <= 1e-8);
    }
  }
}

TEST_CASE("marginalizing the full chain reproduces the subsystem distribution") {
  std::mt19937_64 rng(4321);
  NetworkParams p = random_params(rng, 2);
  for (Strategy s : {Strategy::SP, Strategy::OP}) {
    StationaryDistribution full = solve_stationary(build_full_generator(p, s));
    for (int product : {1, 2}) {
      std::vector<double> marginal = marginalize_full(full, p, product);
      StationaryDistribution sub = solve_sub(p, s, product);
      REQUIRE(marginal.size() == sub.probabilities.size());
      for (size_t i = 0; i < marginal.size(); ++i)
        CHECK(std::fabs(marginal[i] - sub[i]) <= 1e-10);
    }
  }
}

TEST_CASE("product-symmetric inputs give equal waits and throughputs") {
  NetworkParams p = benchmark_params(3);
  for (Strategy s : {Strategy::SP, Strategy::OP}) {
    NetworkReport net = analyze_network(p, s);
    CHECK(std::fabs(net.product1.th1 - net.product2.th1) <= 1e-9);
    CHECK(std::fabs(*net.product1.w_total - *net.product2.w_total) <= 1e-9);
  }
}

TEST_CASE("station-1 waits are identical for two identical products") {
  // Station asymmetry only: both products share every rate, so per-station
  // waits must match across products.
  NetworkParams p = symmetric_params(1, 2.5, 5, 3);
  p.mu12 = p.mu22 = 4.0;
  NetworkReport net = analyze_network(p, Strategy::OP);
  CHECK(std::fabs(*net.product1.w1 - *net.product2.w1) <= 1e-9);
  CHECK(std::fabs(*net.product1.w2 - *net.product2.w2) <= 1e-9);
}

TEST_CASE("station-1 dynamics do not depend on the strategy") {
  // With station 2 effectively infinitely fast this is the cleanest
  // comparison; the equality holds in general.
  NetworkParams p = benchmark_params(3);
  p.mu12 = p.mu22 = 1e6;
  PerformanceReport sp = analyze_subsystem(p, Strategy::SP, 1);
  PerformanceReport op = analyze_subsystem(p, Strategy::OP, 1);
  CHECK(std::fabs(*sp.w1 - *op.w1) <= 1e-6);
  CHECK(std::fabs(sp.th1 - op.th1) <= 1e-9);
}

TEST_CASE("an idle network carries no load") {
  NetworkParams p = benchmark_params(2);
  p.lambda1 = p.lambda2 = 0.0;
  NetworkReport net = analyze_network(p, Strategy::SP);
  CHECK(net.product1.th1 == 0.0);
  CHECK(net.product1.len1 == 0.0);
  CHECK(net.product1.len2 == 0.0);
  CHECK(net.wip_total == 0.0);
  CHECK(!net.product1.w1.has_value());  // undefined, not infinite
  CHECK(!net.product1.w_total.has_value());

  // near-idle limit: queues vanish smoothly
  p.lambda1 = p.lambda2 = 1e-8;
  NetworkReport tiny = analyze_network(p, Strategy::SP);
  CHECK(tiny.product1.len1 <= 1e-6);
  CHECK(tiny.product1.len2 <= 1e-6);
}

TEST_CASE("waiting time helper reports undefined on zero throughput") {
  CHECK(!waiting_time(0.0, 0.0).has_value());
  CHECK(*waiting_time(2.0, 0.5) == doctest::Approx(4.0));
}

TEST_CASE("mismatched distributions are rejected") {
  NetworkParams p = benchmark_params(2);
  StationaryDistribution dist = solve_sub(p, Strategy::SP, 1);
  NetworkParams other = benchmark_params(3);
  CHECK_THROWS_AS(throughput(dist, other, Strategy::SP, 1), std::invalid_argument);
  CHECK_THROWS_AS(queue_lengths(dist, other, 1), std::invalid_argument);
}
