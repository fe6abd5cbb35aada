#include <doctest.h>

#include "polling/balance.hpp"
#include "polling/generator.hpp"
#include "test_support.hpp"

using namespace polling;
using namespace polling::test;

TEST_CASE("solved distributions satisfy the balance equations") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 8; ++trial) {
    NetworkParams p = random_params(rng, 3);
    for (Strategy s : {Strategy::SP, Strategy::OP}) {
      for (int product : {1, 2}) {
        CAPTURE(trial);
        CAPTURE(product);
        StationaryDistribution dist =
            solve_stationary(build_subsystem_generator(p, s, product));
        CHECK(residual_against_balance_equations(p, s, product, dist) <= 1e-10);
      }
    }
  }
}

TEST_CASE("benchmark instances satisfy both equation families") {
  for (int n : {3, 6}) {
    NetworkParams p = benchmark_params(n);
    for (Strategy s : {Strategy::SP, Strategy::OP}) {
      StationaryDistribution dist = solve_stationary(build_subsystem_generator(p, s, 1));
      CHECK(residual_against_balance_equations(p, s, 1, dist) <= 1e-10);
    }
  }
}

TEST_CASE("a perturbed distribution violates the equations") {
  NetworkParams p = benchmark_params(2);
  StationaryDistribution dist = solve_stationary(build_subsystem_generator(p, Strategy::SP, 1));
  dist.probabilities[5] += 0.01;
  CHECK(residual_against_balance_equations(p, Strategy::SP, 1, dist) > 1e-4);
}

TEST_CASE("the checker distinguishes the two strategies") {
  // A distribution stationary for SP is not stationary for the OP equations:
  // catching a strategy mix-up is the point of the cross-check.
  NetworkParams p = benchmark_params(2);
  StationaryDistribution sp = solve_stationary(build_subsystem_generator(p, Strategy::SP, 1));
  CHECK(residual_against_balance_equations(p, Strategy::SP, 1, sp) <= 1e-10);
  CHECK(residual_against_balance_equations(p, Strategy::OP, 1, sp) > 1e-4);
}

TEST_CASE("dimension mismatches are rejected") {
  NetworkParams p = benchmark_params(2);
  StationaryDistribution dist = solve_stationary(build_subsystem_generator(p, Strategy::SP, 1));
  NetworkParams bigger = benchmark_params(3);
  CHECK_THROWS_AS(residual_against_balance_equations(bigger, Strategy::SP, 1, dist),
                  std::invalid_argument);
}
