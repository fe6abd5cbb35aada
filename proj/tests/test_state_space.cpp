#include <doctest.h>

#include <algorithm>
#include <set>

#include "polling/state_space.hpp"
#include "test_support.hpp"

using namespace polling;
using namespace polling::test;

TEST_CASE("subsystem enumeration matches the brute-force oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 12; ++trial) {
    NetworkParams p = random_params(rng, 4);
    for (int product : {1, 2}) {
      CAPTURE(trial);
      CAPTURE(product);
      auto oracle = brute_force_subsystem(p, product);
      SubsystemSpace space(p, product);
      REQUIRE(space.size() == static_cast<int>(oracle.size()));
      // The oracle loops are written in the same lexicographic key order, so
      // the sequences must agree element by element.
      for (int k = 0; k < space.size(); ++k) REQUIRE(space.state(k) == oracle[k]);
    }
  }
}

TEST_CASE("state counts at the unit and benchmark buffer sizes") {
  // Frozen from the brute-force oracle: per (l11, l21, li2) tuple there are
  // 2 + [l11>=1] + [l21>=1] feasible phases.
  NetworkParams p1 = benchmark_params(1);
  CHECK(subsystem_state_count(p1, 1) == 24);
  CHECK(full_state_count(p1) == 48);
  CHECK(brute_force_subsystem(p1, 1).size() == 24);
  CHECK(brute_force_full(p1).size() == 48);

  NetworkParams p3 = benchmark_params(3);
  CHECK(subsystem_state_count(p3, 1) == 224);
  CHECK(full_state_count(p3) == 896);
  CHECK(brute_force_subsystem(p3, 1).size() == 224);
  CHECK(brute_force_full(p3).size() == 896);

  CHECK(SubsystemSpace(p3, 1).size() == 224);
  CHECK(FullSpace(p3).size() == 896);
}

TEST_CASE("full enumeration is the subsystem enumeration times the other cap") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 8; ++trial) {
    NetworkParams p = random_params(rng, 5);
    CHECK(full_state_count(p) == subsystem_state_count(p, 1) * (p.n2 + 1));
    CHECK(full_state_count(p) == subsystem_state_count(p, 2) * (p.n1 + 1));
    FullSpace full(p);
    CHECK(full.size() == full_state_count(p));
  }
}

TEST_CASE("enumeration is a bijection: index(state_at(k)) == k") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 8; ++trial) {
    NetworkParams p = random_params(rng, 4);
    for (int product : {1, 2}) {
      SubsystemSpace space(p, product);
      for (int k = 0; k < space.size(); ++k) CHECK(space.index(space.state(k)) == k);
    }
    FullSpace full(p);
    for (int k = 0; k < full.size(); ++k) CHECK(full.index(full.state(k)) == k);
  }
}

TEST_CASE("no enumerated state violates phase feasibility") {
  NetworkParams p = benchmark_params(3);
  p.n2 = 2;  // asymmetric caps
  for (int product : {1, 2}) {
    SubsystemSpace space(p, product);
    for (const SubsystemState& s : space.states()) {
      CHECK(!(s.phase == Phase::U1 && s.l11 == 0));
      CHECK(!(s.phase == Phase::U2 && s.l21 == 0));
      CHECK(s.l11 <= p.n1);
      CHECK(s.l21 <= p.n2);
      CHECK(s.li2 <= (product == 1 ? p.n1 : p.n2));
    }
  }
}

TEST_CASE("label swap maps SS(1) onto SS(2) bijectively") {
  std::mt19937_64 rng(31);
  NetworkParams p = random_params(rng, 3);
  SubsystemSpace ss1(p, 1);
  SubsystemSpace ss2_swapped(p.swapped(), 2);
  REQUIRE(ss1.size() == ss2_swapped.size());
  std::set<int> hit;
  for (const SubsystemState& s : ss1.states()) {
    SubsystemState image{s.l21, s.l11, swap_phase(s.phase), s.li2};
    hit.insert(ss2_swapped.index(image));
  }
  CHECK(static_cast<int>(hit.size()) == ss1.size());
}

TEST_CASE("parameter validation names the offending field") {
  NetworkParams p = benchmark_params(3);
  p.n1 = 0;
  CHECK_THROWS_WITH_AS(p.validate(), "NetworkParams.n1 must be >= 1",
                       std::invalid_argument);
  p = benchmark_params(3);
  p.mu21 = -1.0;
  CHECK_THROWS_WITH_AS(p.validate(), "NetworkParams.mu21 must be > 0",
                       std::invalid_argument);
  p = benchmark_params(3);
  p.lambda1 = -0.5;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  // zero arrivals are a legal corner (a closed-off product type)
  p = benchmark_params(2);
  p.lambda1 = p.lambda2 = 0.0;
  CHECK_NOTHROW(p.validate());

  CHECK_THROWS_AS(SubsystemSpace(benchmark_params(1), 3), std::invalid_argument);
}

TEST_CASE("traffic intensity helper matches the advisory headline values") {
  CHECK(benchmark_params(3).rho(1) == doctest::Approx(0.5));
  CHECK(symmetric_params(1, 2.5, 5, 3).rho(2) == doctest::Approx(0.8));
}
