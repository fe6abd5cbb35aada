#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "polling/generator.hpp"
#include "polling/solver.hpp"
#include "test_support.hpp"

using namespace polling;
using namespace polling::test;

namespace {

GeneratorMatrix random_dense_generator(std::mt19937_64& rng, int n, double scale = 1.0) {
  std::uniform_real_distribution<double> rate(0.0, scale);
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      double r = rate(rng);
      if (r > 0.05 * scale) arcs.push_back({i, j, r});
    }
  // make sure every state moves somewhere
  for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n, 0.1 * scale});
  return GeneratorMatrix::from_arcs(n, std::move(arcs));
}

void check_sound(const GeneratorMatrix& q, const StationaryDistribution& dist) {
  CHECK(dist.residual <= 1e-10);
  double sum = std::accumulate(dist.probabilities.begin(), dist.probabilities.end(), 0.0);
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  for (double p : dist.probabilities) CHECK(p >= 0.0);
  CHECK(stationary_residual(q, dist.probabilities) == dist.residual);
}

}  // namespace

TEST_CASE("two-state birth-death chain solves in closed form") {
  // rates: 0 -> 1 at a = 1, 1 -> 0 at b = 3; pi = (b, a) / (a + b)
  GeneratorMatrix q = GeneratorMatrix::from_arcs(2, {{0, 1, 1.0}, {1, 0, 3.0}});
  for (bool force_gth : {false, true}) {
    SolveOptions opts;
    opts.force_gth = force_gth;
    StationaryDistribution dist = solve_stationary(q, opts);
    CHECK(dist[0] == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(dist[1] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(dist.solver_used ==
          (force_gth ? SolverMethod::Gth : SolverMethod::DirectReplacedRow));
    check_sound(q, dist);
  }
}

TEST_CASE("single-state generator is one recurrent class with pi = 1") {
  GeneratorMatrix q = GeneratorMatrix::from_arcs(1, {});
  auto rep = check_irreducible(q);
  CHECK(rep.scc_count == 1);
  CHECK(rep.recurrent_count == 1);
}

TEST_CASE("block-diagonal chains are rejected as reducible") {
  GeneratorMatrix q = GeneratorMatrix::from_arcs(
      4, {{0, 1, 1.0}, {1, 0, 2.0}, {2, 3, 1.0}, {3, 2, 2.0}});
  auto rep = check_irreducible(q);
  CHECK(rep.scc_count == 2);
  CHECK(rep.recurrent_count == 2);
  CHECK(!rep.irreducible);
  CHECK_THROWS_AS(solve_stationary(q), ReducibleChain);
}

TEST_CASE("transient states are tolerated when one recurrent class remains") {
  // 0 and 1 drain into the 2 <-> 3 cycle and get probability zero.
  GeneratorMatrix q = GeneratorMatrix::from_arcs(
      4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 2, 2.0}});
  auto rep = check_irreducible(q);
  CHECK(rep.scc_count == 3);
  CHECK(rep.recurrent_count == 1);
  StationaryDistribution dist = solve_stationary(q);
  CHECK(dist[0] == doctest::Approx(0.0));
  CHECK(dist[1] == doctest::Approx(0.0));
  CHECK(dist[2] == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("direct and GTH agree componentwise on random chains") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 8; ++trial) {
    int n = 3 + static_cast<int>(rng() % 60);
    GeneratorMatrix q = random_dense_generator(rng, n, trial % 2 ? 1.0 : 100.0);
    SolveOptions direct_only;
    direct_only.allow_gth_fallback = false;
    StationaryDistribution a = solve_stationary(q, direct_only);
    SolveOptions gth;
    gth.force_gth = true;
    StationaryDistribution b = solve_stationary(q, gth);
    check_sound(q, a);
    check_sound(q, b);
    for (int i = 0; i < n; ++i) CHECK(std::fabs(a[i] - b[i]) <= 1e-9);
  }
}

TEST_CASE("both methods agree on a benchmark subsystem chain") {
  NetworkParams p = benchmark_params(3);
  for (Strategy s : {Strategy::SP, Strategy::OP}) {
    GeneratorMatrix q = build_subsystem_generator(p, s, 1);
    SolveOptions gth;
    gth.force_gth = true;
    StationaryDistribution direct = solve_stationary(q);
    StationaryDistribution elim = solve_stationary(q, gth);
    check_sound(q, direct);
    check_sound(q, elim);
    for (int i = 0; i < q.dimension(); ++i)
      CHECK(std::fabs(direct[i] - elim[i]) <= 1e-9);
  }
}

TEST_CASE("solution permutes with any relabeling of states") {
  std::mt19937_64 rng(777);
  int n = 30;
  GeneratorMatrix q = random_dense_generator(rng, n);
  StationaryDistribution base = solve_stationary(q);

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Arc> relabeled;
  for (const Arc& a : q.arcs()) relabeled.push_back({perm[a.from], perm[a.to], a.rate});
  StationaryDistribution shuffled =
      solve_stationary(GeneratorMatrix::from_arcs(n, std::move(relabeled)));
  for (int i = 0; i < n; ++i)
    CHECK(shuffled[perm[i]] == doctest::Approx(base[i]).epsilon(1e-9));
}

TEST_CASE("dimension cap raises DimensionTooLarge") {
  GeneratorMatrix q = build_subsystem_generator(benchmark_params(2), Strategy::SP, 1);
  SolveOptions opts;
  opts.max_states = 10;
  CHECK_THROWS_AS(solve_stationary(q, opts), DimensionTooLarge);
}

TEST_CASE("stationary residual flags a perturbed distribution") {
  GeneratorMatrix q = build_subsystem_generator(benchmark_params(2), Strategy::SP, 1);
  StationaryDistribution dist = solve_stationary(q);
  CHECK(stationary_residual(q, dist.probabilities) <= 1e-10);
  std::vector<double> bumped = dist.probabilities;
  bumped[3] += 0.01;
  CHECK(stationary_residual(q, bumped) > 1e-4);
}

TEST_CASE("mismatched residual dimension is rejected") {
  GeneratorMatrix q = GeneratorMatrix::from_arcs(2, {{0, 1, 1.0}, {1, 0, 1.0}});
  CHECK_THROWS_AS(stationary_residual(q, {1.0}), std::invalid_argument);
}
