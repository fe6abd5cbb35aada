#include "polling/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <random>

namespace polling {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// 97.5% Student-t quantiles for df = 1..30; normal beyond.
constexpr double kT975[] = {
    12.706204736, 4.302652730, 3.182446305, 2.776445105, 2.570581836,
    2.446911851,  2.364624252, 2.306004135, 2.262157163, 2.228138852,
    2.200985160,  2.178812830, 2.160368656, 2.144786688, 2.131449546,
    2.119905299,  2.109815578, 2.100922040, 2.093024054, 2.085963447,
    2.079613845,  2.073873068, 2.068657610, 2.063898562, 2.059538553,
    2.055529439,  2.051830516, 2.048407142, 2.045229642, 2.042272456};

double t975(int df) {
  if (df < 1) return 0.0;
  return df <= 30 ? kT975[df - 1] : 1.959963985;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d4a2c62d1ce4e5ULL;
  return x ^ (x >> 31);
}

// Exponential sampling by inversion on top of mt19937_64; avoids the
// implementation-defined std::exponential_distribution so that a (seed,
// replication) pair yields the same stream on every platform.
class ExpSampler {
 public:
  explicit ExpSampler(std::uint64_t seed) : eng_(seed) {}

  double operator()(double rate) {
    // u in (0, 1]: never log(0).
    double u = ((eng_() >> 11) + 1.0) * 0x1.0p-53;
    return -std::log(u) / rate;
  }

 private:
  std::mt19937_64 eng_;
};

Estimate estimate_from(const std::vector<double>& xs) {
  Estimate e;
  int n = static_cast<int>(xs.size());
  if (n == 0) return e;
  double sum = 0.0;
  for (double x : xs) sum += x;
  e.mean = sum / n;
  if (n >= 2) {
    double ss = 0.0;
    for (double x : xs) ss += (x - e.mean) * (x - e.mean);
    e.half_width = t975(n - 1) * std::sqrt(ss / (n - 1)) / std::sqrt(double(n));
  }
  return e;
}

// Station-2 activity implied by the phase: the served product index, 0 = idle.
int station2_target(Phase phase, Strategy strategy) {
  if (is_setup(phase)) return 0;
  int upstream = phase_product(phase);
  return strategy == Strategy::SP ? upstream : 3 - upstream;
}

}  // namespace

void SimConfig::validate() const {
  params.validate();
  if (!(horizon > 0.0)) throw InvalidConfig("horizon must be > 0");
  double w = effective_warmup();
  if (!(w >= 0.0) || !(w < horizon))
    throw InvalidConfig("warmup must satisfy 0 <= warmup < horizon");
  if (replications < 1) throw InvalidConfig("replications must be >= 1");
}

ReplicationStats run_replication(const SimConfig& config, int rep_index,
                                 const TraceHook& trace) {
  config.validate();
  const NetworkParams& p = config.params;
  const double horizon = config.horizon;
  const double warmup = config.effective_warmup();
  ExpSampler sample(splitmix64(config.seed ^ splitmix64(rep_index + 1)));

  // State: queue lengths, phase, and FIFO entry timestamps per queue.
  int len[2][2] = {{0, 0}, {0, 0}};  // [product-1][station-1]
  Phase phase = Phase::S1;
  std::deque<double> fifo[2][2];

  // Event channels. Station 1 is never idle (it is either serving or
  // setting up), so its channel is always armed.
  double t_arr[2] = {p.lambda1 > 0.0 ? sample(p.lambda1) : kInf,
                     p.lambda2 > 0.0 ? sample(p.lambda2) : kInf};
  double t_st1 = sample(p.mus1);  // initial phase is S1
  double t_st2 = kInf;
  int st2_serving = 0;

  double clock = 0.0;

  // Post-warmup accumulators, indexed [product-1][station-1].
  double area[2][2] = {{0, 0}, {0, 0}};
  std::int64_t departures[2][2] = {{0, 0}, {0, 0}};
  std::int64_t losses[2][2] = {{0, 0}, {0, 0}};
  double sojourn_sum[2][2] = {{0, 0}, {0, 0}};
  std::int64_t sojourn_n[2][2] = {{0, 0}, {0, 0}};
  ReplicationCounts counts;

  auto accumulate_area = [&](double upto) {
    double dt = std::min(upto, horizon) - std::max(clock, warmup);
    if (dt <= 0.0) return;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) area[i][j] += dt * len[i][j];
  };

  auto rearm_station2 = [&] {
    int target = station2_target(phase, config.strategy);
    if (target != 0 && len[target - 1][1] > 0) {
      if (st2_serving != target) {
        st2_serving = target;
        t_st2 = clock + sample(p.service2(target));
      }
    } else {
      st2_serving = 0;
      t_st2 = kInf;
    }
  };

  while (true) {
    double t_next = std::min(std::min(t_arr[0], t_arr[1]), std::min(t_st1, t_st2));
    if (t_next > horizon) {
      accumulate_area(horizon);
      break;
    }
    accumulate_area(t_next);
    clock = t_next;
    const bool counted = clock >= warmup;

    if (t_next == t_arr[0] || t_next == t_arr[1]) {
      int i = t_next == t_arr[0] ? 1 : 2;
      ++counts.arrivals[i - 1];
      if (len[i - 1][0] < p.cap(i)) {
        ++len[i - 1][0];
        fifo[i - 1][0].push_back(clock);
      } else {
        ++counts.lost_at_1[i - 1];
        if (counted) ++losses[i - 1][0];
      }
      t_arr[i - 1] = clock + sample(p.lambda(i));
    } else if (t_next == t_st1) {
      if (is_setup(phase)) {
        // Setup completion: serve if the polled queue is nonempty, else
        // cycle over to the other setup.
        int k = phase_product(phase);
        if (len[k - 1][0] > 0) {
          phase = serving_phase(k);
          t_st1 = clock + sample(p.service1(k));
        } else {
          phase = setup_phase(3 - k);
          t_st1 = clock + sample(p.setup(3 - k));
        }
      } else {
        // Station-1 service completion of product k (exhaustive policy).
        int k = phase_product(phase);
        --len[k - 1][0];
        double entered = fifo[k - 1][0].front();
        fifo[k - 1][0].pop_front();
        ++counts.station1_departures[k - 1];
        if (counted) {
          ++departures[k - 1][0];
          sojourn_sum[k - 1][0] += clock - entered;
          ++sojourn_n[k - 1][0];
        }
        // The finished unit moves downstream, or is lost if that buffer
        // is full.
        if (len[k - 1][1] < p.cap(k)) {
          ++len[k - 1][1];
          fifo[k - 1][1].push_back(clock);
        } else {
          ++counts.lost_at_2[k - 1];
          if (counted) ++losses[k - 1][1];
        }
        if (len[k - 1][0] == 0) {
          phase = setup_phase(3 - k);
          t_st1 = clock + sample(p.setup(3 - k));
        } else {
          t_st1 = clock + sample(p.service1(k));
        }
      }
    } else {
      // Station-2 service completion.
      int i = st2_serving;
      --len[i - 1][1];
      double entered = fifo[i - 1][1].front();
      fifo[i - 1][1].pop_front();
      ++counts.station2_departures[i - 1];
      if (counted) {
        ++departures[i - 1][1];
        sojourn_sum[i - 1][1] += clock - entered;
        ++sojourn_n[i - 1][1];
      }
      st2_serving = 0;  // decide continuation in rearm below
      t_st2 = kInf;
    }

    rearm_station2();
    if (trace) trace(clock, phase, len[0][0], len[1][0], len[0][1], len[1][1]);
  }

  counts.left_at_station1 = {len[0][0], len[1][0]};
  counts.left_at_station2 = {len[0][1], len[1][1]};

  ReplicationStats stats;
  const double span = horizon - warmup;
  stats.th11 = departures[0][0] / span;
  stats.th21 = departures[1][0] / span;
  stats.th12 = departures[0][1] / span;
  stats.th22 = departures[1][1] / span;
  stats.len11 = area[0][0] / span;
  stats.len21 = area[1][0] / span;
  stats.len12 = area[0][1] / span;
  stats.len22 = area[1][1] / span;
  stats.loss11 = losses[0][0] / span;
  stats.loss21 = losses[1][0] / span;
  stats.loss12 = losses[0][1] / span;
  stats.loss22 = losses[1][1] / span;
  auto leg = [&](int i, int j) {
    return sojourn_n[i][j] > 0 ? sojourn_sum[i][j] / sojourn_n[i][j] : 0.0;
  };
  stats.sojourn1 = leg(0, 0) + leg(0, 1);
  stats.sojourn2 = leg(1, 0) + leg(1, 1);
  stats.counts = counts;
  return stats;
}

SimEstimate run_simulation(const SimConfig& config) {
  config.validate();
  std::vector<ReplicationStats> reps(config.replications);
  for (int r = 0; r < config.replications; ++r) reps[r] = run_replication(config, r);

  auto ratio = [](double num, double den) { return den > 0.0 ? num / den : 0.0; };

  SimEstimate est;
  auto collect = [&](auto pick, Estimate& slot) {
    std::vector<double> xs;
    xs.reserve(reps.size());
    for (const ReplicationStats& r : reps) xs.push_back(pick(r));
    slot = estimate_from(xs);
  };
  collect([](const ReplicationStats& r) { return r.th11; }, est.th11);
  collect([](const ReplicationStats& r) { return r.th21; }, est.th21);
  collect([](const ReplicationStats& r) { return r.th12; }, est.th12);
  collect([](const ReplicationStats& r) { return r.th22; }, est.th22);
  collect([](const ReplicationStats& r) { return r.len11; }, est.len11);
  collect([](const ReplicationStats& r) { return r.len21; }, est.len21);
  collect([](const ReplicationStats& r) { return r.len12; }, est.len12);
  collect([](const ReplicationStats& r) { return r.len22; }, est.len22);
  collect([&](const ReplicationStats& r) { return ratio(r.len11, r.th11); }, est.w11);
  collect([&](const ReplicationStats& r) { return ratio(r.len21, r.th21); }, est.w21);
  collect([&](const ReplicationStats& r) { return ratio(r.len12, r.th12); }, est.w12);
  collect([&](const ReplicationStats& r) { return ratio(r.len22, r.th22); }, est.w22);
  collect([&](const ReplicationStats& r) {
    return ratio(r.len11, r.th11) + ratio(r.len12, r.th12);
  }, est.w1);
  collect([&](const ReplicationStats& r) {
    return ratio(r.len21, r.th21) + ratio(r.len22, r.th22);
  }, est.w2);
  collect([](const ReplicationStats& r) { return r.sojourn1; }, est.sojourn1);
  collect([](const ReplicationStats& r) { return r.sojourn2; }, est.sojourn2);
  collect([](const ReplicationStats& r) { return r.loss11; }, est.loss11);
  collect([](const ReplicationStats& r) { return r.loss21; }, est.loss21);
  collect([](const ReplicationStats& r) { return r.loss12; }, est.loss12);
  collect([](const ReplicationStats& r) { return r.loss22; }, est.loss22);
  return est;
}

ValidationResult validate_against_analysis(const SimEstimate& sim,
                                           const PerformanceReport& report) {
  ValidationResult result;
  const bool p1 = report.product == 1;
  auto row = [&](const std::string& name, double analytical, const Estimate& e) {
    ValidationRow r{name, analytical, e, e.contains(analytical)};
    result.rows.push_back(r);
    result.worst_abs_deviation =
        std::max(result.worst_abs_deviation, std::fabs(analytical - e.mean));
    if (!r.inside_ci) ++result.outside_count;
  };
  std::string i = p1 ? "1" : "2";
  row("th_" + i + "1", report.th1, p1 ? sim.th11 : sim.th21);
  row("th_" + i + "2", report.th2, p1 ? sim.th12 : sim.th22);
  row("L_" + i + "1", report.len1, p1 ? sim.len11 : sim.len21);
  row("L_" + i + "2", report.len2, p1 ? sim.len12 : sim.len22);
  if (report.w_total) row("w_" + i, *report.w_total, p1 ? sim.w1 : sim.w2);
  row("loss_" + i + "1", report.loss1, p1 ? sim.loss11 : sim.loss21);
  row("loss_" + i + "2", report.loss2, p1 ? sim.loss12 : sim.loss22);
  return result;
}

ValidationResult validate_against_analysis(const SimConfig& config,
                                           const PerformanceReport& report) {
  return validate_against_analysis(run_simulation(config), report);
}

}  // namespace polling
