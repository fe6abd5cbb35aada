#include "polling/generator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace polling {

GeneratorMatrix GeneratorMatrix::from_arcs(int dimension, std::vector<Arc> arcs) {
  GeneratorMatrix g;
  g.dim_ = dimension;
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
  g.arcs_.reserve(arcs.size());
  for (const Arc& a : arcs) {
    if (a.from == a.to) throw std::logic_error("self-loop arc in generator");
    if (a.rate < 0.0) throw std::logic_error("negative rate in generator");
    if (a.rate == 0.0) continue;
    if (!g.arcs_.empty() && g.arcs_.back().from == a.from && g.arcs_.back().to == a.to)
      g.arcs_.back().rate += a.rate;
    else
      g.arcs_.push_back(a);
  }
  g.diag_.assign(dimension, 0.0);
  for (const Arc& a : g.arcs_) g.diag_[a.from] -= a.rate;
  return g;
}

double GeneratorMatrix::max_row_sum_error() const {
  std::vector<double> sums(diag_);
  for (const Arc& a : arcs_) sums[a.from] += a.rate;
  double worst = 0.0;
  for (double s : sums) worst = std::max(worst, std::fabs(s));
  return worst;
}

void GeneratorMatrix::dump_edge_list(std::ostream& os) const {
  char buf[64];
  for (const Arc& a : arcs_) {
    std::snprintf(buf, sizeof(buf), "%d\t%d\t%.17g\n", a.from, a.to, a.rate);
    os << buf;
  }
}

namespace {

/// Phase in which station 2 works on `product`, given the strategy.
Phase station2_gate(Strategy strategy, int product) {
  int upstream = strategy == Strategy::SP ? product : (3 - product);
  return serving_phase(upstream);
}

}  // namespace

GeneratorMatrix build_subsystem_generator(const NetworkParams& params,
                                          Strategy strategy, int product) {
  params.validate();
  require_product(product);
  SubsystemSpace space(params, product);
  const int cap_tracked = params.cap(product);
  const Phase gate = station2_gate(strategy, product);

  std::vector<Arc> arcs;
  arcs.reserve(static_cast<size_t>(space.size()) * 5);
  for (int idx = 0; idx < space.size(); ++idx) {
    const SubsystemState s = space.state(idx);
    auto add = [&](const SubsystemState& to, double rate) {
      arcs.push_back(Arc{idx, space.index(to), rate});
    };

    // Arrivals; a full queue drops the arrival (no transition).
    if (s.l11 < params.n1)
      add(SubsystemState{s.l11 + 1, s.l21, s.phase, s.li2}, params.lambda1);
    if (s.l21 < params.n2)
      add(SubsystemState{s.l11, s.l21 + 1, s.phase, s.li2}, params.lambda2);

    if (is_setup(s.phase)) {
      // Setup completion: start serving if the polled queue is nonempty,
      // otherwise switch over to the other setup (idle cycling).
      int k = phase_product(s.phase);
      int lk1 = k == 1 ? s.l11 : s.l21;
      Phase next = lk1 > 0 ? serving_phase(k) : setup_phase(3 - k);
      add(SubsystemState{s.l11, s.l21, next, s.li2}, params.setup(k));
    } else {
      // Exhaustive station-1 service of product k.
      int k = phase_product(s.phase);
      int lk1 = k == 1 ? s.l11 : s.l21;
      SubsystemState to = s;
      if (k == 1) --to.l11; else --to.l21;
      if (lk1 == 1) to.phase = setup_phase(3 - k);
      if (k == product && s.li2 < cap_tracked) ++to.li2;  // else lost downstream
      add(to, params.service1(k));

      // Station-2 service of the tracked product, gated by strategy.
      if (s.phase == gate && s.li2 >= 1)
        add(SubsystemState{s.l11, s.l21, s.phase, s.li2 - 1}, params.service2(product));
    }
  }
  return GeneratorMatrix::from_arcs(space.size(), std::move(arcs));
}

GeneratorMatrix build_full_generator(const NetworkParams& params,
                                     Strategy strategy,
                                     std::int64_t max_states) {
  params.validate();
  if (full_state_count(params) > max_states)
    throw std::length_error("full state space exceeds the configured cap");
  FullSpace space(params);
  const Phase gate1 = station2_gate(strategy, 1);
  const Phase gate2 = station2_gate(strategy, 2);

  std::vector<Arc> arcs;
  arcs.reserve(static_cast<size_t>(space.size()) * 6);
  for (int idx = 0; idx < space.size(); ++idx) {
    const FullState s = space.state(idx);
    auto add = [&](const FullState& to, double rate) {
      arcs.push_back(Arc{idx, space.index(to), rate});
    };

    if (s.l11 < params.n1) add(FullState{s.l11 + 1, s.l21, s.phase, s.l12, s.l22}, params.lambda1);
    if (s.l21 < params.n2) add(FullState{s.l11, s.l21 + 1, s.phase, s.l12, s.l22}, params.lambda2);

    if (is_setup(s.phase)) {
      int k = phase_product(s.phase);
      int lk1 = k == 1 ? s.l11 : s.l21;
      Phase next = lk1 > 0 ? serving_phase(k) : setup_phase(3 - k);
      add(FullState{s.l11, s.l21, next, s.l12, s.l22}, params.setup(k));
    } else {
      int k = phase_product(s.phase);
      int lk1 = k == 1 ? s.l11 : s.l21;
      FullState to = s;
      if (k == 1) --to.l11; else --to.l21;
      if (lk1 == 1) to.phase = setup_phase(3 - k);
      // Completed unit joins its station-2 queue; lost if that queue is full.
      if (k == 1) { if (s.l12 < params.n1) ++to.l12; }
      else        { if (s.l22 < params.n2) ++to.l22; }
      add(to, params.service1(k));

      if (s.phase == gate1 && s.l12 >= 1)
        add(FullState{s.l11, s.l21, s.phase, s.l12 - 1, s.l22}, params.mu12);
      if (s.phase == gate2 && s.l22 >= 1)
        add(FullState{s.l11, s.l21, s.phase, s.l12, s.l22 - 1}, params.mu22);
    }
  }
  return GeneratorMatrix::from_arcs(space.size(), std::move(arcs));
}

}  // namespace polling
