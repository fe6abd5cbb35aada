#include "polling/balance.hpp"

#include <cmath>
#include <stdexcept>

namespace polling {

namespace {

// Balance equations written out for SS(1): the tracked station-2 queue is
// l12, fed by type-1 completions and drained at mu12 during U1 (SP) or U2
// (OP). SS(2) is checked through the label-swap bijection below.
class Ss1BalanceChecker {
 public:
  Ss1BalanceChecker(const NetworkParams& p, Strategy strategy,
                    const std::vector<double>& pi)
      : p_(p), op_(strategy == Strategy::OP), space_(p, 1), pi_(pi) {}

  double max_residual() const {
    double worst = 0.0;
    for (int l11 = 0; l11 <= p_.n1; ++l11)
      for (int l21 = 0; l21 <= p_.n2; ++l21)
        for (int l12 = 0; l12 <= p_.n1; ++l12) {
          worst = std::max(worst, std::fabs(residual_s1(l11, l21, l12)));
          worst = std::max(worst, std::fabs(residual_s2(l11, l21, l12)));
          if (l11 >= 1) worst = std::max(worst, std::fabs(residual_u1(l11, l21, l12)));
          if (l21 >= 1) worst = std::max(worst, std::fabs(residual_u2(l11, l21, l12)));
        }
    return worst;
  }

 private:
  const NetworkParams& p_;
  bool op_;
  SubsystemSpace space_;
  const std::vector<double>& pi_;

  double pi(int l11, int l21, Phase r, int l12) const {
    return pi_[space_.index(SubsystemState{l11, l21, r, l12})];
  }

  // Arrival out-rates vanish at full queues (the arrival is dropped).
  double arrival_out(int l11, int l21) const {
    return (l11 < p_.n1 ? p_.lambda1 : 0.0) + (l21 < p_.n2 ? p_.lambda2 : 0.0);
  }

  // (lambda1 + lambda2 + mus1) pi(l11, l21, S1, l12) =
  //   [l21 = 0] mus2 pi(l11, 0, S2, l12) + [l21 = 0] mu21 pi(l11, 1, U2, l12)
  //   + lambda1 pi(l11-1, l21, S1, l12) + lambda2 pi(l11, l21-1, S1, l12)
  double residual_s1(int l11, int l21, int l12) const {
    double out = (arrival_out(l11, l21) + p_.mus1) * pi(l11, l21, Phase::S1, l12);
    double in = 0.0;
    if (l21 == 0) {
      in += p_.mus2 * pi(l11, 0, Phase::S2, l12);
      in += p_.mu21 * pi(l11, 1, Phase::U2, l12);
    }
    if (l11 >= 1) in += p_.lambda1 * pi(l11 - 1, l21, Phase::S1, l12);
    if (l21 >= 1) in += p_.lambda2 * pi(l11, l21 - 1, Phase::S1, l12);
    return out - in;
  }

  // Mirror family for S2 states: entered from S1 when queue 1 is empty and
  // from the last type-1 service completion, which also pushes the finished
  // unit into l12 (kept at the cap when the downstream buffer is full).
  double residual_s2(int l11, int l21, int l12) const {
    double out = (arrival_out(l11, l21) + p_.mus2) * pi(l11, l21, Phase::S2, l12);
    double in = 0.0;
    if (l11 == 0) {
      in += p_.mus1 * pi(0, l21, Phase::S1, l12);
      if (l12 >= 1) in += p_.mu11 * pi(1, l21, Phase::U1, l12 - 1);
      if (l12 == p_.n1) in += p_.mu11 * pi(1, l21, Phase::U1, p_.n1);
    }
    if (l11 >= 1) in += p_.lambda1 * pi(l11 - 1, l21, Phase::S2, l12);
    if (l21 >= 1) in += p_.lambda2 * pi(l11, l21 - 1, Phase::S2, l12);
    return out - in;
  }

  // (lambda1 + lambda2 + mu11 [+ mu12 if serving here and l12 >= 1])
  //   pi(l11, l21, U1, l12) =
  //   mus1 pi(l11, l21, S1, l12)
  //   + lambda1 pi(l11-1, l21, U1, l12)         [l11 >= 2]
  //   + lambda2 pi(l11, l21-1, U1, l12)         [l21 >= 1]
  //   + mu11 pi(l11+1, l21, U1, l12-1)          [l11 < n1, l12 >= 1]
  //   + mu11 pi(l11+1, l21, U1, n1)             [l11 < n1, l12 = n1]
  //   + mu12 pi(l11, l21, U1, l12+1)            [SP only, l12 < n1]
  double residual_u1(int l11, int l21, int l12) const {
    double serve12 = op_ ? 0.0 : p_.mu12;  // station 2 works type 1 in U1 under SP
    double out = (arrival_out(l11, l21) + p_.mu11 + (l12 >= 1 ? serve12 : 0.0)) *
                 pi(l11, l21, Phase::U1, l12);
    double in = p_.mus1 * pi(l11, l21, Phase::S1, l12);
    if (l11 >= 2) in += p_.lambda1 * pi(l11 - 1, l21, Phase::U1, l12);
    if (l21 >= 1) in += p_.lambda2 * pi(l11, l21 - 1, Phase::U1, l12);
    if (l11 < p_.n1) {
      if (l12 >= 1) in += p_.mu11 * pi(l11 + 1, l21, Phase::U1, l12 - 1);
      if (l12 == p_.n1) in += p_.mu11 * pi(l11 + 1, l21, Phase::U1, p_.n1);
    }
    if (serve12 > 0.0 && l12 < p_.n1) in += serve12 * pi(l11, l21, Phase::U1, l12 + 1);
    return out - in;
  }

  // U2 family: type-2 completions leave l12 untouched (the finished unit
  // joins the untracked queue); under OP station 2 drains l12 here.
  double residual_u2(int l11, int l21, int l12) const {
    double serve12 = op_ ? p_.mu12 : 0.0;
    double out = (arrival_out(l11, l21) + p_.mu21 + (l12 >= 1 ? serve12 : 0.0)) *
                 pi(l11, l21, Phase::U2, l12);
    double in = p_.mus2 * pi(l11, l21, Phase::S2, l12);
    if (l11 >= 1) in += p_.lambda1 * pi(l11 - 1, l21, Phase::U2, l12);
    if (l21 >= 2) in += p_.lambda2 * pi(l11, l21 - 1, Phase::U2, l12);
    if (l21 < p_.n2) in += p_.mu21 * pi(l11, l21 + 1, Phase::U2, l12);
    if (serve12 > 0.0 && l12 < p_.n1) in += serve12 * pi(l11, l21, Phase::U2, l12 + 1);
    return out - in;
  }
};

}  // namespace

double residual_against_balance_equations(const NetworkParams& params,
                                          Strategy strategy, int product,
                                          const StationaryDistribution& dist) {
  params.validate();
  require_product(product);
  SubsystemSpace space(params, product);
  if (dist.size() != space.size())
    throw std::invalid_argument("distribution dimension does not match subsystem");

  if (product == 1)
    return Ss1BalanceChecker(params, strategy, dist.probabilities).max_residual();

  // SS(2) is the image of SS(1) under the product-label swap: exchange the
  // station-1 queues, mirror the phase, and re-index the probabilities.
  NetworkParams swapped = params.swapped();
  SubsystemSpace mirror(swapped, 1);
  std::vector<double> remapped(mirror.size(), 0.0);
  for (int i = 0; i < space.size(); ++i) {
    const SubsystemState& s = space.state(i);
    SubsystemState m{s.l21, s.l11, swap_phase(s.phase), s.li2};
    remapped[mirror.index(m)] = dist[i];
  }
  return Ss1BalanceChecker(swapped, strategy, remapped).max_residual();
}

}  // namespace polling
