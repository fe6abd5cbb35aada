#ifndef POLLING_TEST_SUPPORT_HPP
#define POLLING_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "polling/params.hpp"
#include "polling/state_space.hpp"

namespace polling::test {

inline NetworkParams symmetric_params(double lambda, double mu, double mus, int n) {
  NetworkParams p;
  p.lambda1 = p.lambda2 = lambda;
  p.mu11 = p.mu21 = p.mu12 = p.mu22 = mu;
  p.mus1 = p.mus2 = mus;
  p.n1 = p.n2 = n;
  return p;
}

/// The symmetric benchmark setting: lambda = 1, mu = 4, mus = 5.
inline NetworkParams benchmark_params(int n) { return symmetric_params(1.0, 4.0, 5.0, n); }

inline NetworkParams random_params(std::mt19937_64& rng, int max_cap = 4) {
  std::uniform_real_distribution<double> lam(0.2, 2.0);
  std::uniform_real_distribution<double> mu(0.5, 8.0);
  std::uniform_int_distribution<int> cap(1, max_cap);
  NetworkParams p;
  p.lambda1 = lam(rng);
  p.lambda2 = lam(rng);
  p.mu11 = mu(rng);
  p.mu21 = mu(rng);
  p.mu12 = mu(rng);
  p.mu22 = mu(rng);
  p.mus1 = mu(rng);
  p.mus2 = mu(rng);
  p.n1 = cap(rng);
  p.n2 = cap(rng);
  return p;
}

/// Independent brute-force enumeration of the feasible subsystem tuples:
/// walks the full rectangular product space and filters by the phase
/// feasibility rule. Used as the oracle for the enumeration module.
inline std::vector<SubsystemState> brute_force_subsystem(const NetworkParams& p,
                                                         int product) {
  std::vector<SubsystemState> out;
  int cap_tracked = product == 1 ? p.n1 : p.n2;
  for (int l11 = 0; l11 <= p.n1; ++l11)
    for (int l21 = 0; l21 <= p.n2; ++l21)
      for (Phase r : {Phase::S1, Phase::S2, Phase::U1, Phase::U2}) {
        if (r == Phase::U1 && l11 == 0) continue;
        if (r == Phase::U2 && l21 == 0) continue;
        for (int li2 = 0; li2 <= cap_tracked; ++li2)
          out.push_back(SubsystemState{l11, l21, r, li2});
      }
  return out;
}

inline std::vector<FullState> brute_force_full(const NetworkParams& p) {
  std::vector<FullState> out;
  for (int l11 = 0; l11 <= p.n1; ++l11)
    for (int l21 = 0; l21 <= p.n2; ++l21)
      for (Phase r : {Phase::S1, Phase::S2, Phase::U1, Phase::U2}) {
        if (r == Phase::U1 && l11 == 0) continue;
        if (r == Phase::U2 && l21 == 0) continue;
        for (int l12 = 0; l12 <= p.n1; ++l12)
          for (int l22 = 0; l22 <= p.n2; ++l22)
            out.push_back(FullState{l11, l21, r, l12, l22});
      }
  return out;
}

}  // namespace polling::test

#endif
