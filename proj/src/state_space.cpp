#include "polling/state_space.hpp"

namespace polling {

namespace {
constexpr Phase kPhaseOrder[] = {Phase::S1, Phase::S2, Phase::U1, Phase::U2};

// Rank of a feasible phase among the feasible phases of an (l11, l21) block.
int phase_rank(Phase r, int l11) {
  switch (r) {
    case Phase::S1: return 0;
    case Phase::S2: return 1;
    case Phase::U1: return 2;
    default: return 2 + (l11 >= 1 ? 1 : 0);  // U2 follows U1 when U1 is feasible
  }
}

int phases_in_block(int l11, int l21) {
  return 2 + (l11 >= 1 ? 1 : 0) + (l21 >= 1 ? 1 : 0);
}
}  // namespace

SubsystemSpace::SubsystemSpace(const NetworkParams& params, int product)
    : product_(product),
      cap1_(params.n1),
      cap2_(params.n2),
      cap_tracked_(params.cap(product)) {
  params.validate();
  require_product(product);
  block_base_.resize((cap1_ + 1) * (cap2_ + 1) + 1, 0);
  for (int l11 = 0; l11 <= cap1_; ++l11) {
    for (int l21 = 0; l21 <= cap2_; ++l21) {
      block_base_[block(l11, l21)] = static_cast<int>(states_.size());
      for (Phase r : kPhaseOrder) {
        if (!phase_feasible(r, l11, l21)) continue;
        for (int li2 = 0; li2 <= cap_tracked_; ++li2)
          states_.push_back(SubsystemState{l11, l21, r, li2});
      }
    }
  }
  block_base_.back() = static_cast<int>(states_.size());
}

bool SubsystemSpace::contains(const SubsystemState& s) const {
  return s.l11 >= 0 && s.l11 <= cap1_ && s.l21 >= 0 && s.l21 <= cap2_ &&
         s.li2 >= 0 && s.li2 <= cap_tracked_ && phase_feasible(s.phase, s.l11, s.l21);
}

int SubsystemSpace::index(const SubsystemState& s) const {
  if (!contains(s)) throw std::out_of_range("state outside subsystem space");
  int base = block_base_[block(s.l11, s.l21)];
  return base + phase_rank(s.phase, s.l11) * (cap_tracked_ + 1) + s.li2;
}

FullSpace::FullSpace(const NetworkParams& params)
    : cap1_(params.n1), cap2_(params.n2) {
  params.validate();
  block_base_.resize((cap1_ + 1) * (cap2_ + 1) + 1, 0);
  for (int l11 = 0; l11 <= cap1_; ++l11) {
    for (int l21 = 0; l21 <= cap2_; ++l21) {
      block_base_[block(l11, l21)] = static_cast<int>(states_.size());
      for (Phase r : kPhaseOrder) {
        if (!phase_feasible(r, l11, l21)) continue;
        for (int l12 = 0; l12 <= cap1_; ++l12)
          for (int l22 = 0; l22 <= cap2_; ++l22)
            states_.push_back(FullState{l11, l21, r, l12, l22});
      }
    }
  }
  block_base_.back() = static_cast<int>(states_.size());
}

bool FullSpace::contains(const FullState& s) const {
  return s.l11 >= 0 && s.l11 <= cap1_ && s.l21 >= 0 && s.l21 <= cap2_ &&
         s.l12 >= 0 && s.l12 <= cap1_ && s.l22 >= 0 && s.l22 <= cap2_ &&
         phase_feasible(s.phase, s.l11, s.l21);
}

int FullSpace::index(const FullState& s) const {
  if (!contains(s)) throw std::out_of_range("state outside full space");
  int base = block_base_[block(s.l11, s.l21)];
  int slab = (cap1_ + 1) * (cap2_ + 1);
  return base + phase_rank(s.phase, s.l11) * slab + s.l12 * (cap2_ + 1) + s.l22;
}

std::int64_t subsystem_state_count(const NetworkParams& params, int product) {
  require_product(product);
  std::int64_t per_li2 = 0;
  for (int l11 = 0; l11 <= params.n1; ++l11)
    for (int l21 = 0; l21 <= params.n2; ++l21)
      per_li2 += phases_in_block(l11, l21);
  return per_li2 * (params.cap(product) + 1);
}

std::int64_t full_state_count(const NetworkParams& params) {
  std::int64_t per_tail = 0;
  for (int l11 = 0; l11 <= params.n1; ++l11)
    for (int l21 = 0; l21 <= params.n2; ++l21)
      per_tail += phases_in_block(l11, l21);
  return per_tail * (params.n1 + 1) * (params.n2 + 1);
}

}  // namespace polling
