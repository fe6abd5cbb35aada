#ifndef POLLING_STATE_SPACE_HPP
#define POLLING_STATE_SPACE_HPP

#include <cstdint>
#include <vector>

#include "polling/params.hpp"

namespace polling {

/// State of the decomposed chain SS(i): both station-1 queues, the shared
/// server phase, and the station-2 queue of the tracked product only.
/// Which product is tracked is a property of the enclosing SubsystemSpace.
struct SubsystemState {
  int l11 = 0;             ///< type-1 queue length at station 1
  int l21 = 0;             ///< type-2 queue length at station 1
  Phase phase = Phase::S1;
  int li2 = 0;             ///< tracked product's queue length at station 2

  friend bool operator==(const SubsystemState&, const SubsystemState&) = default;
};

/// State of the undecomposed chain: both station-2 queues tracked.
struct FullState {
  int l11 = 0;
  int l21 = 0;
  Phase phase = Phase::S1;
  int l12 = 0;  ///< type-1 queue length at station 2
  int l22 = 0;  ///< type-2 queue length at station 2

  friend bool operator==(const FullState&, const FullState&) = default;
};

/// A phase is feasible only if the queue it serves is nonempty; setups are
/// state independent and always feasible.
inline bool phase_feasible(Phase r, int l11, int l21) {
  if (r == Phase::U1) return l11 >= 1;
  if (r == Phase::U2) return l21 >= 1;
  return true;
}

/// Indexed enumeration of the SS(i) state space, lexicographic on
/// (l11, l21, phase, li2) with phase order S1 < S2 < U1 < U2. The position
/// of a state in this order is its row/column index in every generator
/// matrix and distribution vector built over the space.
class SubsystemSpace {
 public:
  SubsystemSpace(const NetworkParams& params, int product);

  int size() const { return static_cast<int>(states_.size()); }
  const SubsystemState& state(int index) const { return states_[index]; }
  const std::vector<SubsystemState>& states() const { return states_; }

  int index(const SubsystemState& s) const;
  bool contains(const SubsystemState& s) const;

  int product() const { return product_; }
  int cap1() const { return cap1_; }
  int cap2() const { return cap2_; }
  /// Cap of the tracked product's station-2 queue.
  int cap_tracked() const { return cap_tracked_; }

 private:
  int product_;
  int cap1_, cap2_, cap_tracked_;
  std::vector<SubsystemState> states_;
  std::vector<int> block_base_;  // first index of each (l11, l21) block

  int block(int l11, int l21) const { return l11 * (cap2_ + 1) + l21; }
};

/// Indexed enumeration of the full state space, lexicographic on
/// (l11, l21, phase, l12, l22).
class FullSpace {
 public:
  explicit FullSpace(const NetworkParams& params);

  int size() const { return static_cast<int>(states_.size()); }
  const FullState& state(int index) const { return states_[index]; }
  const std::vector<FullState>& states() const { return states_; }

  int index(const FullState& s) const;
  bool contains(const FullState& s) const;

  int cap1() const { return cap1_; }
  int cap2() const { return cap2_; }

  /// Projection onto the SS(product) state tuple (drops the other
  /// station-2 queue).
  SubsystemState project(const FullState& s, int product) const {
    return SubsystemState{s.l11, s.l21, s.phase, product == 1 ? s.l12 : s.l22};
  }

 private:
  int cap1_, cap2_;
  std::vector<FullState> states_;
  std::vector<int> block_base_;

  int block(int l11, int l21) const { return l11 * (cap2_ + 1) + l21; }
};

/// Number of feasible states of SS(product); matches SubsystemSpace::size().
std::int64_t subsystem_state_count(const NetworkParams& params, int product);

/// Number of feasible full states; matches FullSpace::size().
std::int64_t full_state_count(const NetworkParams& params);

}  // namespace polling

#endif
