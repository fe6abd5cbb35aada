#ifndef POLLING_GENERATOR_HPP
#define POLLING_GENERATOR_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "polling/params.hpp"
#include "polling/state_space.hpp"

namespace polling {

/// One off-diagonal transition arc of a generator.
struct Arc {
  int from = 0;
  int to = 0;
  double rate = 0.0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Sparse infinitesimal generator over an indexed state space. Off-diagonal
/// entries are nonnegative transition rates; the diagonal holds negative row
/// sums so every row sums to zero. No self-loop arcs are stored.
class GeneratorMatrix {
 public:
  GeneratorMatrix() = default;

  int dimension() const { return dim_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  double diagonal(int row) const { return diag_[row]; }
  /// Total outflow rate of a row; equals |diagonal|.
  double out_rate(int row) const { return -diag_[row]; }

  /// Largest |row sum| over all rows; zero up to round-off by construction.
  double max_row_sum_error() const;

  /// Writes one line per arc: from<TAB>to<TAB>rate, 17 significant digits.
  void dump_edge_list(std::ostream& os) const;

  /// Assembles arcs plus diagonal, coalescing duplicate (from, to) pairs.
  static GeneratorMatrix from_arcs(int dimension, std::vector<Arc> arcs);

 private:
  int dim_ = 0;
  std::vector<Arc> arcs_;    // sorted by (from, to), unique
  std::vector<double> diag_;
};

/// Generator of the decomposed subsystem SS(product) under the given
/// strategy, over SubsystemSpace(params, product). Encodes: Poisson arrivals
/// with loss at full queues, state-independent setups with idle cycling,
/// exhaustive station-1 service feeding the tracked station-2 queue (loss
/// when that queue is full), and station-2 service of the tracked product
/// gated on phase U_i (SP) or U_i' (OP).
GeneratorMatrix build_subsystem_generator(const NetworkParams& params,
                                          Strategy strategy, int product);

/// Generator of the undecomposed chain over FullSpace(params); both
/// station-2 queues are tracked and served per the strategy gating. Refuses
/// state spaces larger than max_states.
GeneratorMatrix build_full_generator(const NetworkParams& params,
                                     Strategy strategy,
                                     std::int64_t max_states = 2'000'000);

}  // namespace polling

#endif
