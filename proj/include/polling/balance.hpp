#ifndef POLLING_BALANCE_HPP
#define POLLING_BALANCE_HPP

#include "polling/solver.hpp"
#include "polling/state_space.hpp"

namespace polling {

/// Direct evaluation of the global balance equations of subsystem
/// SS(product) at every state, returning the maximum absolute violation
/// |outflow - inflow|. The equations are coded term by term per phase
/// family (with boundary-corrected out-rates and the full-buffer loss
/// inflows), independently of the transition-table generator builder, so a
/// near-zero residual on a solved distribution cross-checks the two
/// transcriptions against each other.
double residual_against_balance_equations(const NetworkParams& params,
                                          Strategy strategy, int product,
                                          const StationaryDistribution& dist);

}  // namespace polling

#endif
