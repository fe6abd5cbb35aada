#ifndef POLLING_SOLVER_HPP
#define POLLING_SOLVER_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "polling/generator.hpp"

namespace polling {

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// More than one recurrent class: the stationary distribution is not unique.
struct ReducibleChain : SolverError {
  using SolverError::SolverError;
};
struct DimensionTooLarge : SolverError {
  using SolverError::SolverError;
};
/// Direct solve failed (or exceeded tolerance) and GTH was unavailable.
struct SingularSystem : SolverError {
  using SolverError::SolverError;
};

enum class SolverMethod {
  DirectReplacedRow,  ///< sparse LU on the transposed system, one row = normalization
  Gth,                ///< subtraction-free elimination; no cancellation for stiff rates
};

inline const char* to_string(SolverMethod m) {
  return m == SolverMethod::DirectReplacedRow ? "direct-replaced-row" : "GTH";
}

struct SolveOptions {
  double tolerance = 1e-10;          ///< required max |pi Q|
  std::int64_t max_states = 2'000'000;
  bool allow_gth_fallback = true;
  int gth_max_states = 6000;         ///< GTH is dense O(n^3); cap its use
  bool force_gth = false;            ///< skip the direct method entirely
};

struct StationaryDistribution {
  std::vector<double> probabilities;
  double residual = 0.0;  ///< achieved max |pi Q|
  SolverMethod solver_used = SolverMethod::DirectReplacedRow;

  int size() const { return static_cast<int>(probabilities.size()); }
  double operator[](int i) const { return probabilities[i]; }
};

struct IrreducibilityReport {
  bool irreducible = false;
  int scc_count = 0;        ///< strongly connected components of the arc graph
  int recurrent_count = 0;  ///< components with no outgoing arc
};

/// Strongly-connected-component analysis of the off-diagonal pattern.
IrreducibilityReport check_irreducible(const GeneratorMatrix& q);

/// Stationary distribution of a finite CTMC generator: pi Q = 0, sum pi = 1.
/// Requires a unique recurrent class. Tiny negative round-off entries (>=
/// -1e-14) are clamped to zero and the vector renormalized.
StationaryDistribution solve_stationary(const GeneratorMatrix& q,
                                        const SolveOptions& options = {});

/// Max |pi Q| of an arbitrary probability vector against the generator.
double stationary_residual(const GeneratorMatrix& q, const std::vector<double>& pi);

}  // namespace polling

#endif
