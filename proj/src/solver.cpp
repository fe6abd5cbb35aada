#include "polling/solver.hpp"

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace polling {

namespace {

// Iterative Tarjan SCC over the arc adjacency (recursion-free: state spaces
// can run to hundreds of thousands of states).
std::vector<int> scc_labels(const GeneratorMatrix& q, int& scc_count) {
  const int n = q.dimension();
  std::vector<int> head(n + 1, 0), adj(q.arcs().size());
  for (const Arc& a : q.arcs()) ++head[a.from + 1];
  std::partial_sum(head.begin(), head.end(), head.begin());
  {
    std::vector<int> cursor(head.begin(), head.end() - 1);
    for (const Arc& a : q.arcs()) adj[cursor[a.from]++] = a.to;
  }

  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack, call_node, call_edge;
  int next_index = 0;
  scc_count = 0;

  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call_node.push_back(root);
    call_edge.push_back(head[root]);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call_node.empty()) {
      int v = call_node.back();
      int& e = call_edge.back();
      if (e < head[v + 1]) {
        int w = adj[e++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call_node.push_back(w);
          call_edge.push_back(head[w]);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        if (low[v] == index[v]) {
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = scc_count;
          } while (w != v);
          ++scc_count;
        }
        call_node.pop_back();
        call_edge.pop_back();
        if (!call_node.empty())
          low[call_node.back()] = std::min(low[call_node.back()], low[v]);
      }
    }
  }
  return comp;
}

// Clamp tiny negative round-off, renormalize to sum 1.
void clamp_and_normalize(std::vector<double>& pi) {
  for (double& p : pi) {
    if (p < 0.0) {
      if (p < -1e-14)
        throw SingularSystem("solution has negative probability beyond round-off: " +
                             std::to_string(p));
      p = 0.0;
    }
  }
  double sum = std::accumulate(pi.begin(), pi.end(), 0.0);
  if (!(sum > 0.0)) throw SingularSystem("solution sums to zero");
  for (double& p : pi) p /= sum;
}

std::vector<double> solve_direct(const GeneratorMatrix& q) {
  const int n = q.dimension();
  // Transposed system Q^T x = 0 with the last equation replaced by sum = 1.
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(q.arcs().size() + 2 * n);
  for (const Arc& a : q.arcs())
    if (a.to != n - 1) trip.emplace_back(a.to, a.from, a.rate);
  for (int i = 0; i < n - 1; ++i) trip.emplace_back(i, i, q.diagonal(i));
  for (int j = 0; j < n; ++j) trip.emplace_back(n - 1, j, 1.0);

  Eigen::SparseMatrix<double> a(n, n);
  a.setFromTriplets(trip.begin(), trip.end());
  a.makeCompressed();

  Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
  lu.analyzePattern(a);
  lu.factorize(a);
  if (lu.info() != Eigen::Success)
    throw SingularSystem("sparse LU factorization failed");

  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
  b[n - 1] = 1.0;
  Eigen::VectorXd x = lu.solve(b);
  if (lu.info() != Eigen::Success) throw SingularSystem("sparse LU solve failed");
  return std::vector<double>(x.data(), x.data() + n);
}

// Grassmann-Taksar-Heyman elimination: censors states n-1..1 one by one,
// then unwinds. Only additions, multiplications, and divisions of
// nonnegative quantities, so stiff rate ratios cause no cancellation.
// Runs on the (closed) recurrent class only; transient states carry
// stationary probability zero and would break the elimination order.
std::vector<double> solve_gth(const GeneratorMatrix& q,
                              const std::vector<int>& recurrent_states) {
  const int n = static_cast<int>(recurrent_states.size());
  std::vector<int> position(q.dimension(), -1);
  for (int k = 0; k < n; ++k) position[recurrent_states[k]] = k;

  std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
  for (const Arc& arc : q.arcs()) {
    int from = position[arc.from];
    if (from < 0) continue;  // transient source
    int to = position[arc.to];
    // a recurrent class is closed: arcs out of it cannot exist
    a[static_cast<size_t>(from) * n + to] = arc.rate;
  }

  std::vector<double> total(n, 0.0);
  for (int k = n - 1; k >= 1; --k) {
    double* row_k = &a[static_cast<size_t>(k) * n];
    double s = std::accumulate(row_k, row_k + k, 0.0);
    if (!(s > 0.0)) throw SingularSystem("GTH: state with no transition to lower states");
    total[k] = s;
    for (int i = 0; i < k; ++i) {
      double rate_ik = a[static_cast<size_t>(i) * n + k];
      if (rate_ik == 0.0) continue;
      double f = rate_ik / s;
      double* row_i = &a[static_cast<size_t>(i) * n];
      for (int j = 0; j < k; ++j) {
        if (j == i) continue;
        row_i[j] += f * row_k[j];
      }
    }
  }

  std::vector<double> pi(n, 0.0);
  pi[0] = 1.0;
  for (int k = 1; k < n; ++k) {
    double inflow = 0.0;
    for (int i = 0; i < k; ++i) inflow += pi[i] * a[static_cast<size_t>(i) * n + k];
    pi[k] = inflow / total[k];
  }
  double sum = std::accumulate(pi.begin(), pi.end(), 0.0);
  std::vector<double> full(q.dimension(), 0.0);
  for (int k = 0; k < n; ++k) full[recurrent_states[k]] = pi[k] / sum;
  return full;
}

}  // namespace

IrreducibilityReport check_irreducible(const GeneratorMatrix& q) {
  IrreducibilityReport rep;
  std::vector<int> comp = scc_labels(q, rep.scc_count);
  std::vector<bool> leaves(rep.scc_count, false);
  for (const Arc& a : q.arcs())
    if (comp[a.from] != comp[a.to]) leaves[comp[a.from]] = true;
  rep.recurrent_count = 0;
  for (bool l : leaves)
    if (!l) ++rep.recurrent_count;
  rep.irreducible = rep.scc_count == 1;
  return rep;
}

double stationary_residual(const GeneratorMatrix& q, const std::vector<double>& pi) {
  if (static_cast<int>(pi.size()) != q.dimension())
    throw std::invalid_argument("distribution dimension does not match generator");
  std::vector<double> flow(pi.size(), 0.0);
  for (int i = 0; i < q.dimension(); ++i) flow[i] = pi[i] * q.diagonal(i);
  for (const Arc& a : q.arcs()) flow[a.to] += pi[a.from] * a.rate;
  double worst = 0.0;
  for (double f : flow) worst = std::max(worst, std::fabs(f));
  return worst;
}

StationaryDistribution solve_stationary(const GeneratorMatrix& q,
                                        const SolveOptions& options) {
  const int n = q.dimension();
  if (n == 0) throw std::invalid_argument("empty generator");
  if (n > options.max_states)
    throw DimensionTooLarge("state space of " + std::to_string(n) +
                            " exceeds cap of " + std::to_string(options.max_states));

  int scc_count = 0;
  std::vector<int> comp = scc_labels(q, scc_count);
  std::vector<bool> has_exit(scc_count, false);
  for (const Arc& a : q.arcs())
    if (comp[a.from] != comp[a.to]) has_exit[comp[a.from]] = true;
  int recurrent_count = 0, recurrent_comp = -1;
  for (int c = 0; c < scc_count; ++c)
    if (!has_exit[c]) {
      ++recurrent_count;
      recurrent_comp = c;
    }
  if (recurrent_count != 1)
    throw ReducibleChain("generator has " + std::to_string(recurrent_count) +
                         " recurrent classes");
  std::vector<int> recurrent_states;
  for (int i = 0; i < n; ++i)
    if (comp[i] == recurrent_comp) recurrent_states.push_back(i);

  auto finish = [&](std::vector<double> pi, SolverMethod method) {
    // Transient states carry exactly zero stationary probability; wipe the
    // round-off the direct solve leaves on them.
    if (static_cast<int>(recurrent_states.size()) != n)
      for (int i = 0; i < n; ++i)
        if (comp[i] != recurrent_comp) pi[i] = 0.0;
    clamp_and_normalize(pi);
    StationaryDistribution dist;
    dist.residual = stationary_residual(q, pi);
    dist.probabilities = std::move(pi);
    dist.solver_used = method;
    return dist;
  };

  bool gth_possible = options.allow_gth_fallback && n <= options.gth_max_states;
  if (!options.force_gth) {
    try {
      StationaryDistribution dist = finish(solve_direct(q), SolverMethod::DirectReplacedRow);
      if (dist.residual <= options.tolerance) return dist;
      if (!gth_possible) return dist;  // best effort; caller sees the residual
    } catch (const SingularSystem&) {
      if (!gth_possible) throw;
    }
  } else if (!gth_possible) {
    throw SingularSystem("GTH forced but dimension exceeds gth_max_states");
  }
  return finish(solve_gth(q, recurrent_states), SolverMethod::Gth);
}

}  // namespace polling
