#include "polling/tables.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace polling {

namespace {

NetworkParams rates(double mu11, double mu21, double mu12, double mu22) {
  NetworkParams p;
  p.lambda1 = p.lambda2 = 1.0;
  p.mu11 = mu11;
  p.mu21 = mu21;
  p.mu12 = mu12;
  p.mu22 = mu22;
  p.mus1 = p.mus2 = 5.0;
  p.n1 = p.n2 = 3;
  return p;
}

struct Row3 { int n; double a, b, c; };
struct Row4 { int n; double a, b, c, d; };

void push3(std::vector<ReferenceCell>& cells, Strategy s, const Row3& r,
           const char* c1, const char* c2, const char* c3) {
  cells.push_back({r.n, s, c1, r.a, false});
  cells.push_back({r.n, s, c2, r.b, false});
  cells.push_back({r.n, s, c3, r.c, false});
}

void push4(std::vector<ReferenceCell>& cells, Strategy s, const Row4& r,
           const char* c1, const char* c2, const char* c3, const char* c4) {
  cells.push_back({r.n, s, c1, r.a, false});
  cells.push_back({r.n, s, c2, r.b, false});
  cells.push_back({r.n, s, c3, r.c, false});
  cells.push_back({r.n, s, c4, r.d, false});
}

void flag_misprint(std::vector<ReferenceCell>& cells, int n, Strategy s,
                   const std::string& column) {
  for (ReferenceCell& c : cells)
    if (c.n == n && c.strategy == s && c.column == column) c.misprint = true;
}

std::vector<ReferenceScenario> build_scenarios() {
  std::vector<ReferenceScenario> all;

  {  // Symmetric products and stations; columns TH_i1, TH_i2, W_i.
    ReferenceScenario t2a{2, Panel::Top, "symmetric, mu = 4.00 (rho 0.50)",
                          rates(4, 4, 4, 4), {}};
    const Row3 sp[] = {{3, 0.94, 0.70, 3.85}, {6, 1.00, 0.85, 5.31},
                       {9, 1.00, 0.90, 6.84}, {12, 1.00, 0.92, 8.35},
                       {15, 1.00, 0.94, 9.86}};
    const Row3 op[] = {{3, 0.94, 0.54, 4.02}, {6, 1.00, 0.71, 5.58},
                       {9, 1.00, 0.80, 7.08}, {12, 1.00, 0.84, 8.57},
                       {15, 1.00, 0.87, 10.07}};
    for (const Row3& r : sp) push3(t2a.cells, Strategy::SP, r, "th_i1", "th_i2", "w_i");
    for (const Row3& r : op) push3(t2a.cells, Strategy::OP, r, "th_i1", "th_i2", "w_i");
    all.push_back(std::move(t2a));

    ReferenceScenario t2b{2, Panel::Bottom, "symmetric, mu = 2.50 (rho 0.80)",
                          rates(2.5, 2.5, 2.5, 2.5), {}};
    const Row3 spb[] = {{3, 0.85, 0.64, 4.61}, {6, 0.95, 0.81, 6.43},
                        {9, 0.98, 0.88, 8.18}, {12, 0.99, 0.91, 9.85},
                        {15, 1.00, 0.93, 11.45}};
    const Row3 opb[] = {{3, 0.85, 0.47, 4.97}, {6, 0.95, 0.61, 7.23},
                        {9, 0.98, 0.70, 9.16}, {12, 0.99, 0.77, 10.91},
                        {15, 1.00, 0.81, 12.55}};
    for (const Row3& r : spb) push3(t2b.cells, Strategy::SP, r, "th_i1", "th_i2", "w_i");
    for (const Row3& r : opb) push3(t2b.cells, Strategy::OP, r, "th_i1", "th_i2", "w_i");
    all.push_back(std::move(t2b));
  }

  {  // Station asymmetry; columns TH_i2, W_i1, W_i2, W_i.
    ReferenceScenario t3a{3, Panel::Top, "upstream bottleneck, mu_i1 = 2.50, mu_i2 = 4.00",
                          rates(2.5, 2.5, 4, 4), {}};
    const Row4 sp[] = {{3, 0.76, 1.34, 2.15, 3.49}, {6, 0.93, 1.88, 2.32, 4.20},
                       {9, 0.97, 2.21, 2.40, 4.61}, {12, 0.99, 2.42, 2.43, 4.84},
                       {15, 1.00, 2.54, 2.43, 4.96}};
    const Row4 op[] = {{3, 0.53, 1.34, 2.63, 3.97}, {6, 0.70, 1.88, 3.65, 5.54},
                       {9, 0.80, 2.21, 4.43, 6.64}, {12, 0.87, 2.42, 5.03, 7.44},
                       {15, 0.91, 2.54, 5.48, 8.02}};
    for (const Row4& r : sp)
      push4(t3a.cells, Strategy::SP, r, "th_i2", "w_i1", "w_i2", "w_i");
    for (const Row4& r : op)
      push4(t3a.cells, Strategy::OP, r, "th_i2", "w_i1", "w_i2", "w_i");
    all.push_back(std::move(t3a));

    ReferenceScenario t3b{3, Panel::Bottom, "downstream bottleneck, mu_i1 = 4.00, mu_i2 = 2.50",
                          rates(4, 4, 2.5, 2.5), {}};
    const Row4 spb[] = {{3, 0.52, 0.80, 4.84, 5.64}, {6, 0.61, 0.88, 8.48, 9.36},
                        {9, 0.62, 0.90, 12.86, 13.76}, {12, 0.62, 0.90, 17.51, 18.41},
                        {15, 0.62, 0.90, 22.27, 22.27}};
    const Row4 opb[] = {{3, 0.52, 0.80, 3.97, 4.77}, {6, 0.60, 0.88, 7.26, 8.14},
                        {9, 0.61, 0.90, 11.11, 12.01}, {12, 0.62, 0.90, 15.30, 16.20},
                        {15, 0.62, 0.90, 19.72, 20.62}};
    for (const Row4& r : spb)
      push4(t3b.cells, Strategy::SP, r, "th_i2", "w_i1", "w_i2", "w_i");
    for (const Row4& r : opb)
      push4(t3b.cells, Strategy::OP, r, "th_i2", "w_i1", "w_i2", "w_i");
    // Published W_i duplicates W_i2 instead of the W_i1 + W_i2 sum.
    flag_misprint(t3b.cells, 15, Strategy::SP, "w_i");
    all.push_back(std::move(t3b));
  }

  {  // Product asymmetry; columns TH_12, TH_22, W_1, W_2.
    ReferenceScenario t4a{4, Panel::Top, "product asymmetry, mu_1j = 2.50, mu_2j = 3.13",
                          rates(2.5, 3.13, 2.5, 3.13), {}};
    const Row4 sp[] = {{3, 0.66, 0.65, 4.31, 4.44}, {6, 0.84, 0.82, 5.93, 6.14},
                       {9, 0.89, 0.89, 7.55, 7.76}, {12, 0.92, 0.92, 9.12, 9.32},
                       {15, 0.94, 0.94, 10.66, 10.85}};
    const Row4 op[] = {{3, 0.44, 0.52, 5.36, 4.15}, {6, 0.59, 0.70, 7.86, 5.76},
                       {9, 0.67, 0.80, 10.23, 7.01}, {12, 0.71, 0.87, 12.67, 6.15},
                       {15, 0.74, 0.91, 15.24, 8.88}};
    for (const Row4& r : sp)
      push4(t4a.cells, Strategy::SP, r, "th_12", "th_22", "w_1", "w_2");
    for (const Row4& r : op)
      push4(t4a.cells, Strategy::OP, r, "th_12", "th_22", "w_1", "w_2");
    // Published 6.15 breaks the otherwise monotone column (7.01 -> 8.88).
    flag_misprint(t4a.cells, 12, Strategy::OP, "w_2");
    all.push_back(std::move(t4a));

    ReferenceScenario t4b{4, Panel::Bottom, "product asymmetry, mu_1j = 2.50, mu_2j = 6.25",
                          rates(2.5, 6.25, 2.5, 6.25), {}};
    const Row4 spb[] = {{3, 0.69, 0.68, 3.94, 4.16}, {6, 0.85, 0.83, 5.44, 5.72},
                        {9, 0.90, 0.89, 7.00, 7.22}, {12, 0.92, 0.92, 8.53, 8.72},
                        {15, 0.94, 0.94, 10.05, 10.22}};
    const Row4 opb[] = {{3, 0.31, 0.65, 8.47, 2.83}, {6, 0.38, 0.85, 14.31, 3.50},
                        {9, 0.39, 0.94, 20.98, 3.85}, {12, 0.40, 0.98, 28.14, 4.03},
                        {15, 0.40, 0.99, 35.52, 4.12}};
    for (const Row4& r : spb)
      push4(t4b.cells, Strategy::SP, r, "th_12", "th_22", "w_1", "w_2");
    for (const Row4& r : opb)
      push4(t4b.cells, Strategy::OP, r, "th_12", "th_22", "w_1", "w_2");
    all.push_back(std::move(t4b));
  }

  return all;
}

const std::vector<ReferenceScenario>& scenarios() {
  static const std::vector<ReferenceScenario> all = build_scenarios();
  return all;
}

double opt_value(const std::optional<double>& v) {
  return v ? *v : std::numeric_limits<double>::quiet_NaN();
}

// Value of a named reference column in a computed row. Columns written with
// the generic product subscript i refer to product 1 (the panels using them
// are product-symmetric).
double column_value(const TableRow& row, const std::string& column) {
  if (column == "th_i1") return row.th11;
  if (column == "th_i2") return row.th12;
  if (column == "w_i") return opt_value(row.w1);
  if (column == "w_i1") return opt_value(row.w11);
  if (column == "w_i2") return opt_value(row.w12);
  if (column == "th_12") return row.th12;
  if (column == "th_22") return row.th22;
  if (column == "w_1") return opt_value(row.w1);
  if (column == "w_2") return opt_value(row.w2);
  throw std::logic_error("unknown reference column: " + column);
}

}  // namespace

const ReferenceScenario& reference_scenario(int table, Panel panel) {
  for (const ReferenceScenario& s : scenarios())
    if (s.table == table && s.panel == panel) return s;
  throw std::invalid_argument("no bundled scenario with id " + std::to_string(table));
}

const std::vector<int>& reference_buffer_sizes() {
  static const std::vector<int> sizes = {3, 6, 9, 12, 15};
  return sizes;
}

TableReproduction reproduce_table(int table, Panel panel, const SolveOptions& options) {
  const ReferenceScenario& scenario = reference_scenario(table, panel);
  TableReproduction repro;
  repro.table = table;
  repro.panel = panel;

  std::map<std::pair<int, int>, TableRow> computed;  // (n, strategy) -> row
  for (int n : reference_buffer_sizes()) {
    NetworkParams p = scenario.params_for(n);
    for (Strategy s : {Strategy::SP, Strategy::OP}) {
      NetworkReport net = analyze_network(p, s, options);
      TableRow row = make_row(n, n, s, net);
      computed[{n, static_cast<int>(s)}] = row;
      repro.rows.push_back(row);
    }
  }

  for (const ReferenceCell& cell : scenario.cells) {
    const TableRow& row = computed.at({cell.n, static_cast<int>(cell.strategy)});
    CellDiff diff;
    diff.reference = cell;
    diff.computed = column_value(row, cell.column);
    diff.abs_dev = std::fabs(diff.computed - cell.value);
    diff.corrected = diff.computed;
    if (!cell.misprint) repro.max_abs_dev = std::max(repro.max_abs_dev, diff.abs_dev);
    repro.diffs.push_back(diff);
  }
  return repro;
}

SweepResult sweep_buffers(const ExperimentConfig& config, const SolveOptions& options) {
  SweepResult result;
  const auto sweep = config.effective_sweep();
  const auto strategies = config.strategies();

  std::map<int, std::vector<const TableRow*>> per_strategy;
  for (auto [n1, n2] : sweep) {
    NetworkParams p = config.params;
    p.n1 = n1;
    p.n2 = n2;
    for (Strategy s : strategies) {
      NetworkReport net = analyze_network(p, s, options);
      result.rows.push_back(make_row(n1, n2, s, net));
    }
  }
  for (const TableRow& row : result.rows)
    per_strategy[static_cast<int>(row.strategy)].push_back(&row);

  for (Strategy s : strategies) {
    const auto& rows = per_strategy[static_cast<int>(s)];
    for (int product = 1; product <= 2; ++product) {
      SaturationReport rep;
      rep.strategy = s;
      rep.product = product;
      double lambda = config.params.lambda(product);
      for (size_t k = 1; k < rows.size(); ++k) {
        double prev = product == 1 ? rows[k - 1]->th12 : rows[k - 1]->th22;
        double cur = product == 1 ? rows[k]->th12 : rows[k]->th22;
        if (cur - prev < 1e-3 && lambda - cur > 0.05) {
          rep.saturated = true;
          rep.at_n = rows[k]->n1;
          rep.value = cur;
          break;
        }
      }
      result.saturation.push_back(rep);
    }
  }
  return result;
}

std::string format_reproduction(const TableReproduction& repro) {
  std::ostringstream os;
  char buf[160];
  os << "scenario " << repro.table << " (" << to_string(repro.panel) << "): "
     << reference_scenario(repro.table, repro.panel).description << "\n";
  os << csv_header() << "\n";
  for (const TableRow& r : repro.rows) os << csv_line(r) << "\n";
  os << "reference diff (computed vs published, display-rounded):\n";
  for (const CellDiff& d : repro.diffs) {
    std::snprintf(buf, sizeof(buf), "  N=%-2d %s %-6s published %6.2f computed %6.2f dev %5.3f%s\n",
                  d.reference.n, to_string(d.reference.strategy),
                  d.reference.column.c_str(), d.reference.value, d.computed,
                  d.abs_dev, d.reference.misprint ? "  [flagged misprint, excluded]" : "");
    os << buf;
  }
  std::snprintf(buf, sizeof(buf), "max deviation over checked cells: %.4f\n",
                repro.max_abs_dev);
  os << buf;
  return os.str();
}

}  // namespace polling
