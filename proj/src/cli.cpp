#include "polling/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "polling/balance.hpp"
#include "polling/config.hpp"
#include "polling/csv.hpp"
#include "polling/simulator.hpp"
#include "polling/tables.hpp"

namespace polling {

namespace {

struct CliOptions {
  std::string config_path;
  int table = 0;
  std::string panel = "top";
  std::string strategy = "both";
  std::string out_path;
  bool strict = false;
  double tol = 0.02;
  std::uint64_t seed = 12345;
  int reps = 5;
  double horizon = 1e5;
  int product = 1;
  bool full_chain = false;
};

std::optional<Strategy> strategy_of(const std::string& s) {
  if (s == "sp") return Strategy::SP;
  if (s == "op") return Strategy::OP;
  return std::nullopt;  // "both"
}

SolveOptions solve_options_from_env() {
  SolveOptions opts;
  if (const char* cap = std::getenv("POLLING_MAX_STATES")) {
    char* end = nullptr;
    long long v = std::strtoll(cap, &end, 10);
    if (end && *end == '\0' && v > 0) opts.max_states = v;
  }
  return opts;
}

ExperimentConfig load_config(const CliOptions& cli) {
  if (!cli.config_path.empty()) {
    ExperimentConfig cfg = parse_config_file(cli.config_path);
    if (cli.strategy != "both" || !cfg.strategy) cfg.strategy = strategy_of(cli.strategy);
    cfg.out_path = cli.out_path;
    return cfg;
  }
  if (cli.table != 0) {
    const ReferenceScenario& sc =
        reference_scenario(cli.table, cli.panel == "bottom" ? Panel::Bottom : Panel::Top);
    ExperimentConfig cfg;
    cfg.params = sc.params_for(reference_buffer_sizes().front());
    for (int n : reference_buffer_sizes()) cfg.buffer_sweep.push_back({n, n});
    cfg.strategy = strategy_of(cli.strategy);
    cfg.out_path = cli.out_path;
    return cfg;
  }
  throw ConfigError("either --config or --table is required");
}

int cmd_solve(const CliOptions& cli, std::ostream& out) {
  SolveOptions opts = solve_options_from_env();
  std::vector<TableRow> rows;
  if (cli.config_path.empty() && cli.table != 0 && cli.strategy == "both") {
    TableReproduction repro = reproduce_table(
        cli.table, cli.panel == "bottom" ? Panel::Bottom : Panel::Top, opts);
    rows = repro.rows;
    out << format_reproduction(repro);
  } else {
    ExperimentConfig cfg = load_config(cli);
    SweepResult sweep = sweep_buffers(cfg, opts);
    rows = sweep.rows;
    for (const TableRow& r : rows) out << csv_line(r) << "\n";
  }
  if (!cli.out_path.empty()) {
    write_csv_file(cli.out_path, rows);
    out << "wrote " << rows.size() << " rows to " << cli.out_path << "\n";
  }
  return 0;
}

int cmd_sweep(const CliOptions& cli, std::ostream& out) {
  ExperimentConfig cfg = load_config(cli);
  SweepResult sweep = sweep_buffers(cfg, solve_options_from_env());
  for (const SaturationReport& s : sweep.saturation) {
    out << "strategy " << to_string(s.strategy) << " product " << s.product << ": ";
    if (s.saturated)
      out << "station-2 throughput saturates near " << s.value << " (first flagged at N="
          << s.at_n << ", arrival rate " << cfg.params.lambda(s.product) << ")\n";
    else
      out << "no saturation detected across the sweep\n";
  }
  if (!cli.out_path.empty()) {
    write_csv_file(cli.out_path, sweep.rows);
    out << "wrote " << sweep.rows.size() << " rows to " << cli.out_path << "\n";
  }
  return 0;
}

int cmd_simulate(const CliOptions& cli, std::ostream& out) {
  ExperimentConfig cfg = load_config(cli);
  std::vector<TableRow> rows;
  char buf[200];
  for (auto [n1, n2] : cfg.effective_sweep()) {
    NetworkParams p = cfg.params;
    p.n1 = n1;
    p.n2 = n2;
    for (Strategy s : cfg.strategies()) {
      SimConfig sim;
      sim.params = p;
      sim.strategy = s;
      sim.seed = cli.seed;
      sim.replications = cli.reps;
      sim.horizon = cli.horizon;
      SimEstimate est = run_simulation(sim);
      std::snprintf(buf, sizeof(buf),
                    "%s N=(%d,%d): th12 %.4f (+/-%.4f)  th22 %.4f (+/-%.4f)  "
                    "w1 %.4f (+/-%.4f)  w2 %.4f (+/-%.4f)\n",
                    to_string(s), n1, n2, est.th12.mean, est.th12.half_width,
                    est.th22.mean, est.th22.half_width, est.w1.mean,
                    est.w1.half_width, est.w2.mean, est.w2.half_width);
      out << buf;
      TableRow row;
      row.strategy = s;
      row.n1 = n1;
      row.n2 = n2;
      row.th11 = est.th11.mean;
      row.th21 = est.th21.mean;
      row.th12 = est.th12.mean;
      row.th22 = est.th22.mean;
      row.l11 = est.len11.mean;
      row.l21 = est.len21.mean;
      row.l12 = est.len12.mean;
      row.l22 = est.len22.mean;
      row.w11 = est.w11.mean;
      row.w21 = est.w21.mean;
      row.w12 = est.w12.mean;
      row.w22 = est.w22.mean;
      row.w1 = est.w1.mean;
      row.w2 = est.w2.mean;
      row.wip = est.len11.mean + est.len21.mean + est.len12.mean + est.len22.mean;
      rows.push_back(row);
    }
  }
  if (!cli.out_path.empty()) {
    write_csv_file(cli.out_path, rows);
    out << "wrote " << rows.size() << " rows to " << cli.out_path << "\n";
  }
  return 0;
}

int cmd_validate(const CliOptions& cli, std::ostream& out) {
  SolveOptions opts = solve_options_from_env();
  std::vector<Panel> panels;
  if (cli.panel == "both") panels = {Panel::Top, Panel::Bottom};
  else panels = {cli.panel == "bottom" ? Panel::Bottom : Panel::Top};

  double worst = 0.0;
  for (Panel panel : panels) {
    TableReproduction repro = reproduce_table(cli.table, panel, opts);
    out << format_reproduction(repro);
    worst = std::max(worst, repro.max_abs_dev);
  }
  out << "overall max deviation: " << worst << " (tolerance " << cli.tol << ")\n";
  if (cli.strict && worst > cli.tol) return 4;
  return 0;
}

int cmd_dump_generator(const CliOptions& cli, std::ostream& out) {
  ExperimentConfig cfg = load_config(cli);
  Strategy s = cfg.strategies().front();
  SolveOptions opts = solve_options_from_env();
  GeneratorMatrix q = cli.full_chain
                          ? build_full_generator(cfg.params, s, opts.max_states)
                          : build_subsystem_generator(cfg.params, s, cli.product);
  if (!cli.out_path.empty()) {
    std::ofstream file(cli.out_path, std::ios::binary);
    if (!file) throw ConfigError("cannot open output file: " + cli.out_path);
    q.dump_edge_list(file);
  } else {
    q.dump_edge_list(out);
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analyzer for two-product tandem polling queues with setups"};
  app.require_subcommand(1);
  CliOptions cli;

  auto add_common = [&](CLI::App* cmd, bool with_sim) {
    cmd->add_option("--config", cli.config_path, "experiment config file");
    cmd->add_option("--table", cli.table, "bundled scenario id")
        ->check(CLI::IsMember({2, 3, 4}));
    cmd->add_option("--panel", cli.panel, "scenario panel")
        ->check(CLI::IsMember({"top", "bottom", "both"}));
    cmd->add_option("--strategy", cli.strategy, "coordination strategy")
        ->check(CLI::IsMember({"sp", "op", "both"}));
    cmd->add_option("--out", cli.out_path, "CSV output path");
    if (with_sim) {
      cmd->add_option("--seed", cli.seed, "base RNG seed");
      cmd->add_option("--reps", cli.reps, "replications")->check(CLI::PositiveNumber);
      cmd->add_option("--horizon", cli.horizon, "simulated time per replication")
          ->check(CLI::PositiveNumber);
    }
  };

  CLI::App* solve = app.add_subcommand("solve", "solve and emit measures as CSV");
  add_common(solve, false);
  CLI::App* simulate = app.add_subcommand("simulate", "discrete-event simulation");
  add_common(simulate, true);
  CLI::App* sweep = app.add_subcommand("sweep", "buffer sweep with saturation report");
  add_common(sweep, false);
  CLI::App* validate =
      app.add_subcommand("validate", "diff solved measures against bundled references");
  add_common(validate, false);
  validate->add_flag("--strict", cli.strict, "exit 4 when any cell exceeds --tol");
  validate->add_option("--tol", cli.tol, "per-cell tolerance");
  CLI::App* dump = app.add_subcommand("dump-generator", "write generator edge list");
  add_common(dump, false);
  dump->add_option("--product", cli.product, "tracked product for the subsystem")
      ->check(CLI::IsMember({1, 2}));
  dump->add_flag("--full", cli.full_chain, "dump the undecomposed chain");

  // validate defaults to checking both panels unless one is named
  bool panel_given = false;
  validate->get_option("--panel")->each([&](const std::string&) { panel_given = true; });

  try {
    app.parse(argc, argv);
    if (validate->parsed() && !panel_given) cli.panel = "both";

    if (solve->parsed()) return cmd_solve(cli, out);
    if (simulate->parsed()) return cmd_simulate(cli, out);
    if (sweep->parsed()) return cmd_sweep(cli, out);
    if (validate->parsed()) {
      if (cli.table == 0) throw ConfigError("validate requires --table");
      return cmd_validate(cli, out);
    }
    if (dump->parsed()) return cmd_dump_generator(cli, out);
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace polling
