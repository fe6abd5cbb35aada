#include "polling/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace polling {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

double parse_rate(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("invalid numeric value for " + key + ": '" + value + "'");
  }
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    int v = std::stoi(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("invalid integer value for " + key + ": '" + value + "'");
  }
}

std::pair<int, int> parse_sweep_entry(const std::string& entry) {
  auto colon = entry.find(':');
  if (colon == std::string::npos) {
    int n = parse_int("n_list", entry);
    return {n, n};
  }
  return {parse_int("n_list", entry.substr(0, colon)),
          parse_int("n_list", entry.substr(colon + 1))};
}

}  // namespace

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError("line " + std::to_string(lineno) + ": empty key or value");
    if (!kv.emplace(key, value).second)
      throw ConfigError("duplicate key: " + key);
  }

  auto take = [&](const char* key) -> std::optional<std::string> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    std::string v = it->second;
    kv.erase(it);
    return v;
  };
  auto require_rate = [&](const char* key, double& slot) {
    auto v = take(key);
    if (!v) throw ConfigError(std::string("missing required key: ") + key);
    slot = parse_rate(key, *v);
  };

  require_rate("lambda1", cfg.params.lambda1);
  require_rate("lambda2", cfg.params.lambda2);
  require_rate("mu11", cfg.params.mu11);
  require_rate("mu21", cfg.params.mu21);
  require_rate("mu12", cfg.params.mu12);
  require_rate("mu22", cfg.params.mu22);
  require_rate("mus1", cfg.params.mus1);
  require_rate("mus2", cfg.params.mus2);
  auto n1 = take("n1"), n2 = take("n2");
  if (!n1 || !n2) throw ConfigError("missing required key: n1 and n2");
  cfg.params.n1 = parse_int("n1", *n1);
  cfg.params.n2 = parse_int("n2", *n2);

  if (auto s = take("strategy")) {
    std::string v = *s;
    std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) {
      return std::tolower(c);
    });
    if (v == "sp") cfg.strategy = Strategy::SP;
    else if (v == "op") cfg.strategy = Strategy::OP;
    else if (v == "both") cfg.strategy.reset();
    else throw ConfigError("strategy must be sp, op, or both; got '" + *s + "'");
  }
  if (auto m = take("mode")) {
    if (*m == "solve") cfg.mode = RunMode::Solve;
    else if (*m == "simulate") cfg.mode = RunMode::Simulate;
    else if (*m == "both") cfg.mode = RunMode::Both;
    else throw ConfigError("mode must be solve, simulate, or both; got '" + *m + "'");
  }
  if (auto nl = take("n_list")) {
    std::stringstream ss(*nl);
    std::string entry;
    while (std::getline(ss, entry, ',')) {
      entry = trim(entry);
      if (entry.empty()) continue;
      cfg.buffer_sweep.push_back(parse_sweep_entry(entry));
    }
    if (cfg.buffer_sweep.empty()) throw ConfigError("n_list is empty");
  }

  if (!kv.empty()) throw ConfigError("unknown key: " + kv.begin()->first);

  try {
    cfg.params.validate();
    for (auto [a, b] : cfg.buffer_sweep) {
      NetworkParams probe = cfg.params;
      probe.n1 = a;
      probe.n2 = b;
      probe.validate();
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  return parse_config(in);
}

}  // namespace polling
