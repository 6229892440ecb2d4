// Copyright 2026 The diskbath Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <sstream>

#include <fmt/format.h>

#include "diskbath/errors.hpp"
#include "diskbath/io.hpp"

namespace diskbath::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value))
    throw ConfigError(key, fmt::format("{}: expected a finite number, got '{}'", key, text));
  return value;
}

std::uint64_t to_count(const std::string& key, const std::string& text) {
  std::uint64_t value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec == std::errc() && ptr == end) return value;
  // Also accept exact integers written like 1e6.
  const double d = to_double(key, text);
  if (d >= 0.0 && d < 1.8e19 && d == std::floor(d)) return static_cast<std::uint64_t>(d);
  throw ConfigError(key, fmt::format("{}: expected a non-negative integer, got '{}'", key, text));
}

std::optional<double> to_auto_double(const std::string& key, const std::string& text) {
  if (text == "auto") return std::nullopt;
  return to_double(key, text);
}

void require(bool ok, const std::string& key, const std::string& what) {
  if (!ok) throw ConfigError(key, fmt::format("{}: {}", key, what));
}

using Setter = std::function<void(RunConfig&, const std::string&)>;

struct KeySpec {
  std::string name;
  bool required;
  Setter set;
  std::function<std::string(const RunConfig&)> show;
};

std::string show_double(double x) { return io::format_double(x); }
std::string show_auto(const std::optional<double>& x) { return x ? show_double(*x) : "auto"; }
std::string show_grid(const std::vector<double>& g) {
  std::string out;
  for (std::size_t i = 0; i < g.size(); ++i) out += (i ? "," : "") + show_double(g[i]);
  return out;
}

#define DOUBLE_KEY(field, req) \
  KeySpec{#field, req, [](RunConfig& c, const std::string& v) { c.field = to_double(#field, v); }, \
          [](const RunConfig& c) { return show_double(c.field); }}
#define COUNT_KEY(field) \
  KeySpec{#field, false, [](RunConfig& c, const std::string& v) { c.field = to_count(#field, v); }, \
          [](const RunConfig& c) { return std::to_string(c.field); }}
#define AUTO_KEY(field) \
  KeySpec{#field, false, [](RunConfig& c, const std::string& v) { c.field = to_auto_double(#field, v); }, \
          [](const RunConfig& c) { return show_auto(c.field); }}
#define GRID_KEY(field) \
  KeySpec{#field, false, [](RunConfig& c, const std::string& v) { c.field = parse_grid(#field, v); }, \
          [](const RunConfig& c) { return show_grid(c.field); }}

int to_particle_count(const std::string& key, const std::string& v) {
  const std::uint64_t n = to_count(key, v);
  require(n <= 100000, key, "particle count is unreasonably large");
  return static_cast<int>(n);
}

const std::vector<KeySpec>& specs() {
  static const std::vector<KeySpec> table = {
      DOUBLE_KEY(R, true),
      DOUBLE_KEY(d, true),
      DOUBLE_KEY(beta_left, true),
      DOUBLE_KEY(beta_right, true),
      KeySpec{"k_left", true,
              [](RunConfig& c, const std::string& v) { c.k_left = to_particle_count("k_left", v); },
              [](const RunConfig& c) { return std::to_string(c.k_left); }},
      KeySpec{"k_right", true,
              [](RunConfig& c, const std::string& v) { c.k_right = to_particle_count("k_right", v); },
              [](const RunConfig& c) { return std::to_string(c.k_right); }},
      KeySpec{"seed", true,
              [](RunConfig& c, const std::string& v) { c.seed = to_count("seed", v); },
              [](const RunConfig& c) { return std::to_string(c.seed); }},
      AUTO_KEY(s_min),
      AUTO_KEY(s_max),
      DOUBLE_KEY(epsilon, false),
      AUTO_KEY(delay),
      COUNT_KEY(n_samples),
      DOUBLE_KEY(burn_in, false),
      AUTO_KEY(spacing),
      GRID_KEY(T_grid),
      DOUBLE_KEY(horizon, false),
      COUNT_KEY(replicas),
      KeySpec{"output", false, [](RunConfig& c, const std::string& v) { c.output = v; },
              [](const RunConfig& c) { return c.output; }},
      COUNT_KEY(max_events),
      COUNT_KEY(min_count),
      DOUBLE_KEY(c, false),
      AUTO_KEY(T0),
      AUTO_KEY(T_star),
      GRID_KEY(t_grid),
      COUNT_KEY(validate_samples),
  };
  return table;
}

#undef DOUBLE_KEY
#undef COUNT_KEY
#undef AUTO_KEY
#undef GRID_KEY

void validate(RunConfig& c) {
  try {
    (void)c.geometry();
  } catch (const DomainError& e) {
    throw ConfigError(c.R > 0.0 ? "d" : "R", e.what());
  }
  require(c.beta_left > 0.0, "beta_left", "must be positive");
  require(c.beta_right > 0.0, "beta_right", "must be positive");
  require(c.k_left + c.k_right >= 1, "k_left", "k_left + k_right must be at least 1");
  require(c.epsilon > 0.0 && c.epsilon < 1.0, "epsilon", "must lie in (0, 1)");
  require(!c.s_min || *c.s_min > 0.0, "s_min", "must be positive");
  try {
    (void)c.cset();
  } catch (const DomainError& e) {
    throw ConfigError("s_max", e.what());
  }
  require(!c.delay || *c.delay >= 0.0, "delay", "must be non-negative");
  require(c.n_samples >= 1, "n_samples", "must be at least 1");
  require(c.burn_in >= 0.0, "burn_in", "must be non-negative");
  require(!c.spacing || *c.spacing > 0.0, "spacing", "must be positive");
  require(c.horizon > 0.0, "horizon", "must be positive");
  require(c.replicas >= 1, "replicas", "must be at least 1");
  require(c.replicas <= c.n_samples, "replicas", "cannot exceed n_samples");
  require(!c.output.empty(), "output", "must name a file or '-'");
  require(c.max_events >= 1, "max_events", "must be at least 1");
  require(c.min_count >= 1, "min_count", "must be at least 1");
  require(c.c >= 0.0 && c.c <= 1.0, "c", "must lie in [0, 1]");
  require(!c.T0 || *c.T0 > 0.0, "T0", "must be positive");
  require(!c.T_star || *c.T_star > 0.0, "T_star", "must be positive");
  require(c.validate_samples >= 1000, "validate_samples", "must be at least 1000");
  for (std::size_t i = 0; i < c.T_grid.size(); ++i) {
    require(c.T_grid[i] > 0.0, "T_grid", "values must be positive");
    require(i == 0 || c.T_grid[i] > c.T_grid[i - 1], "T_grid", "values must increase");
  }
  for (std::size_t i = 0; i < c.t_grid.size(); ++i) {
    require(c.t_grid[i] >= 0.0, "t_grid", "values must be non-negative");
    require(i == 0 || c.t_grid[i] > c.t_grid[i - 1], "t_grid", "values must increase");
  }
}

}  // namespace

CSetParams RunConfig::cset() const {
  const CSetParams base = CSetParams::defaults_for(reservoirs());
  return {s_min.value_or(base.s_min()), s_max.value_or(base.s_max()), epsilon};
}

std::uint64_t RunConfig::fingerprint() const { return io::fnv1a(canonical); }

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> out;
    for (const auto& s : specs()) out.push_back(s.name);
    return out;
  }();
  return keys;
}

const std::vector<std::string>& required_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> out;
    for (const auto& s : specs())
      if (s.required) out.push_back(s.name);
    return out;
  }();
  return keys;
}

std::vector<double> parse_grid(const std::string& key, const std::string& text) {
  std::vector<double> out;
  const bool log = text.rfind("log:", 0) == 0;
  if (log || text.rfind("lin:", 0) == 0) {
    std::vector<std::string> parts;
    std::stringstream ss(text.substr(4));
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(trim(part));
    require(parts.size() == 3, key, "grid must read log:lo:hi:n or lin:lo:hi:n");
    const double lo = to_double(key, parts[0]);
    const double hi = to_double(key, parts[1]);
    const std::uint64_t n = to_count(key, parts[2]);
    require(n >= 2 && n <= 100000, key, "grid needs between 2 and 100000 points");
    require(hi > lo && (!log || lo > 0.0), key, "grid needs 0 < lo < hi");
    for (std::uint64_t i = 0; i < n; ++i) {
      const double f = static_cast<double>(i) / static_cast<double>(n - 1);
      out.push_back(log ? lo * std::pow(hi / lo, f) : lo + f * (hi - lo));
    }
    out.back() = hi;
    return out;
  }
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) out.push_back(to_double(key, trim(part)));
  require(!out.empty(), key, "grid is empty");
  return out;
}

KeyValues parse_key_values(const std::string& text, const std::string& source) {
  KeyValues out;
  std::stringstream ss(text);
  int line_no = 0;
  for (std::string line; std::getline(ss, line);) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("", fmt::format("{}:{}: expected key=value, got '{}'", source, line_no, line));
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto& keys = known_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw ConfigError(key, fmt::format("{}:{}: unknown key '{}'", source, line_no, key));
    if (!out.emplace(key, value).second)
      throw ConfigError(key, fmt::format("{}:{}: key '{}' given twice", source, line_no, key));
  }
  return out;
}

RunConfig resolve_config(const KeyValues& file, const KeyValues& flags) {
  KeyValues merged = file;
  for (const auto& [k, v] : flags) merged[k] = v;
  RunConfig cfg;
  cfg.T_grid = parse_grid("T_grid", "log:1:1000:37");
  cfg.t_grid = parse_grid("t_grid", "log:1:100:11");
  for (const auto& spec : specs()) {
    const auto it = merged.find(spec.name);
    if (it == merged.end()) {
      if (spec.required)
        throw ConfigError(spec.name, fmt::format("missing required key '{}'", spec.name));
      continue;
    }
    if (it->second.empty()) throw ConfigError(spec.name, fmt::format("{}: empty value", spec.name));
    spec.set(cfg, it->second);
  }
  for (const auto& [k, v] : merged) {
    const auto& keys = known_keys();
    if (std::find(keys.begin(), keys.end(), k) == keys.end())
      throw ConfigError(k, fmt::format("unknown key '{}'", k));
  }
  validate(cfg);
  // Where results go does not change them, so output stays out of the
  // fingerprint.
  for (const auto& spec : specs())
    if (spec.name != "output") cfg.canonical += spec.name + "=" + spec.show(cfg) + "\n";
  return cfg;
}

const std::string& default_config_text() {
  static const std::string text =
      "R=1\nd=1\nbeta_left=1\nbeta_right=1\nk_left=1\nk_right=1\nseed=42\n";
  return text;
}

}  // namespace diskbath::cli
