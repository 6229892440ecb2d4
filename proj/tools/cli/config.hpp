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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "diskbath/engine.hpp"
#include "diskbath/observables.hpp"

namespace diskbath::cli {

/// A configuration problem tied to one key; the CLI exits with status 2.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& what)
      : std::runtime_error(what), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

using KeyValues = std::map<std::string, std::string>;

struct RunConfig {
  double R = 1.0;
  double d = 1.0;
  double beta_left = 1.0;
  double beta_right = 1.0;
  int k_left = 1;
  int k_right = 1;
  std::uint64_t seed = 0;

  // C-set window; unset values take CSetParams::defaults_for.
  std::optional<double> s_min;
  std::optional<double> s_max;
  double epsilon = 0.1;
  std::optional<double> delay;

  std::uint64_t n_samples = 10000;
  double burn_in = 100.0;
  std::optional<double> spacing;  // unset: five mean boundary intervals
  std::vector<double> T_grid;
  double horizon = 1000.0;
  std::uint64_t replicas = 1;
  std::string output = "-";
  std::uint64_t max_events = kDefaultEventCap;
  std::uint64_t min_count = 50;

  double c = 0.5;
  std::optional<double> T0;      // unset: mu-hat(B_T0) ~ 1e-2
  std::optional<double> T_star;  // unset: T0
  std::vector<double> t_grid;
  std::uint64_t validate_samples = 100000;

  /// Canonical key=value text of the resolved configuration.
  std::string canonical;

  GeometryConfig geometry() const { return {R, d}; }
  ReservoirParams reservoirs() const { return {beta_left, beta_right}; }
  PhysicsConfig physics() const { return {geometry(), reservoirs(), k_left, k_right}; }
  CSetParams cset() const;
  std::uint64_t fingerprint() const;
};

/// Every accepted key, in canonical order.
const std::vector<std::string>& known_keys();
/// Keys that must be given by the file or a flag.
const std::vector<std::string>& required_keys();

/// Flat `key=value` text; '#' starts a comment. Unknown or repeated keys
/// are errors.
KeyValues parse_key_values(const std::string& text, const std::string& source);

/// Flags override the file; the result is validated.
RunConfig resolve_config(const KeyValues& file, const KeyValues& flags);

/// The configuration used when neither a file nor DISKBATH_CONFIG is given.
const std::string& default_config_text();

/// "log:lo:hi:n" (n log-spaced points), "lin:lo:hi:n" or a comma list.
std::vector<double> parse_grid(const std::string& key, const std::string& text);

}  // namespace diskbath::cli
