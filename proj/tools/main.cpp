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

// diskbath: batch front-end for the rotating-disk heat-bath billiard.
//
//   diskbath <subcommand> [--config=FILE] [--key=value ...]
//
// The configuration is a flat key=value file (FILE, else $DISKBATH_CONFIG,
// else the built-in default); --key=value flags override it. Exit status:
// 0 success, 1 failed self-check or runtime failure, 2 configuration error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "cli/commands.hpp"
#include "cli/config.hpp"

namespace {

using namespace diskbath::cli;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config", fmt::format("cannot read config file '{}'", path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Event-driven simulation of a rotating disk between two heat baths"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  app.add_option("--config", config_path, "key=value configuration file (default: $DISKBATH_CONFIG)");

  std::map<std::string, std::string> flag_values;
  for (const std::string& key : known_keys())
    app.add_option("--" + key, flag_values[key], "override '" + key + "'");

  const std::map<std::string, std::string> help = {
      {"validate", "sampler, geometry and invariant self-checks"},
      {"simulate", "event log (JSON lines) up to `horizon`"},
      {"steady", "steady-state snapshots as CSV"},
      {"tails", "tail curve of the longest free flight and its power-law fit"},
      {"mixing", "decay of a perturbation concentrated on long flights"},
      {"flux", "heat exchanged with each bath"},
      {"bounds", "renewal-time bounds as JSON"}};
  for (const std::string& name : subcommands()) app.add_subcommand(name, help.at(name));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigError;
  }

  try {
    KeyValues flags;
    for (const std::string& key : known_keys())
      if (app.count("--" + key) > 0) flags[key] = flag_values[key];

    std::string text = default_config_text();
    std::string source = "<default>";
    if (config_path.empty()) {
      if (const char* env = std::getenv("DISKBATH_CONFIG"); env && *env) config_path = env;
    }
    if (!config_path.empty()) {
      text = read_file(config_path);
      source = config_path;
    }
    const RunConfig cfg = resolve_config(parse_key_values(text, source), flags);
    return run_subcommand(app.get_subcommands().front()->get_name(), cfg, std::cout);
  } catch (const ConfigError& e) {
    std::cerr << "config error [" << e.key() << "]: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}
