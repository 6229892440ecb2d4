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

#include <ostream>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "diskbath/random.hpp"

namespace diskbath::cli {

/// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfigError = 2;

const std::vector<std::string>& subcommands();

/// Stream of replica j: RandomStream(seed, j). Auxiliary streams (pilot run,
/// perturbed evolution) are substreams of RandomStream(seed, 0) with fixed
/// indices, so every result depends only on (config, seed, replicas).
RandomStream replica_stream(const RunConfig& cfg, std::uint64_t replica);

/// Snapshot count of replica j: n_samples split as evenly as possible,
/// the first replicas taking the remainder.
std::uint64_t replica_samples(const RunConfig& cfg, std::uint64_t replica);

/// `spacing`, or five mean boundary intervals from a pilot run.
double resolve_spacing(const RunConfig& cfg);

/// Runs one subcommand, writing its product to cfg.output ("-" is
/// `console`) and a summary to `console`. Returns the exit status.
int run_subcommand(const std::string& name, const RunConfig& cfg, std::ostream& console);

}  // namespace diskbath::cli
