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
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "diskbath/engine.hpp"
#include "diskbath/observables.hpp"
#include "diskbath/oracles.hpp"

namespace diskbath::io {

/// Shortest round-trip-safe rendering: 17 significant digits.
std::string format_double(double x);

/// FNV-1a over arbitrary text.
std::uint64_t fnv1a(std::string_view text);

/// "# fingerprint=<16 hex digits>"; every output file starts with this line.
std::string fingerprint_line(std::uint64_t fingerprint);

/// One JSON object per line.
void write_event(std::ostream& out, const EventRecord& event);

void write_tail_csv(std::ostream& out, const TailCurve& curve);
/// One row per reservoir; `events` is the number of outer-circle events.
void write_flux_csv(std::ostream& out, const FluxAccumulator& flux);
void write_tv_header(std::ostream& out);
void write_tv_row(std::ostream& out, double t, double tv, std::string_view marginal);

/// Snapshot table: one row per particle per snapshot.
void write_ensemble_csv(std::ostream& out, const SteadyEnsemble& ensemble);

/// {"fingerprint": "...", "bounds": [{name, value, tol, inputs}, ...]}
std::string bounds_json(std::span<const oracles::BoundReport> reports, std::uint64_t fingerprint);

}  // namespace diskbath::io
