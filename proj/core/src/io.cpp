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

#include "diskbath/io.hpp"

#include <nlohmann/json.hpp>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace diskbath::io {

std::string format_double(double x) { return fmt::format("{:.17g}", x); }

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char ch : text) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string fingerprint_line(std::uint64_t fingerprint) {
  return fmt::format("# fingerprint={:016x}", fingerprint);
}

void write_event(std::ostream& out, const EventRecord& e) {
  fmt::print(out,
             "{{\"t\":{:.17g},\"i\":{},\"surface\":\"{}\",\"s_pre\":{:.17g},\"s_post\":{:.17g},"
             "\"sin_phi_pre\":{:.17g},\"sin_phi_post\":{:.17g},\"omega_pre\":{:.17g},"
             "\"omega_post\":{:.17g},\"half\":\"{}\"}}\n",
             e.time, e.particle, to_string(e.surface), e.pre.s, e.post.s, e.pre.sin_phi,
             e.post.sin_phi, e.pre.omega, e.post.omega, to_string(e.half));
}

void write_tail_csv(std::ostream& out, const TailCurve& c) {
  out << "T,p_hat,ci_lo,ci_hi,n\n";
  for (std::size_t j = 0; j < c.T_grid.size(); ++j)
    fmt::print(out, "{:.17g},{:.17g},{:.17g},{:.17g},{}\n", c.T_grid[j], c.p_hat[j], c.ci_lo[j],
               c.ci_hi[j], c.n);
}

void write_flux_csv(std::ostream& out, const FluxAccumulator& flux) {
  out << "reservoir,absorbed,emitted,net_rate,events\n";
  for (const Half h : {Half::Left, Half::Right}) {
    const std::size_t i = index_of(h);
    fmt::print(out, "{},{:.17g},{:.17g},{:.17g},{}\n", to_string(h), flux.absorbed[i],
               flux.emitted[i], flux.net_rate(h), flux.absorptions[i]);
  }
}

void write_tv_header(std::ostream& out) { out << "t,tv,marginal\n"; }

void write_tv_row(std::ostream& out, double t, double tv, std::string_view marginal) {
  fmt::print(out, "{:.17g},{:.17g},{}\n", t, tv, marginal);
}

void write_ensemble_csv(std::ostream& out, const SteadyEnsemble& ens) {
  fmt::print(out, "# burn_in={:.17g} spacing={:.17g}\n", ens.burn_in(), ens.spacing());
  out << "sample,clock,theta,omega,particle,half,x,y,vx,vy\n";
  for (std::size_t j = 0; j < ens.size(); ++j) {
    const auto ps = ens.particles(j);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const ParticleState& p = ps[i];
      fmt::print(out, "{},{:.17g},{:.17g},{:.17g},{},{},{:.17g},{:.17g},{:.17g},{:.17g}\n", j,
                 ens.clock(j), ens.disk(j).theta, ens.disk(j).omega, i, to_string(p.half),
                 p.position.x, p.position.y, p.velocity.x, p.velocity.y);
    }
  }
}

std::string bounds_json(std::span<const oracles::BoundReport> reports, std::uint64_t fingerprint) {
  nlohmann::ordered_json doc;
  doc["fingerprint"] = fmt::format("{:016x}", fingerprint);
  auto& list = doc["bounds"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    for (const auto& [key, value] : r.inputs) inputs[key] = value;
    list.push_back({{"name", r.name}, {"value", r.value}, {"tol", r.tol}, {"inputs", inputs}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace diskbath::io
