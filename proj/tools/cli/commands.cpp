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

#include "cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <memory>
#include <numbers>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "diskbath/errors.hpp"
#include "diskbath/io.hpp"
#include "diskbath/oracles.hpp"
#include "diskbath/statistics.hpp"

namespace diskbath::cli {

namespace {

constexpr std::uint64_t kPilotStream = 1;
constexpr std::uint64_t kMixingStream = 2;
constexpr std::uint64_t kValidateStream = 3;

/// cfg.output, or the console for "-".
class OutputSink {
 public:
  OutputSink(const RunConfig& cfg, std::ostream& console) {
    if (cfg.output == "-") {
      out_ = &console;
      return;
    }
    file_ = std::make_unique<std::ofstream>(cfg.output, std::ios::binary | std::ios::trunc);
    if (!*file_) throw ConfigError("output", fmt::format("output: cannot open '{}'", cfg.output));
    out_ = file_.get();
  }
  std::ostream& operator*() { return *out_; }
  void close() {
    out_->flush();
    if (!*out_) throw std::runtime_error("failed writing the output file");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_ = nullptr;
};

EnsembleOptions ensemble_options(const RunConfig& cfg, std::uint64_t replica, double spacing) {
  return {.n_samples = replica_samples(cfg, replica), .burn_in = cfg.burn_in,
          .spacing = spacing, .max_events = cfg.max_events};
}

void write_run_header(std::ostream& out, const RunConfig& cfg, double spacing) {
  out << io::fingerprint_line(cfg.fingerprint()) << '\n';
  fmt::print(out, "# n_samples={} replicas={} burn_in={:.17g} spacing={:.17g}\n", cfg.n_samples,
             cfg.replicas, cfg.burn_in, spacing);
}

SteadyEnsemble collect_ensemble(const RunConfig& cfg, double spacing) {
  const PhysicsConfig physics = cfg.physics();
  SteadyEnsemble ensemble(physics, cfg.burn_in, spacing);
  for (std::uint64_t j = 0; j < cfg.replicas; ++j) {
    RandomStream rng = replica_stream(cfg, j);
    ensemble.append(build_steady_ensemble(physics, rng, ensemble_options(cfg, j, spacing)));
  }
  return ensemble;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& console) {
  OutputSink out(cfg, console);
  RandomStream rng = replica_stream(cfg, 0);
  SystemState state = sample_emitted_state(cfg.geometry(), cfg.reservoirs(), cfg.k_left,
                                           cfg.k_right, rng);
  // JSON-lines: the header is a JSON object too.
  fmt::print(*out, "{{\"fingerprint\":\"{:016x}\",\"horizon\":{:.17g}}}\n", cfg.fingerprint(),
             cfg.horizon);
  const EvolveResult r = evolve_until(
      state, rng, nullptr, {.horizon = cfg.horizon, .max_events = cfg.max_events},
      [&out](const SystemState&, const EventRecord& e) { io::write_event(*out, e); });
  out.close();
  if (cfg.output != "-") fmt::print(console, "simulate: {} events up to t = {:.17g}\n", r.events, cfg.horizon);
  return kExitOk;
}

int cmd_steady(const RunConfig& cfg, std::ostream& console) {
  const double spacing = resolve_spacing(cfg);
  const SteadyEnsemble ensemble = collect_ensemble(cfg, spacing);
  OutputSink out(cfg, console);
  write_run_header(*out, cfg, spacing);
  io::write_ensemble_csv(*out, ensemble);
  out.close();
  if (cfg.output != "-") fmt::print(console, "steady: {} snapshots\n", ensemble.size());
  return kExitOk;
}

int cmd_tails(const RunConfig& cfg, std::ostream& console) {
  const double spacing = resolve_spacing(cfg);
  const PhysicsConfig physics = cfg.physics();
  TailCounter total(cfg.T_grid, spacing);
  for (std::uint64_t j = 0; j < cfg.replicas; ++j) {
    RandomStream rng = replica_stream(cfg, j);
    TailCounter counter(cfg.T_grid, spacing);
    sample_steady_states(physics, rng, ensemble_options(cfg, j, spacing),
                         [&](std::size_t, const SystemState& s) { counter.add(max_free_flight(s)); });
    total.merge(counter);
  }
  const TailCurve curve = total.curve();

  std::string fit_line;
  try {
    const auto [lo, hi] = counted_decade(curve, cfg.min_count);
    const PowerLawFit fit = fit_power_law(curve, lo, hi);
    fit_line = fmt::format("# fit exponent={:.17g} stderr={:.17g} T_lo={:.17g} T_hi={:.17g} points={} "
                           "min_count={} (independent flights)",
                           fit.exponent, fit.std_error, fit.T_lo, fit.T_hi, fit.points, cfg.min_count);
  } catch (const DomainError& e) {
    fit_line = fmt::format("# fit unavailable: {}", e.what());
  }

  OutputSink out(cfg, console);
  write_run_header(*out, cfg, spacing);
  *out << fit_line << '\n';
  io::write_tail_csv(*out, curve);
  out.close();
  if (cfg.output != "-") console << "tails: " << fit_line.substr(2) << '\n';
  return kExitOk;
}

int cmd_mixing(const RunConfig& cfg, std::ostream& console) {
  const double spacing = resolve_spacing(cfg);
  const SteadyEnsemble ensemble = collect_ensemble(cfg, spacing);
  const double T0 = cfg.T0 ? *cfg.T0 : calibrate_T0(ensemble, 1e-2);
  const double T_star = cfg.T_star.value_or(T0);
  const WeightedEnsemble lambda = perturbed_initial(ensemble, cfg.c, T0);
  const MixingSeries series = evolve_perturbed(ensemble, lambda, T_star, cfg.t_grid,
                                               replica_stream(cfg, 0).substream(kMixingStream));
  OutputSink out(cfg, console);
  write_run_header(*out, cfg, spacing);
  fmt::print(*out, "# c={:.17g} T0={:.17g} T_star={:.17g} p0={:.17g}\n", cfg.c, T0, T_star, lambda.p0);
  for (std::size_t m = 0; m < series.t.size(); ++m)
    fmt::print(*out, "# t={:.17g} lambda_B={:.17g} mu_B={:.17g} r={:.17g}\n", series.t[m],
               series.lambda_B[m], series.mu_B[m], series.r[m]);
  io::write_tv_header(*out);
  for (std::size_t m = 0; m < series.t.size(); ++m) {
    io::write_tv_row(*out, series.t[m], series.tv[m], "max_free_flight");
    io::write_tv_row(*out, series.t[m], std::abs(series.r[m]), "indicator_B_T_star");
  }
  out.close();
  if (cfg.output != "-")
    fmt::print(console, "mixing: T0 = {:.6g}, p0 = {:.4g}, r(t_end) = {:.4g}\n", T0, lambda.p0,
               series.r.back());
  return kExitOk;
}

int cmd_flux(const RunConfig& cfg, std::ostream& console) {
  const double spacing = resolve_spacing(cfg);
  const PhysicsConfig physics = cfg.physics();
  FluxAccumulator total;
  for (std::uint64_t j = 0; j < cfg.replicas; ++j) {
    RandomStream rng = replica_stream(cfg, j);
    FluxAccumulator flux;
    sample_steady_states(physics, rng, ensemble_options(cfg, j, spacing),
                         [](std::size_t, const SystemState&) {}, &flux);
    total.merge(flux);
  }
  OutputSink out(cfg, console);
  write_run_header(*out, cfg, spacing);
  fmt::print(*out, "# elapsed={:.17g}\n", total.elapsed);
  io::write_flux_csv(*out, total);
  out.close();
  if (cfg.output != "-")
    fmt::print(console, "flux: net rates left {:.6g}, right {:.6g}\n", total.net_rate(Half::Left),
               total.net_rate(Half::Right));
  return kExitOk;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& console) {
  const GeometryConfig geom = cfg.geometry();
  const ReservoirParams params = cfg.reservoirs();
  const std::vector<double> betas = {params.beta_left(), params.beta_right()};
  const oracles::BoundReport K = oracles::K_bound(params.beta_max(), geom);
  const oracles::BoundReport D = oracles::D_bound(params.beta_min(), betas, geom);
  const std::vector<oracles::BoundReport> reports = {
      K, oracles::hit_bound(K, geom), D,
      oracles::Dprime_bound(cfg.cset(), params.beta_min(), geom, D)};
  OutputSink out(cfg, console);
  *out << io::bounds_json(reports, cfg.fingerprint());
  out.close();
  if (cfg.output != "-")
    for (const auto& r : reports) fmt::print(console, "{:8} {:.10g}\n", r.name, r.value);
  return kExitOk;
}

struct Check {
  std::string name;
  double value;
  double threshold;
  bool pass;
};

std::vector<Check> self_checks(const RunConfig& cfg) {
  std::vector<Check> checks;
  const GeometryConfig geom = cfg.geometry();
  const ReservoirParams params = cfg.reservoirs();
  const double beta = params.beta_left();
  const std::uint64_t n = cfg.validate_samples;
  const double nd = static_cast<double>(n);
  RandomStream rng = replica_stream(cfg, 0).substream(kValidateStream);

  // Emission sampler.
  std::vector<double> speeds, sines;
  stats::RunningStats mean_speed;
  std::uint64_t heading = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const Emission e = sample_emission(beta, rng);
    speeds.push_back(e.speed);
    sines.push_back(e.sin_phi);
    mean_speed.add(e.speed);
    heading += std::abs(e.sin_phi) < geom.alpha() ? 1 : 0;
  }
  const double ks_crit = 1.63 / std::sqrt(nd);
  const double ks_s = stats::ks_statistic(speeds, [beta](double s) { return oracles::maxwell_cdf(beta, s); });
  checks.push_back({"KS(speed, Maxwell)", ks_s, ks_crit, ks_s < ks_crit});
  const double ks_u = stats::ks_statistic(sines, [](double x) { return 0.5 * (x + 1.0); });
  checks.push_back({"KS(sin phi, uniform)", ks_u, ks_crit, ks_u < ks_crit});
  const double mean_err = std::abs(mean_speed.mean() - oracles::emission_moments(beta).mean);
  checks.push_back({"|E[s] - 2/sqrt(pi beta)|", mean_err, 3.0 * mean_speed.stderr_mean(),
                    mean_err < 3.0 * mean_speed.stderr_mean()});
  const double p_hit = static_cast<double>(heading) / nd;
  const double p_err = std::abs(p_hit - geom.alpha());
  const double p_tol = 3.0 * std::sqrt(geom.alpha() * (1.0 - geom.alpha()) / nd);
  checks.push_back({"|P(disk heading) - alpha|", p_err, p_tol, p_err < p_tol});

  // Geometry: unfolded flight lengths.
  double unfold_err = 0.0;
  const double outer = geom.outer_radius();
  for (int i = 0; i < 10000; ++i) {
    const double a = rng.uniform(-0.5, 0.5) * std::numbers::pi;
    const Vec2 p{outer * std::cos(a), outer * std::sin(a)};
    const Emission e{1.0, rng.uniform(-1.0, 1.0)};
    const ParticleState ps = emit_at(p, Half::Right, e);
    const ContactLeg leg = trace_to_contact(geom, p, ps.velocity, Half::Right);
    const auto entry = disk_entry_distance(geom, e.sin_phi);
    const double expected = entry ? *entry : chord_length(geom, e.sin_phi);
    unfold_err = std::max(unfold_err, std::abs(leg.distance - expected));
  }
  checks.push_back({"max |flight - closed form|", unfold_err, 1e-9 * outer, unfold_err < 1e-9 * outer});

  // Dynamics: exchange invariant and the energy ledger.
  SystemState state = sample_emitted_state(geom, params, cfg.k_left, cfg.k_right, rng);
  const double e0 = total_energy(state);
  double worst_exchange = 0.0;
  double absorbed = 0.0, emitted = 0.0;
  std::uint64_t events = 0;
  evolve_until(state, rng,
               [&](const SystemState&, const EventRecord& e) {
                 if (e.surface == SurfaceKind::Disk) {
                   const double before = e.pre.s * e.pre.s + e.pre.omega * e.pre.omega;
                   const double after = e.post.s * e.post.s + e.post.omega * e.post.omega;
                   worst_exchange = std::max(worst_exchange, std::abs(after - before) / before);
                 } else if (is_outer(e.surface)) {
                   absorbed += 0.5 * e.pre.s * e.pre.s;
                   emitted += 0.5 * e.post.s * e.post.s;
                 }
                 return ++events >= n;
               },
               {.max_events = cfg.max_events});
  checks.push_back({"max disk exchange error", worst_exchange, 1e-12, worst_exchange <= 1e-12});
  const double ledger = std::abs(total_energy(state) - e0 - (emitted - absorbed)) / std::max(absorbed, e0);
  checks.push_back({"energy ledger error", ledger, 1e-9, ledger <= 1e-9});
  const double tol = 1e-9 * outer;
  bool inside = true;
  for (const ParticleState& p : state.particles) inside = inside && in_half_annulus(geom, p.position, p.half, tol);
  checks.push_back({"particles inside their halves", inside ? 0.0 : 1.0, 0.0, inside});

  // Quadrature oracles against closed forms.
  const double K = oracles::K_bound(beta, geom).value;
  const double alpha = geom.alpha();
  const double K_closed = std::sqrt(beta / std::numbers::pi) * geom.l_half() *
                          (4.0 * (1.0 - alpha) + alpha * (2.0 + std::numbers::pi));
  const double K_err = std::abs(K - K_closed) / K_closed;
  checks.push_back({"K quadrature rel. error", K_err, 1e-8, K_err <= 1e-8});
  return checks;
}

int cmd_validate(const RunConfig& cfg, std::ostream& console) {
  const std::vector<Check> checks = self_checks(cfg);
  OutputSink out(cfg, console);
  *out << io::fingerprint_line(cfg.fingerprint()) << '\n';
  fmt::print(*out, "{:<30} {:>24} {:>24}  {}\n", "check", "value", "threshold", "status");
  bool ok = true;
  for (const Check& c : checks) {
    fmt::print(*out, "{:<30} {:>24.17g} {:>24.17g}  {}\n", c.name, c.value, c.threshold,
               c.pass ? "PASS" : "FAIL");
    ok = ok && c.pass;
  }
  out.close();
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = {"validate", "simulate", "steady", "tails",
                                                 "mixing",   "flux",     "bounds"};
  return names;
}

RandomStream replica_stream(const RunConfig& cfg, std::uint64_t replica) {
  return RandomStream(cfg.seed, replica);
}

std::uint64_t replica_samples(const RunConfig& cfg, std::uint64_t replica) {
  const std::uint64_t base = cfg.n_samples / cfg.replicas;
  return base + (replica < cfg.n_samples % cfg.replicas ? 1 : 0);
}

double resolve_spacing(const RunConfig& cfg) {
  if (cfg.spacing) return *cfg.spacing;
  RandomStream rng = replica_stream(cfg, 0).substream(kPilotStream);
  return 5.0 * mean_boundary_interval(cfg.physics(), rng, cfg.burn_in, 5000.0);
}

int run_subcommand(const std::string& name, const RunConfig& cfg, std::ostream& console) {
  using Command = int (*)(const RunConfig&, std::ostream&);
  static const std::vector<std::pair<std::string, Command>> table = {
      {"validate", cmd_validate}, {"simulate", cmd_simulate}, {"steady", cmd_steady},
      {"tails", cmd_tails},       {"mixing", cmd_mixing},     {"flux", cmd_flux},
      {"bounds", cmd_bounds}};
  for (const auto& [n, fn] : table)
    if (n == name) return fn(cfg, console);
  throw ConfigError("", fmt::format("unknown subcommand '{}'", name));
}

}  // namespace diskbath::cli
