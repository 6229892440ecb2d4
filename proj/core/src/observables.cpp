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

#include "diskbath/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <fmt/format.h>

#include "diskbath/errors.hpp"
#include "diskbath/io.hpp"
#include "diskbath/oracles.hpp"
#include "diskbath/quadrature.hpp"

namespace diskbath {

namespace {

constexpr double kPi = std::numbers::pi;

Vec2 uniform_right_boundary_point(const GeometryConfig& geom, RandomStream& rng) {
  const double angle = rng.uniform(-0.5 * kPi, 0.5 * kPi);
  return {std::max(geom.outer_radius() * std::cos(angle), 0.0),
          geom.outer_radius() * std::sin(angle)};
}

}  // namespace

std::uint64_t PhysicsConfig::fingerprint() const {
  return io::fnv1a(fmt::format("R={:.17g};d={:.17g};beta_left={:.17g};beta_right={:.17g};k_left={};k_right={}",
                           geom.R(), geom.d(), params.beta_left(), params.beta_right(), k_left,
                           k_right));
}

SteadyEnsemble::SteadyEnsemble(PhysicsConfig config, double burn_in, double spacing)
    : config_(config), fingerprint_(config.fingerprint()), burn_in_(burn_in), spacing_(spacing) {
  if (!(spacing > 0.0)) throw DomainError("SteadyEnsemble: spacing must be positive");
  if (!(burn_in >= 0.0)) throw DomainError("SteadyEnsemble: burn-in must be non-negative");
  if (config.k() < 1) throw DomainError("SteadyEnsemble: need at least one particle");
}

void SteadyEnsemble::push(const SystemState& state) {
  if (state.particles.size() != static_cast<std::size_t>(config_.k()))
    throw DomainError("SteadyEnsemble::push: particle count does not match the ensemble");
  clocks_.push_back(state.clock);
  disks_.push_back(state.disk);
  particles_.insert(particles_.end(), state.particles.begin(), state.particles.end());
}

void SteadyEnsemble::append(const SteadyEnsemble& other) {
  if (other.fingerprint_ != fingerprint_)
    throw DomainError("SteadyEnsemble::append: fingerprints differ");
  clocks_.insert(clocks_.end(), other.clocks_.begin(), other.clocks_.end());
  disks_.insert(disks_.end(), other.disks_.begin(), other.disks_.end());
  particles_.insert(particles_.end(), other.particles_.begin(), other.particles_.end());
}

std::span<const ParticleState> SteadyEnsemble::particles(std::size_t j) const {
  const auto k = static_cast<std::size_t>(config_.k());
  return std::span<const ParticleState>(particles_).subspan(j * k, k);
}

SystemState SteadyEnsemble::state(std::size_t j) const {
  const auto ps = particles(j);
  return {{ps.begin(), ps.end()}, disks_[j], clocks_[j], config_.geom, config_.params};
}

void FluxAccumulator::observe(const EventRecord& e) {
  if (!is_outer(e.surface)) return;
  const std::size_t h = index_of(e.half);
  absorbed[h] += 0.5 * e.pre.s * e.pre.s;
  emitted[h] += 0.5 * e.post.s * e.post.s;
  ++absorptions[h];
  ++emissions[h];
}

void FluxAccumulator::merge(const FluxAccumulator& o) {
  for (std::size_t h = 0; h < 2; ++h) {
    absorbed[h] += o.absorbed[h];
    emitted[h] += o.emitted[h];
    absorptions[h] += o.absorptions[h];
    emissions[h] += o.emissions[h];
  }
  elapsed += o.elapsed;
}

double FluxAccumulator::net_rate(Half half) const {
  if (!(elapsed > 0.0)) throw DomainError("FluxAccumulator: no elapsed time");
  const std::size_t h = index_of(half);
  return (absorbed[h] - emitted[h]) / elapsed;
}

FluxAccumulator heat_flux(std::span<const EventRecord> log, double elapsed) {
  if (!(elapsed > 0.0)) throw DomainError("heat_flux: elapsed time must be positive");
  FluxAccumulator acc;
  for (const EventRecord& e : log) acc.observe(e);
  acc.elapsed = elapsed;
  return acc;
}

double total_energy(const SystemState& state) {
  double e = 0.5 * state.disk.omega * state.disk.omega;
  for (const ParticleState& p : state.particles) e += 0.5 * norm2(p.velocity);
  return e;
}

void sample_steady_states(const PhysicsConfig& config, RandomStream& rng,
                          const EnsembleOptions& options, const SnapshotVisitor& visit,
                          FluxAccumulator* flux) {
  if (options.n_samples < 1) throw DomainError("steady sampling: need at least one sample");
  if (!(options.spacing > 0.0)) throw DomainError("steady sampling: spacing must be positive");
  if (!(options.burn_in >= 0.0)) throw DomainError("steady sampling: burn-in must be non-negative");
  SystemState state = sample_emitted_state(config.geom, config.params, config.k_left,
                                           config.k_right, rng);
  Simulator sim(state, rng);
  std::uint64_t events = 0;
  for (std::size_t j = 0; j < options.n_samples; ++j) {
    const double target = options.burn_in + static_cast<double>(j + 1) * options.spacing;
    while (sim.next_event_time() <= target) {
      if (++events > options.max_events)
        throw RunawayError(fmt::format("steady sampling: event cap {} exceeded", options.max_events));
      const EventRecord e = sim.step();
      if (flux && e.time > options.burn_in) flux->observe(e);
    }
    sim.advance_to(target);
    visit(j, state);
  }
  if (flux) flux->elapsed += state.clock - options.burn_in;
}

SteadyEnsemble build_steady_ensemble(const PhysicsConfig& config, RandomStream& rng,
                                     const EnsembleOptions& options, FluxAccumulator* flux) {
  SteadyEnsemble ensemble(config, options.burn_in, options.spacing);
  sample_steady_states(
      config, rng, options, [&ensemble](std::size_t, const SystemState& s) { ensemble.push(s); },
      flux);
  return ensemble;
}

double mean_boundary_interval(const PhysicsConfig& config, RandomStream& rng, double burn_in,
                              double horizon) {
  if (!(horizon > 0.0)) throw DomainError("mean_boundary_interval: horizon must be positive");
  SystemState state = sample_emitted_state(config.geom, config.params, config.k_left,
                                           config.k_right, rng);
  evolve_until(state, rng, nullptr, {.horizon = burn_in});
  std::uint64_t hits = 0;
  evolve_until(state, rng, nullptr, {.horizon = burn_in + horizon},
               [&hits](const SystemState&, const EventRecord& e) { hits += is_outer(e.surface); });
  if (hits == 0) throw DomainError("mean_boundary_interval: no boundary collisions in the pilot run");
  return horizon * static_cast<double>(config.k()) / static_cast<double>(hits);
}

std::vector<double> time_to_first_collision(const SystemState& state) {
  std::vector<double> out;
  out.reserve(state.particles.size());
  for (const ParticleState& p : state.particles) {
    const double speed = norm(p.velocity);
    const ContactLeg leg =
        trace_to_contact(state.geom, p.position, (1.0 / speed) * p.velocity, p.half);
    out.push_back(leg.distance / speed);
  }
  return out;
}

double max_free_flight(const GeometryConfig& geom, std::span<const ParticleState> particles) {
  double t = 0.0;
  for (const ParticleState& p : particles) {
    const double speed = norm(p.velocity);
    const ContactLeg leg = trace_to_contact(geom, p.position, (1.0 / speed) * p.velocity, p.half);
    t = std::max(t, leg.distance / speed);
  }
  return t;
}

double max_free_flight(const SystemState& state) {
  return max_free_flight(state.geom, state.particles);
}

TailCounter::TailCounter(std::vector<double> T_grid, double spacing)
    : grid_(std::move(T_grid)), spacing_(spacing), counts_(grid_.size()), episodes_(grid_.size()) {
  if (!(spacing > 0.0)) throw DomainError("TailCounter: spacing must be positive");
  for (std::size_t j = 0; j < grid_.size(); ++j) {
    if (!(grid_[j] > 0.0)) throw DomainError("TailCounter: T grid must be positive");
    if (j > 0 && !(grid_[j] > grid_[j - 1])) throw DomainError("TailCounter: T grid must increase");
  }
}

void TailCounter::add(double max_flight) {
  ++n_;
  // counts_[j] covers grid_[j] <= max_flight.
  const auto end = std::upper_bound(grid_.begin(), grid_.end(), max_flight);
  for (auto it = grid_.begin(); it != end; ++it) {
    const auto j = static_cast<std::size_t>(it - grid_.begin());
    ++counts_[j];
    if (!(previous_ >= grid_[j] + spacing_)) ++episodes_[j];
  }
  previous_ = max_flight;
}

void TailCounter::merge(const TailCounter& o) {
  if (o.grid_ != grid_) throw DomainError("TailCounter::merge: grids differ");
  for (std::size_t j = 0; j < counts_.size(); ++j) {
    counts_[j] += o.counts_[j];
    episodes_[j] += o.episodes_[j];
  }
  n_ += o.n_;
}

TailCurve TailCounter::curve() const {
  if (n_ == 0) throw DomainError("tail curve of an empty ensemble");
  TailCurve c;
  c.T_grid = grid_;
  c.counts = counts_;
  c.episodes = episodes_;
  c.n = n_;
  for (const std::uint64_t k : counts_) {
    const double p = static_cast<double>(k) / static_cast<double>(n_);
    const stats::Interval ci = stats::wilson_interval(k, n_);
    c.p_hat.push_back(p);
    c.ci_lo.push_back(ci.lo);
    c.ci_hi.push_back(ci.hi);
    c.ci_half_width.push_back(0.5 * (ci.hi - ci.lo));
  }
  return c;
}

TailCurve b_t_tail(const SteadyEnsemble& ensemble, std::span<const double> T_grid) {
  if (ensemble.empty()) throw DomainError("b_t_tail: empty ensemble");
  TailCounter counter({T_grid.begin(), T_grid.end()}, ensemble.spacing());
  const GeometryConfig& geom = ensemble.config().geom;
  for (std::size_t j = 0; j < ensemble.size(); ++j)
    counter.add(max_free_flight(geom, ensemble.particles(j)));
  return counter.curve();
}

PowerLawFit fit_power_law(const TailCurve& curve, double T_lo, double T_hi) {
  std::vector<double> x, y, w;
  bool zero_width = false;
  for (std::size_t j = 0; j < curve.T_grid.size(); ++j) {
    const double T = curve.T_grid[j];
    // Window ends may be computed (T_hi / 10); allow for rounding.
    if (T < T_lo * (1.0 - 1e-12) || T > T_hi * (1.0 + 1e-12) || !(curve.p_hat[j] > 0.0)) continue;
    x.push_back(std::log(T));
    y.push_back(std::log(curve.p_hat[j]));
    const double hw = j < curve.ci_half_width.size() ? curve.ci_half_width[j] : 0.0;
    if (!(hw > 0.0)) zero_width = true;
    w.push_back(hw > 0.0 ? std::pow(curve.p_hat[j] / hw, 2) : 1.0);
  }
  if (x.size() < 5)
    throw DomainError(fmt::format("fit_power_law: {} usable points in [{}, {}], need 5", x.size(), T_lo, T_hi));
  if (zero_width) std::fill(w.begin(), w.end(), 1.0);
  const stats::LineFit fit = stats::fit_line(x, y, w);
  return {fit.slope, fit.slope_stderr, T_lo, T_hi, x.size()};
}

std::pair<double, double> counted_decade(const TailCurve& curve, std::uint64_t min_count) {
  // Hand-built curves may lack episode counts; then every count is one.
  const auto& support = curve.episodes.size() == curve.T_grid.size() ? curve.episodes : curve.counts;
  double T_hi = 0.0;
  for (std::size_t j = 0; j < curve.T_grid.size(); ++j)
    if (support[j] >= min_count) T_hi = curve.T_grid[j];
  if (!(T_hi > 0.0)) throw DomainError("counted_decade: no grid point has enough episodes");
  return {T_hi / 10.0, T_hi};
}

double deposit_rate_analytic(double beta, const GeometryConfig& geom, double T, double delay) {
  if (!(T > 0.0)) throw DomainError("deposit_rate: T must be positive");
  const double horizon = T + delay;
  const double alpha = geom.alpha();
  auto cdf_at = [&](double distance) { return oracles::maxwell_cdf(beta, distance / horizon); };
  // Symmetric in sin(phi): integrate over [0, 1] with the uniform density 1.
  const QuadratureOptions opts{.rel_tol = 1e-11};
  const double hit = integrate(
      [&](double u) {
        const auto entry = disk_entry_distance(geom, u);
        return cdf_at(entry ? *entry : chord_length(geom, u));
      },
      0.0, alpha, opts).value;
  const double miss =
      integrate([&](double u) { return cdf_at(chord_length(geom, u)); }, alpha, 1.0, opts).value;
  return hit + miss;
}

McEstimate deposit_rate_mc(double beta, const GeometryConfig& geom, double T, double delay,
                           std::uint64_t draws, RandomStream& rng) {
  if (!(T > 0.0)) throw DomainError("deposit_rate: T must be positive");
  if (draws < 2) throw DomainError("deposit_rate_mc: need at least two draws");
  const double horizon = T + delay;
  const double cut = 2.0 * geom.outer_radius() / horizon;
  stats::RunningStats acc;
  for (std::uint64_t i = 0; i < draws; ++i) {
    const double speed = cut * std::cbrt(rng.uniform());
    const double sin_phi = rng.uniform(-1.0, 1.0);
    const Vec2 point = uniform_right_boundary_point(geom, rng);
    const ParticleState p = emit_at(point, Half::Right, {speed, sin_phi});
    const ContactLeg leg = trace_to_contact(geom, p.position, (1.0 / speed) * p.velocity, Half::Right);
    double value = 0.0;
    if (leg.distance / speed > horizon) {
      const double proposal = 3.0 * speed * speed / (cut * cut * cut);
      value = oracles::maxwell_pdf(beta, speed) / proposal;
    }
    acc.add(value);
  }
  return {acc.mean(), acc.stderr_mean(), draws};
}

double deposit_leading_term(double beta, const GeometryConfig& geom, double T, double delay) {
  const double h = T + delay;
  return 4.0 / 3.0 * std::pow(beta, 1.5) / std::sqrt(kPi) * std::pow(geom.d(), 3) / (h * h * h);
}

Histogram::Histogram(std::vector<Axis> axes) : axes_(std::move(axes)) {
  std::size_t cells = 1;
  for (const Axis& a : axes_) {
    if (!(a.hi > a.lo) || a.bins < 1) throw DomainError("Histogram: binning resolution must be positive");
    cells *= static_cast<std::size_t>(a.bins);
  }
  cells_.assign(cells, 0.0);
}

void Histogram::add(std::span<const double> values, double weight) {
  if (values.size() != axes_.size()) throw DomainError("Histogram::add: dimension mismatch");
  std::size_t index = 0;
  for (std::size_t d = 0; d < axes_.size(); ++d) {
    const Axis& a = axes_[d];
    const double f = (values[d] - a.lo) / (a.hi - a.lo);
    const int bin = std::clamp(static_cast<int>(std::floor(f * a.bins)), 0, a.bins - 1);
    index = index * static_cast<std::size_t>(a.bins) + static_cast<std::size_t>(bin);
  }
  cells_[index] += weight;
  mass_ += weight;
}

void Histogram::merge(const Histogram& o) {
  if (o.cells_.size() != cells_.size()) throw DomainError("Histogram::merge: layouts differ");
  for (std::size_t i = 0; i < cells_.size(); ++i) cells_[i] += o.cells_[i];
  mass_ += o.mass_;
}

double tv_distance(const Histogram& a, const Histogram& b) {
  if (a.cells().size() != b.cells().size()) throw DomainError("tv_distance: layouts differ");
  if (!(a.mass() > 0.0) || !(b.mass() > 0.0)) throw DomainError("tv_distance: empty histogram");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.cells().size(); ++i)
    sum += std::abs(a.cells()[i] / a.mass() - b.cells()[i] / b.mass());
  return std::clamp(0.5 * sum, 0.0, 1.0);
}

Histogram make_histogram(Marginal marginal, const GeometryConfig& geom, const Binning& b) {
  switch (marginal) {
    case Marginal::ParticleTriple: {
      const double xi_max = 2.0 * geom.outer_radius();
      return Histogram({{0.0, b.speed_max, b.bins}, {-1.0, 1.0, b.bins}, {-xi_max, xi_max, b.bins}});
    }
    case Marginal::Omega:
      return Histogram({{-b.omega_max, b.omega_max, b.bins}});
    case Marginal::MaxFreeFlight:
      return Histogram({{0.0, b.flight_max, b.bins}});
  }
  throw DomainError("make_histogram: unknown marginal");
}

void accumulate(Histogram& h, const SystemState& state, Marginal marginal, double weight) {
  switch (marginal) {
    case Marginal::ParticleTriple: {
      const double share = weight / static_cast<double>(state.particles.size());
      for (std::size_t i = 0; i < state.particles.size(); ++i) {
        const CollisionCoords c = collision_coords(state, i);
        const double v[3] = {c.s, c.sin_phi, c.xi};
        h.add(v, share);
      }
      return;
    }
    case Marginal::Omega: {
      const double v[1] = {state.disk.omega};
      h.add(v, weight);
      return;
    }
    case Marginal::MaxFreeFlight: {
      const double v[1] = {max_free_flight(state)};
      h.add(v, weight);
      return;
    }
  }
}

double tv_distance(const SteadyEnsemble& a, const SteadyEnsemble& b, Marginal marginal,
                   const Binning& binning) {
  if (a.fingerprint() != b.fingerprint()) throw DomainError("tv_distance: ensembles have different configurations");
  if (a.empty() || b.empty()) throw DomainError("tv_distance: empty ensemble");
  Histogram ha = make_histogram(marginal, a.config().geom, binning);
  Histogram hb = ha;
  for (std::size_t j = 0; j < a.size(); ++j) accumulate(ha, a.state(j), marginal);
  for (std::size_t j = 0; j < b.size(); ++j) accumulate(hb, b.state(j), marginal);
  return tv_distance(ha, hb);
}

WeightedEnsemble perturbed_initial(const SteadyEnsemble& ensemble, double c, double T0) {
  if (!(c >= 0.0 && c <= 1.0)) throw DomainError("perturbed_initial: c must lie in [0, 1]");
  if (!(T0 > 0.0)) throw DomainError("perturbed_initial: T0 must be positive");
  if (ensemble.empty()) throw DomainError("perturbed_initial: empty ensemble");
  WeightedEnsemble out{{}, {}, c, T0, 0.0};
  const std::size_t n = ensemble.size();
  out.in_B0.resize(n);
  std::size_t inside = 0;
  const GeometryConfig& geom = ensemble.config().geom;
  for (std::size_t j = 0; j < n; ++j) {
    out.in_B0[j] = max_free_flight(geom, ensemble.particles(j)) >= T0;
    inside += out.in_B0[j] ? 1 : 0;
  }
  if (inside == 0) throw DomainError(fmt::format("perturbed_initial: no samples in B_{}", T0));
  out.p0 = static_cast<double>(inside) / static_cast<double>(n);
  if (c > 0.0 && inside == n)
    throw DomainError("perturbed_initial: every sample is in B_T0, the complement cannot absorb the excess");
  const double complement = inside == n ? 1.0 : 1.0 - c * out.p0 / (1.0 - out.p0);
  out.weights.resize(n);
  for (std::size_t j = 0; j < n; ++j) out.weights[j] = out.in_B0[j] ? 1.0 + c : complement;
  return out;
}

double calibrate_T0(const SteadyEnsemble& ensemble, double target) {
  if (ensemble.empty()) throw DomainError("calibrate_T0: empty ensemble");
  if (!(target > 0.0 && target < 1.0)) throw DomainError("calibrate_T0: target must lie in (0, 1)");
  std::vector<double> flights(ensemble.size());
  const GeometryConfig& geom = ensemble.config().geom;
  for (std::size_t j = 0; j < ensemble.size(); ++j)
    flights[j] = max_free_flight(geom, ensemble.particles(j));
  // The k-th largest value has k samples at or above it.
  const auto k = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(target * static_cast<double>(flights.size()))));
  auto nth = flights.end() - static_cast<std::ptrdiff_t>(k);
  std::nth_element(flights.begin(), nth, flights.end());
  return *nth;
}

MixingSeries evolve_perturbed(const SteadyEnsemble& ensemble, const WeightedEnsemble& lambda,
                              double T_star, std::span<const double> t_grid,
                              const RandomStream& base, const Binning& binning) {
  if (lambda.weights.size() != ensemble.size())
    throw DomainError("evolve_perturbed: weights do not match the ensemble");
  for (std::size_t m = 0; m < t_grid.size(); ++m)
    if (t_grid[m] < 0.0 || (m > 0 && t_grid[m] < t_grid[m - 1]))
      throw DomainError("evolve_perturbed: time grid must be non-negative and sorted");
  const std::size_t n = ensemble.size();
  const std::size_t nt = t_grid.size();
  const GeometryConfig& geom = ensemble.config().geom;
  std::vector<double> lam(nt, 0.0), mu(nt, 0.0), diff(nt, 0.0);
  std::vector<Histogram> h_lambda(nt, make_histogram(Marginal::MaxFreeFlight, geom, binning));
  std::vector<Histogram> h_mu = h_lambda;

  for (std::size_t i = 0; i < n; ++i) {
    SystemState state = ensemble.state(i);
    RandomStream rng = base.substream(i);
    Simulator sim(state, rng);
    const double start = state.clock;
    const double w = lambda.weights[i];
    for (std::size_t m = 0; m < nt; ++m) {
      const double target = start + t_grid[m];
      while (sim.next_event_time() <= target) sim.step();
      sim.advance_to(target);
      const double flight = max_free_flight(state);
      const double v[1] = {flight};
      h_lambda[m].add(v, w);
      h_mu[m].add(v, 1.0);
      if (flight >= T_star) {
        lam[m] += w;
        mu[m] += 1.0;
        diff[m] += w - 1.0;
      }
    }
  }
  MixingSeries out;
  const double nd = static_cast<double>(n);
  for (std::size_t m = 0; m < nt; ++m) {
    out.t.push_back(t_grid[m]);
    out.lambda_B.push_back(lam[m] / nd);
    out.mu_B.push_back(mu[m] / nd);
    out.r.push_back(diff[m] / nd);
    out.tv.push_back(tv_distance(h_lambda[m], h_mu[m]));
  }
  return out;
}

double sample_flight_time(const GeometryConfig& geom, double beta, double omega, RandomStream& rng) {
  const Vec2 point = uniform_right_boundary_point(geom, rng);
  ParticleState p = emit_at(point, Half::Right, sample_emission(beta, rng));
  double speed = norm(p.velocity);
  ContactLeg leg = trace_to_contact(geom, p.position, (1.0 / speed) * p.velocity, Half::Right);
  double time = leg.distance / speed;
  if (leg.hit.surface == SurfaceKind::Disk) {
    Vec2 v = speed * leg.direction;
    collide_with_disk(leg.hit.point, v, omega);
    speed = norm(v);
    leg = trace_to_contact(geom, leg.hit.point, (1.0 / speed) * v, Half::Right);
    time += leg.distance / speed;
  }
  return time;
}

HitSample sample_hit_time(const GeometryConfig& geom, double beta, RandomStream& rng) {
  const double omega_sigma = 1.0 / std::sqrt(2.0 * beta);
  HitSample out{0.0, 0};
  while (true) {
    ++out.rounds;
    const Vec2 point = uniform_right_boundary_point(geom, rng);
    const ParticleState p = emit_at(point, Half::Right, sample_emission(beta, rng));
    double speed = norm(p.velocity);
    ContactLeg leg = trace_to_contact(geom, p.position, (1.0 / speed) * p.velocity, Half::Right);
    out.time += leg.distance / speed;
    if (leg.hit.surface != SurfaceKind::Disk) continue;
    double omega = omega_sigma * rng.normal();
    Vec2 v = speed * leg.direction;
    collide_with_disk(leg.hit.point, v, omega);
    speed = norm(v);
    leg = trace_to_contact(geom, leg.hit.point, (1.0 / speed) * v, Half::Right);
    out.time += leg.distance / speed;
    return out;
  }
}

}  // namespace diskbath
