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

#include "diskbath/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "diskbath/errors.hpp"

namespace diskbath {

namespace {

constexpr double kMinSpeed = 1e-300;

inline double incidence_sine(Vec2 normal, Vec2 v, double speed) {
  return cross(normal, v) / speed;
}

}  // namespace

std::size_t SystemState::count(Half half) const {
  return static_cast<std::size_t>(std::count_if(
      particles.begin(), particles.end(), [half](const ParticleState& p) { return p.half == half; }));
}

void validate(const SystemState& state) {
  const double tol = 1e-9 * state.geom.outer_radius();
  for (std::size_t i = 0; i < state.particles.size(); ++i) {
    const ParticleState& p = state.particles[i];
    if (!(norm(p.velocity) > 0.0))
      throw InvalidStateError(fmt::format("particle {} is stopped", i));
    if (!in_half_annulus(state.geom, p.position, p.half, tol))
      throw InvalidStateError(fmt::format("particle {} at ({}, {}) is outside the {} half", i,
                                          p.position.x, p.position.y, to_string(p.half)));
    if (std::abs(p.position.x) <= tol && p.velocity.x == 0.0 &&
        std::abs(p.position.y) >= state.geom.R() - tol)
      throw InvalidStateError(fmt::format("particle {} sits on a wall with zero horizontal velocity", i));
  }
}

NextEvent next_event(const SystemState& state) {
  if (state.particles.empty()) throw InvalidStateError("next_event: no particles");
  NextEvent best{-1, {}, std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < state.particles.size(); ++i) {
    const ParticleState& p = state.particles[i];
    const double speed = norm(p.velocity);
    const SurfaceHit hit = trace_ray(state.geom, p.position, (1.0 / speed) * p.velocity, p.half);
    const double dt = hit.distance / speed;
    if (dt < best.dt) best = {static_cast<int>(i), hit, dt};
  }
  return best;
}

void advance_ballistic(SystemState& state, double dt) {
  for (ParticleState& p : state.particles) p.position += dt * p.velocity;
  double theta = std::fmod(state.disk.theta + state.disk.omega * dt / state.geom.R(),
                           2.0 * std::numbers::pi);
  if (theta < 0.0) theta += 2.0 * std::numbers::pi;
  if (theta >= 2.0 * std::numbers::pi) theta = 0.0;
  state.disk.theta = theta;
  state.clock += dt;
}

EventRecord apply_event(SystemState& state, const NextEvent& event, RandomStream& rng) {
  const double t_event = state.clock + event.dt;
  advance_ballistic(state, event.dt);
  state.clock = t_event;

  ParticleState& p = state.particles[static_cast<std::size_t>(event.particle)];
  Vec2 point = event.hit.point;
  // Pin the particle to its own side of x = 0.
  if (p.half == Half::Right) point.x = std::max(point.x, 0.0);
  else point.x = std::min(point.x, 0.0);
  p.position = point;

  const Vec2 n = event.hit.inward_normal;
  EventRecord rec{};
  rec.time = t_event;
  rec.particle = event.particle;
  rec.surface = event.hit.surface;
  rec.half = p.half;
  const double s_pre = norm(p.velocity);
  rec.pre = {s_pre, incidence_sine(-n, p.velocity, s_pre), state.disk.omega};

  switch (event.hit.surface) {
    case SurfaceKind::WallUpper:
    case SurfaceKind::WallLower:
      p.velocity = wall_reflect(p.velocity);
      break;
    case SurfaceKind::Disk: {
      collide_with_disk(point, p.velocity, state.disk.omega);
      p.last_contact = Contact::Disk;
#ifndef NDEBUG
      const double s_post = norm(p.velocity);
      const double before = s_pre * s_pre + rec.pre.omega * rec.pre.omega;
      const double after = s_post * s_post + state.disk.omega * state.disk.omega;
      if (std::abs(before - after) > 1e-12 * before)
        throw InvariantViolation("disk exchange does not conserve energy");
#endif
      break;
    }
    case SurfaceKind::OuterBoundaryLeft:
    case SurfaceKind::OuterBoundaryRight:
      p = emit_at(point, p.half, sample_emission(state.params.beta(p.half), rng));
      break;
  }

  const double s_post = norm(p.velocity);
  if (!(s_post > kMinSpeed))
    throw InvalidStateError(fmt::format("particle {} stopped at t = {}", event.particle, t_event));
  rec.post = {s_post, incidence_sine(n, p.velocity, s_post), state.disk.omega};
  return rec;
}

EventRecord step(SystemState& state, RandomStream& rng) {
  return apply_event(state, next_event(state), rng);
}

Simulator::Simulator(SystemState& state, RandomStream& rng)
    : state_(&state), rng_(&rng), hit_time_(state.particles.size()), hit_(state.particles.size()) {
  if (state.particles.empty()) throw InvalidStateError("Simulator: no particles");
  for (std::size_t i = 0; i < state.particles.size(); ++i) {
    const ParticleState& p = state.particles[i];
    const double speed = norm(p.velocity);
    if (!(speed > 0.0)) throw InvalidStateError(fmt::format("particle {} is stopped", i));
    hit_[i] = trace_ray(state.geom, p.position, (1.0 / speed) * p.velocity, p.half);
    hit_time_[i] = state.clock + hit_[i].distance / speed;
  }
  select_next();
}

void Simulator::select_next() {
  std::size_t best = 0;
  for (std::size_t i = 1; i < hit_time_.size(); ++i)
    if (hit_time_[i] < hit_time_[best]) best = i;
  next_ = {static_cast<int>(best), hit_[best], std::max(hit_time_[best] - state_->clock, 0.0)};
}

EventRecord Simulator::step() {
  const std::size_t i = static_cast<std::size_t>(next_.particle);
  const double t_event = hit_time_[i];
  EventRecord rec = apply_event(*state_, next_, *rng_);
  state_->clock = t_event;
  const ParticleState& p = state_->particles[i];
  const double speed = norm(p.velocity);
  hit_[i] = trace_ray(state_->geom, p.position, (1.0 / speed) * p.velocity, p.half);
  hit_time_[i] = t_event + hit_[i].distance / speed;
  select_next();
  return rec;
}

void Simulator::advance_to(double t) {
  if (t < state_->clock) throw DomainError("Simulator::advance_to: time runs backwards");
  if (t > next_event_time()) throw DomainError("Simulator::advance_to: would skip an event");
  advance_ballistic(*state_, t - state_->clock);
  state_->clock = t;
  next_.dt = std::max(hit_time_[static_cast<std::size_t>(next_.particle)] - t, 0.0);
}

EvolveResult evolve_until(SystemState& state, RandomStream& rng, const StopPredicate& stop,
                          const EvolveOptions& options, const EventObserver& observe) {
  Simulator sim(state, rng);
  std::uint64_t events = 0;
  while (true) {
    if (sim.next_event_time() > options.horizon) {
      sim.advance_to(options.horizon);
      return {StopReason::Horizon, events};
    }
    if (events >= options.max_events)
      throw RunawayError(fmt::format("evolve_until: event cap {} exceeded at t = {}",
                                     options.max_events, state.clock));
    const EventRecord rec = sim.step();
    ++events;
    if (observe) observe(state, rec);
    if (stop && stop(state, rec)) return {StopReason::Predicate, events};
  }
}

EvolveResult evolve_until(SystemState& state, RandomStream& rng, const StopPredicate& stop,
                          const EvolveOptions& options, std::vector<EventRecord>& log) {
  return evolve_until(state, rng, stop, options,
                      [&log](const SystemState&, const EventRecord& e) { log.push_back(e); });
}

CollisionCoords collision_coords(const SystemState& state, std::size_t i) {
  const ParticleState& p = state.particles.at(i);
  return to_collision_coords(state.geom, p.position, p.velocity, p.half, p.last_contact);
}

std::vector<std::optional<double>> disk_hit_times(const SystemState& state) {
  std::vector<std::optional<double>> out(state.particles.size());
  for (std::size_t i = 0; i < state.particles.size(); ++i) {
    const ParticleState& p = state.particles[i];
    const double speed = norm(p.velocity);
    const ContactLeg leg = trace_to_contact(state.geom, p.position, (1.0 / speed) * p.velocity, p.half);
    if (leg.hit.surface == SurfaceKind::Disk) out[i] = leg.distance / speed;
  }
  return out;
}

double compute_t0(const SystemState& state) {
  double t0 = 0.0;
  for (const auto& t : disk_hit_times(state))
    if (t) t0 = std::max(t0, *t);
  return t0;
}

StoppingMonitor::StoppingMonitor(const SystemState& start)
    : start_(start.clock),
      t0_(start.clock + compute_t0(start)),
      boundary_hit_(start.particles.size(), false),
      emitted_(start.particles.size(), false),
      hit_disk_after_t0_(start.particles.size(), false),
      remaining_(start.particles.size()) {}

bool StoppingMonitor::observe(const EventRecord& e) {
  if (tau_) return true;
  const auto i = static_cast<std::size_t>(e.particle);
  if (e.surface == SurfaceKind::Disk) {
    if (emitted_[i] && e.time > t0_) hit_disk_after_t0_[i] = true;
  } else if (is_outer(e.surface)) {
    if (hit_disk_after_t0_[i]) disk_renewed_ = true;
    if (!boundary_hit_[i]) {
      boundary_hit_[i] = true;
      --remaining_;
    }
    emitted_[i] = true;
    hit_disk_after_t0_[i] = false;
  }
  if (remaining_ == 0 && disk_renewed_) tau_ = e.time - start_;
  return tau_.has_value();
}

TauResult run_to_tau(SystemState& state, RandomStream& rng, std::uint64_t max_events) {
  StoppingMonitor monitor(state);
  const EvolveResult r = evolve_until(
      state, rng, [&monitor](const SystemState&, const EventRecord& e) { return monitor.observe(e); },
      {.max_events = max_events});
  return {*monitor.tau(), r.events};
}

TauResult run_to_tau_after(SystemState& state, RandomStream& rng, double delay,
                           std::uint64_t max_events) {
  if (!(delay >= 0.0)) throw DomainError("run_to_tau_after: delay must be non-negative");
  const double start = state.clock;
  const EvolveResult wait = evolve_until(state, rng, nullptr,
                                         {.horizon = start + delay, .max_events = max_events});
  const TauResult tau = run_to_tau(state, rng, max_events - wait.events);
  return {state.clock - start, wait.events + tau.events};
}

CSetParams::CSetParams(double s_min, double s_max, double epsilon)
    : s_min_(s_min), s_max_(s_max), epsilon_(epsilon) {
  if (!(s_min > 0.0 && s_min < s_max && std::isfinite(s_max)))
    throw DomainError(fmt::format("C set needs 0 < s_min < s_max, got {} and {}", s_min, s_max));
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw DomainError(fmt::format("C set needs 0 < epsilon < 1, got {}", epsilon));
}

CSetParams CSetParams::defaults_for(const ReservoirParams& params) {
  return {0.2 / std::sqrt(params.beta_max()), 3.0 / std::sqrt(params.beta_min()), 0.1};
}

double CSetParams::omega_bound(double alpha) const {
  return s_max_ * std::sqrt((1.0 - epsilon_) / (1.0 + alpha * alpha));
}

double CSetParams::pre_disk_sin_bound(double alpha) const {
  return alpha / std::sqrt(1.0 + alpha * alpha) * std::sqrt(1.0 - epsilon_);
}

double CSetParams::post_disk_sin_bound(double alpha) const {
  // alpha * W / sqrt(W^2 + X^2): the largest outgoing sine reachable when a
  // pre-disk particle meets a disk with |omega| <= W, where X is the
  // smallest normal speed it can carry.
  const double a2 = alpha * alpha;
  const double w2 = s_max_ * s_max_ * (1.0 - epsilon_);
  const double x2 = s_min_ * s_min_ * (a2 + epsilon_);
  return alpha * std::sqrt(w2 / (w2 + x2));
}

double CSetParams::post_disk_speed_min(double alpha) const {
  const double a2 = alpha * alpha;
  return s_min_ * std::sqrt((a2 + epsilon_) / (a2 + 1.0));
}

double CSetParams::post_disk_speed_max(double alpha) const {
  const double a2 = alpha * alpha;
  return s_max_ * std::sqrt((a2 - epsilon_ + 2.0) / (a2 + 1.0));
}

double CSetParams::default_delay(const GeometryConfig& geom) const {
  return 0.9 * geom.d() / post_disk_speed_max(geom.alpha());
}

CClause classify_c(const CollisionCoords& c, double alpha, const CSetParams& cp) {
  const double sin_abs = std::abs(c.sin_phi);
  const bool speed_ok = c.s >= cp.s_min() && c.s <= cp.s_max();
  if (sin_abs > alpha && speed_ok) return CClause::NoDisk;
  if (sin_abs < cp.pre_disk_sin_bound(alpha) && c.xi > 0.0 && speed_ok) return CClause::PreDisk;
  if (sin_abs < cp.post_disk_sin_bound(alpha) && c.xi < 0.0 &&
      c.s >= cp.post_disk_speed_min(alpha) && c.s <= cp.post_disk_speed_max(alpha))
    return CClause::PostDisk;
  return CClause::None;
}

bool in_C(const SystemState& state, const CSetParams& cparams) {
  const double alpha = state.geom.alpha();
  if (std::abs(state.disk.omega) > cparams.omega_bound(alpha)) return false;
  for (std::size_t i = 0; i < state.particles.size(); ++i)
    if (classify_c(collision_coords(state, i), alpha, cparams) == CClause::None) return false;
  return true;
}

double hitting_time_C(SystemState& state, RandomStream& rng, const CSetParams& cparams,
                      double delay, std::uint64_t max_events) {
  if (!(delay >= 0.0)) throw DomainError("hitting_time_C: delay must be non-negative");
  const double start = state.clock;
  std::uint64_t used = 0;
  if (delay > 0.0) {
    used = evolve_until(state, rng, nullptr, {.horizon = start + delay, .max_events = max_events})
               .events;
  }
  if (in_C(state, cparams)) return state.clock - start;
  double hit = 0.0;
  evolve_until(
      state, rng,
      [&](const SystemState& s, const EventRecord& e) {
        if (!in_C(s, cparams)) return false;
        hit = e.time - start;
        return true;
      },
      {.max_events = max_events - used});
  return hit;
}

SystemState sample_c_surrogate(const GeometryConfig& geom, const ReservoirParams& params,
                               const CSetParams& cparams, int k_left, int k_right,
                               RandomStream& rng) {
  const double alpha = geom.alpha();
  const double outer = geom.outer_radius();
  const double pi = std::numbers::pi;
  SystemState state{{}, {}, 0.0, geom, params};
  auto place = [&](Half half) {
    // Arc of the half: angles in (pi/2, 3pi/2) on the left, (-pi/2, pi/2) on the right.
    const double angle = (half == Half::Left ? pi : 0.0) + rng.uniform(-0.5 * pi, 0.5 * pi);
    const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
    const double sin_phi = sign * rng.uniform(alpha, 1.0);
    const double speed = rng.uniform(cparams.s_min(), cparams.s_max());
    const double xi = rng.uniform() * chord_length(geom, sin_phi);
    const Kinematic k = from_collision_coords(geom, {outer * angle, half, speed, sin_phi, xi});
    ParticleState p{k.position, k.velocity, half, Contact::Outer};
    if (half == Half::Right) p.position.x = std::max(p.position.x, 0.0);
    else p.position.x = std::min(p.position.x, 0.0);
    state.particles.push_back(p);
  };
  for (int i = 0; i < k_left; ++i) place(Half::Left);
  for (int i = 0; i < k_right; ++i) place(Half::Right);
  const double w = cparams.omega_bound(alpha);
  state.disk.omega = rng.uniform(-w, w);
  state.disk.theta = rng.uniform(0.0, 2.0 * pi);
  return state;
}

SystemState sample_emitted_state(const GeometryConfig& geom, const ReservoirParams& params,
                                 int k_left, int k_right, RandomStream& rng) {
  const double pi = std::numbers::pi;
  const double outer = geom.outer_radius();
  SystemState state{{}, {}, 0.0, geom, params};
  auto place = [&](Half half) {
    const double angle = (half == Half::Left ? pi : 0.0) + rng.uniform(-0.5 * pi, 0.5 * pi);
    Vec2 point{outer * std::cos(angle), outer * std::sin(angle)};
    if (half == Half::Right) point.x = std::max(point.x, 0.0);
    else point.x = std::min(point.x, 0.0);
    state.particles.push_back(emit_at(point, half, sample_emission(params.beta(half), rng)));
  };
  for (int i = 0; i < k_left; ++i) place(Half::Left);
  for (int i = 0; i < k_right; ++i) place(Half::Right);
  return state;
}

}  // namespace diskbath
