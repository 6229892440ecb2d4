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
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "diskbath/dynamics.hpp"
#include "diskbath/geometry.hpp"
#include "diskbath/random.hpp"

namespace diskbath {

/// Complete instantaneous state of the system.
struct SystemState {
  std::vector<ParticleState> particles;
  DiskState disk;
  double clock = 0.0;
  GeometryConfig geom;
  ReservoirParams params;

  std::size_t count(Half half) const;
};

/// Throws InvalidStateError if any particle is stopped, outside its half
/// (tolerance 1e-9 (R+d)), or sits on a wall with zero horizontal velocity.
void validate(const SystemState& state);

/// Speed and incidence sine at an event, plus the disk rim speed.
///
/// The sine is cross(n, direction) with n the surface normal aligned with
/// the motion: pointing into the surface before the event and into the
/// particle domain after it.
struct Kinematics {
  double s;
  double sin_phi;
  double omega;
};

/// One collision. `pre.sin_phi` is the sine of the angle between the incoming
/// velocity and the normal pointing into the surface hit; `post.sin_phi`
/// uses the normal pointing back into the domain. Both are signed
/// counter-clockwise.
struct EventRecord {
  double time;
  int particle;
  SurfaceKind surface;
  Half half;
  Kinematics pre;
  Kinematics post;
};

struct NextEvent {
  int particle;
  SurfaceHit hit;
  double dt;
};

/// Particle with the smallest time to its next surface; ties go to the
/// lower index. Does not modify the state.
NextEvent next_event(const SystemState& state);

/// Moves every particle ballistically by dt and advances theta by omega dt / R.
void advance_ballistic(SystemState& state, double dt);

/// Advances to `event` and applies the interaction law of the hit surface.
EventRecord apply_event(SystemState& state, const NextEvent& event, RandomStream& rng);

/// next_event followed by apply_event.
EventRecord step(SystemState& state, RandomStream& rng);

/// Event-driven integrator that caches each particle's next hit, so only
/// the colliding particle is re-traced per event.
class Simulator {
 public:
  Simulator(SystemState& state, RandomStream& rng);

  const NextEvent& peek() const { return next_; }
  double next_event_time() const { return state_->clock + next_.dt; }
  EventRecord step();
  /// Ballistic advance to absolute time t, which must not pass the next event.
  void advance_to(double t);

 private:
  void select_next();

  SystemState* state_;
  RandomStream* rng_;
  std::vector<double> hit_time_;
  std::vector<SurfaceHit> hit_;
  NextEvent next_{};
};

enum class StopReason { Predicate, Horizon };

inline constexpr std::uint64_t kDefaultEventCap = 1'000'000'000ULL;

struct EvolveOptions {
  /// Absolute clock time at which to stop.
  double horizon = std::numeric_limits<double>::infinity();
  std::uint64_t max_events = kDefaultEventCap;
};

struct EvolveResult {
  StopReason reason;
  std::uint64_t events;
};

using StopPredicate = std::function<bool(const SystemState&, const EventRecord&)>;
using EventObserver = std::function<void(const SystemState&, const EventRecord&)>;

/// Steps until `stop` fires or the next event would pass the horizon, in
/// which case the state is advanced to exactly the horizon. Every applied
/// event is passed to `observe` (if set) before `stop` is consulted.
/// Throws RunawayError once max_events events have been applied.
EvolveResult evolve_until(SystemState& state, RandomStream& rng, const StopPredicate& stop,
                          const EvolveOptions& options = {},
                          const EventObserver& observe = nullptr);

/// Convenience wrapper that records every event.
EvolveResult evolve_until(SystemState& state, RandomStream& rng, const StopPredicate& stop,
                          const EvolveOptions& options, std::vector<EventRecord>& log);

/// Collision coordinates of particle i.
CollisionCoords collision_coords(const SystemState& state, std::size_t i);

/// Time from now of the disk hit of each particle that will reach the disk
/// before the outer circle; nullopt for the others.
std::vector<std::optional<double>> disk_hit_times(const SystemState& state);

/// Latest of the pending disk hits, measured from the current clock; 0 when
/// no particle is heading for the disk.
double compute_t0(const SystemState& state);

/// Tracks the two renewal conditions: every particle present at the start
/// has reached the outer circle, and some particle emitted from the outer
/// circle during the run has hit the disk strictly after t0 and returned to
/// the outer circle.
class StoppingMonitor {
 public:
  explicit StoppingMonitor(const SystemState& start);

  /// Feeds one event; returns true when the renewal time is reached.
  bool observe(const EventRecord& event);

  /// Absolute time of the last pending initial disk hit.
  double t0() const { return t0_; }
  /// Elapsed time from the start to renewal, once reached.
  std::optional<double> tau() const { return tau_; }
  bool all_boundary_hit() const { return remaining_ == 0; }
  bool disk_renewed() const { return disk_renewed_; }

 private:
  double start_;
  double t0_;
  std::vector<bool> boundary_hit_;
  std::vector<bool> emitted_;
  std::vector<bool> hit_disk_after_t0_;
  std::size_t remaining_;
  bool disk_renewed_ = false;
  std::optional<double> tau_;
};

struct TauResult {
  double tau;
  std::uint64_t events;
};

/// Evolves to the renewal time; on return the state sits on a boundary
/// emission.
TauResult run_to_tau(SystemState& state, RandomStream& rng,
                     std::uint64_t max_events = kDefaultEventCap);

/// Waits `delay`, then runs to the next renewal; returns the total elapsed
/// time.
TauResult run_to_tau_after(SystemState& state, RandomStream& rng, double delay,
                           std::uint64_t max_events = kDefaultEventCap);

/// Speed and angle window parameters of the compact set C.
class CSetParams {
 public:
  /// Requires 0 < s_min < s_max and 0 < epsilon < 1.
  CSetParams(double s_min, double s_max, double epsilon);

  /// s_min = 0.2/sqrt(beta_max), s_max = 3/sqrt(beta_min), epsilon = 0.1.
  static CSetParams defaults_for(const ReservoirParams& params);

  double s_min() const { return s_min_; }
  double s_max() const { return s_max_; }
  double epsilon() const { return epsilon_; }

  double omega_bound(double alpha) const;
  /// |sin phi| bound for particles heading for the disk.
  double pre_disk_sin_bound(double alpha) const;
  /// |sin phi| bound, at the outer circle, for particles leaving the disk.
  double post_disk_sin_bound(double alpha) const;
  double post_disk_speed_min(double alpha) const;
  double post_disk_speed_max(double alpha) const;

  /// Waiting time 0.9 d / post_disk_speed_max: shorter than any flight from
  /// the disk to the outer circle that starts in C.
  double default_delay(const GeometryConfig& geom) const;

 private:
  double s_min_;
  double s_max_;
  double epsilon_;
};

/// Which clause of the C definition a particle satisfies.
enum class CClause { None, NoDisk, PreDisk, PostDisk };

CClause classify_c(const CollisionCoords& coords, double alpha, const CSetParams& cparams);

bool in_C(const SystemState& state, const CSetParams& cparams);

/// First time, measured from the start, at which the state is in C after
/// having waited `delay`. With delay == 0 the initial state is checked
/// first. Membership is re-checked at the delay instant and after every
/// event.
double hitting_time_C(SystemState& state, RandomStream& rng, const CSetParams& cparams,
                      double delay, std::uint64_t max_events = kDefaultEventCap);

/// Absolutely continuous surrogate for the uniform law on C: every particle
/// uniform in the no-disk clause (arc position, speed, |sin phi| in
/// (alpha, 1), flown distance along its chord), omega uniform within its
/// bound and theta uniform.
SystemState sample_c_surrogate(const GeometryConfig& geom, const ReservoirParams& params,
                               const CSetParams& cparams, int k_left, int k_right,
                               RandomStream& rng);

/// Particles freshly emitted from uniform boundary points with draws from
/// their baths; disk at rest.
SystemState sample_emitted_state(const GeometryConfig& geom, const ReservoirParams& params,
                                 int k_left, int k_right, RandomStream& rng);

}  // namespace diskbath
