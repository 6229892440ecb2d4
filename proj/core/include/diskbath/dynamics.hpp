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

#include <algorithm>

#include "diskbath/geometry.hpp"
#include "diskbath/random.hpp"
#include "diskbath/vec2.hpp"

namespace diskbath {

struct ParticleState {
  Vec2 position;
  Vec2 velocity;
  Half half = Half::Right;
  /// Last collision with the outer circle or the disk; wall bounces are not
  /// recorded.
  Contact last_contact = Contact::None;
};

/// Disk angular state. `omega` is stored as the tangential speed of the rim
/// (length/time), so theta advances at omega / R.
struct DiskState {
  double theta = 0.0;
  double omega = 0.0;
};

/// Inverse temperatures of the left and right heat baths.
class ReservoirParams {
 public:
  /// Throws DomainError unless both are positive and finite.
  ReservoirParams(double beta_left, double beta_right);

  double beta_left() const { return beta_left_; }
  double beta_right() const { return beta_right_; }
  double beta(Half half) const { return half == Half::Left ? beta_left_ : beta_right_; }
  double beta_min() const { return std::min(beta_left_, beta_right_); }
  double beta_max() const { return std::max(beta_left_, beta_right_); }

  friend bool operator==(const ReservoirParams&, const ReservoirParams&) = default;

 private:
  double beta_left_;
  double beta_right_;
};

/// Specular reflection off a vertical wall: negates the horizontal component.
Vec2 wall_reflect(Vec2 v);

struct DiskExchange {
  double v_t;
  double v_perp;
  double omega;
};

/// Particle-disk rule in the disk's outward-normal frame: the particle takes
/// the rim speed as its tangential velocity, the disk takes the particle's
/// tangential velocity, and the normal component flips. Requires v_perp < 0.
DiskExchange disk_interact(double v_t, double v_perp, double omega);

/// Applies disk_interact at the contact point, converting to and from the
/// (tangent, normal) frame there. Tangent is the counter-clockwise direction.
void collide_with_disk(Vec2 contact, Vec2& velocity, double& omega);

struct Emission {
  double speed;
  double sin_phi;
};

/// Draws (s, sin phi) from the boundary flux law of a bath at inverse
/// temperature beta: sin phi ~ U(-1, 1), s with density
/// (4 beta^{3/2}/sqrt(pi)) s^2 exp(-beta s^2) as the norm of three centred
/// Gaussians of variance 1/(2 beta).
Emission sample_emission(double beta, RandomStream& rng);

/// Particle leaving the outer circle at `point` with the given draw.
ParticleState emit_at(Vec2 point, Half half, Emission emission);

/// Absorbs a particle at the outer circle and re-emits it from the same
/// point with a fresh draw from the bath of its half.
ParticleState absorb_and_emit(const ParticleState& p, const ReservoirParams& params,
                              const GeometryConfig& geom, RandomStream& rng);

}  // namespace diskbath
