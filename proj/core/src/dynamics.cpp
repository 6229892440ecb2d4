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

#include "diskbath/dynamics.hpp"

#include <cmath>

#include <fmt/format.h>

#include "diskbath/errors.hpp"

namespace diskbath {

namespace {
// Speeds below this are treated as the excluded stopped state.
constexpr double kMinSpeed = 1e-300;
}  // namespace

ReservoirParams::ReservoirParams(double beta_left, double beta_right)
    : beta_left_(beta_left), beta_right_(beta_right) {
  if (!(beta_left > 0.0) || !std::isfinite(beta_left))
    throw DomainError(fmt::format("beta_left must be positive, got {}", beta_left));
  if (!(beta_right > 0.0) || !std::isfinite(beta_right))
    throw DomainError(fmt::format("beta_right must be positive, got {}", beta_right));
}

Vec2 wall_reflect(Vec2 v) {
  if (v.x == 0.0) throw InvalidStateError("wall_reflect: zero horizontal velocity at the wall");
  return {-v.x, v.y};
}

DiskExchange disk_interact(double v_t, double v_perp, double omega) {
  if (!(v_perp < 0.0))
    throw InvalidStateError(fmt::format("disk_interact: v_perp must be negative, got {}", v_perp));
  return {omega, -v_perp, v_t};
}

void collide_with_disk(Vec2 contact, Vec2& velocity, double& omega) {
  const Vec2 normal = (1.0 / norm(contact)) * contact;
  const Vec2 tangent = perp(normal);
  const DiskExchange out = disk_interact(dot(velocity, tangent), dot(velocity, normal), omega);
  velocity = out.v_t * tangent + out.v_perp * normal;
  omega = out.omega;
}

Emission sample_emission(double beta, RandomStream& rng) {
  if (!(beta > 0.0)) throw DomainError(fmt::format("sample_emission: beta must be positive, got {}", beta));
  const double sigma = 1.0 / std::sqrt(2.0 * beta);
  double speed = 0.0;
  do {
    const double a = rng.normal();
    const double b = rng.normal();
    const double c = rng.normal();
    speed = sigma * std::sqrt(a * a + b * b + c * c);
  } while (!(speed > kMinSpeed));
  const double sin_phi = rng.uniform(-1.0, 1.0);
  return {speed, sin_phi};
}

ParticleState emit_at(Vec2 point, Half half, Emission emission) {
  const Vec2 inward = (-1.0 / norm(point)) * point;
  const double cos_phi = std::sqrt((1.0 - emission.sin_phi) * (1.0 + emission.sin_phi));
  const Vec2 dir = cos_phi * inward + emission.sin_phi * perp(inward);
  return {point, emission.speed * dir, half, Contact::Outer};
}

ParticleState absorb_and_emit(const ParticleState& p, const ReservoirParams& params,
                              const GeometryConfig& geom, RandomStream& rng) {
  const double r = norm(p.position);
  if (std::abs(r - geom.outer_radius()) > 1e-9 * geom.outer_radius())
    throw InvalidStateError(
        fmt::format("absorb_and_emit: particle at radius {} is not on the outer circle", r));
  if (!(dot(p.velocity, p.position) > 0.0))
    throw InvalidStateError("absorb_and_emit: incoming velocity does not point outward");
  return emit_at(p.position, p.half, sample_emission(params.beta(p.half), rng));
}

}  // namespace diskbath
