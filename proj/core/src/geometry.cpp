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

#include "diskbath/geometry.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "diskbath/errors.hpp"

namespace diskbath {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Grazing disk contacts with discriminant below this fraction of R^2 are
// treated as misses.
constexpr double kTangentialGuard = 1e-12;

}  // namespace

std::string_view to_string(Half half) { return half == Half::Left ? "left" : "right"; }

std::string_view to_string(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::OuterBoundaryLeft: return "outer_left";
    case SurfaceKind::OuterBoundaryRight: return "outer_right";
    case SurfaceKind::Disk: return "disk";
    case SurfaceKind::WallUpper: return "wall_upper";
    case SurfaceKind::WallLower: return "wall_lower";
  }
  return "?";
}

std::string_view to_string(Contact contact) {
  switch (contact) {
    case Contact::None: return "none";
    case Contact::Outer: return "outer";
    case Contact::Disk: return "disk";
  }
  return "?";
}

GeometryConfig::GeometryConfig(double disk_radius, double gap) : radius_(disk_radius), gap_(gap) {
  if (!(disk_radius > 0.0) || !std::isfinite(disk_radius))
    throw DomainError(fmt::format("disk radius must be positive, got {}", disk_radius));
  if (!(gap > 0.0) || !std::isfinite(gap))
    throw DomainError(fmt::format("annulus gap must be positive, got {}", gap));
}

double chord_length(const GeometryConfig& geom, double sin_phi) {
  if (!(std::abs(sin_phi) < 1.0))
    throw DomainError(fmt::format("chord_length: |sin_phi| must be < 1, got {}", sin_phi));
  return 2.0 * geom.outer_radius() * std::sqrt((1.0 - sin_phi) * (1.0 + sin_phi));
}

std::optional<double> disk_entry_distance(const GeometryConfig& geom, double sin_phi) {
  if (!(std::abs(sin_phi) < 1.0))
    throw DomainError(fmt::format("disk_entry_distance: |sin_phi| must be < 1, got {}", sin_phi));
  const double outer = geom.outer_radius();
  const double R = geom.R();
  const double perp = outer * sin_phi;
  const double disc = (R - perp) * (R + perp);
  if (disc <= kTangentialGuard * R * R) return std::nullopt;
  // Ray from the boundary: t^2 + 2bt + c = 0 with b = -(R+d)cos(phi) and
  // c = (R+d)^2 - R^2. Near root c / (-b + sqrt(disc)) avoids cancellation.
  const double b = -outer * std::sqrt((1.0 - sin_phi) * (1.0 + sin_phi));
  const double c = (outer - R) * (outer + R);
  return c / (-b + std::sqrt(disc));
}

double disk_angle_map(const GeometryConfig& geom, double sin_phi) {
  const double alpha = geom.alpha();
  if (std::abs(sin_phi) > alpha)
    throw DomainError(
        fmt::format("disk_angle_map: |sin_phi| = {} exceeds alpha = {}", std::abs(sin_phi), alpha));
  return sin_phi / alpha;
}

SurfaceHit trace_ray(const GeometryConfig& geom, Vec2 o, Vec2 u, Half half) {
  const double R = geom.R();
  const double outer = geom.outer_radius();
  const double b = dot(o, u);
  const double r2 = norm2(o);

  // Disk: only when moving toward the centre.
  double t_disk = kInf;
  if (b < 0.0) {
    const double c = r2 - R * R;
    const double disc = b * b - c;
    if (disc > kTangentialGuard * R * R) {
      const double t = c / (-b + std::sqrt(disc));
      if (t >= 0.0) t_disk = t;
    }
  }

  // Wall x = 0; clamped at zero so a particle that has drifted across by
  // rounding reflects immediately instead of tunnelling.
  double t_wall = kInf;
  if (half == Half::Right && u.x < 0.0) {
    t_wall = std::max(o.x, 0.0) / -u.x;
  } else if (half == Half::Left && u.x > 0.0) {
    t_wall = std::max(-o.x, 0.0) / u.x;
  }

  // Outer circle: the far root, since the origin is inside.
  const double c_out = r2 - outer * outer;
  const double disc_out = std::max(b * b - c_out, 0.0);
  const double t_outer =
      b < 0.0 ? -b + std::sqrt(disc_out) : -c_out / (b + std::sqrt(disc_out));

  if (t_disk <= t_wall && t_disk <= t_outer) {
    const Vec2 p = o + t_disk * u;
    const double len = norm(p);
    return {SurfaceKind::Disk, p, t_disk, (1.0 / len) * p};
  }
  if (t_wall <= t_outer) {
    Vec2 p = o + t_wall * u;
    p.x = 0.0;
    const Vec2 normal = half == Half::Right ? Vec2{1.0, 0.0} : Vec2{-1.0, 0.0};
    return {p.y >= 0.0 ? SurfaceKind::WallUpper : SurfaceKind::WallLower, p, t_wall, normal};
  }
  if (!std::isfinite(t_outer))
    throw InvariantViolation("trace_ray: no boundary intersection found");
  const Vec2 p = o + std::max(t_outer, 0.0) * u;
  const double len = norm(p);
  return {outer_of(half), p, std::max(t_outer, 0.0), (-1.0 / len) * p};
}

ContactLeg trace_to_contact(const GeometryConfig& geom, Vec2 origin, Vec2 direction, Half half) {
  ContactLeg leg{{}, direction, 0.0, 0};
  Vec2 p = origin;
  // A straight unfolded chord crosses x = 0 at most once; allow a margin.
  for (int i = 0; i < 8; ++i) {
    const SurfaceHit hit = trace_ray(geom, p, leg.direction, half);
    leg.distance += hit.distance;
    if (!is_wall(hit.surface)) {
      leg.hit = hit;
      return leg;
    }
    p = hit.point;
    leg.direction.x = -leg.direction.x;
    ++leg.wall_reflections;
  }
  throw InvariantViolation("trace_to_contact: too many wall reflections");
}

Kinematic march(const GeometryConfig& geom, Vec2 origin, Vec2 direction, Half half,
                double distance) {
  Vec2 p = origin;
  Vec2 u = direction;
  double remaining = distance;
  for (int i = 0; i < 8; ++i) {
    const SurfaceHit hit = trace_ray(geom, p, u, half);
    if (!is_wall(hit.surface) || hit.distance >= remaining) {
      return {p + remaining * u, u};
    }
    p = hit.point;
    u.x = -u.x;
    remaining -= hit.distance;
  }
  throw InvariantViolation("march: too many wall reflections");
}

Vec2 outer_point(const GeometryConfig& geom, double r) {
  const double outer = geom.outer_radius();
  const double angle = r / outer;
  return {outer * std::cos(angle), outer * std::sin(angle)};
}

CollisionCoords to_collision_coords(const GeometryConfig& geom, Vec2 x, Vec2 v, Half half,
                                    Contact last) {
  const double s = norm(v);
  if (!(s > 0.0)) throw InvalidStateError("to_collision_coords: zero velocity");
  const Vec2 u = (1.0 / s) * v;
  const double outer = geom.outer_radius();

  bool past = last == Contact::Outer;
  std::optional<ContactLeg> back;
  if (last == Contact::None) {
    back = trace_to_contact(geom, x, -u, half);
    past = is_outer(back->hit.surface);
  }

  if (past) {
    if (!back) back = trace_to_contact(geom, x, -u, half);
    if (!is_outer(back->hit.surface))
      throw InvalidStateError("to_collision_coords: past boundary collision hidden behind disk");
    const Vec2 p = back->hit.point;
    const Vec2 emitted = -back->direction;
    const Vec2 inward = (-1.0 / norm(p)) * p;
    return {outer * std::atan2(p.y, p.x), half, s, cross(inward, emitted), back->distance};
  }

  const ContactLeg fwd = trace_to_contact(geom, x, u, half);
  if (!is_outer(fwd.hit.surface))
    throw InvalidStateError("to_collision_coords: post-disk particle heading for the disk");
  const Vec2 p = fwd.hit.point;
  const Vec2 outward = (1.0 / norm(p)) * p;
  return {outer * std::atan2(p.y, p.x), half, s, cross(outward, fwd.direction), -fwd.distance};
}

Kinematic from_collision_coords(const GeometryConfig& geom, const CollisionCoords& c) {
  const Vec2 p = outer_point(geom, c.r);
  const double cos_phi = std::sqrt((1.0 - c.sin_phi) * (1.0 + c.sin_phi));
  if (c.xi >= 0.0) {
    const Vec2 inward = (-1.0 / norm(p)) * p;
    const Vec2 w = cos_phi * inward + c.sin_phi * perp(inward);
    const Kinematic k = march(geom, p, w, c.side, c.xi);
    return {k.position, c.s * k.velocity};
  }
  const Vec2 outward = (1.0 / norm(p)) * p;
  const Vec2 w = cos_phi * outward + c.sin_phi * perp(outward);
  const Kinematic k = march(geom, p, -w, c.side, -c.xi);
  return {k.position, -c.s * k.velocity};
}

bool in_half_annulus(const GeometryConfig& geom, Vec2 p, Half half, double tol) {
  const double r = norm(p);
  if (r < geom.R() - tol || r > geom.outer_radius() + tol) return false;
  return half == Half::Right ? p.x >= -tol : p.x <= tol;
}

}  // namespace diskbath
