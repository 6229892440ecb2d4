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

#include <cmath>
#include <optional>
#include <string_view>

#include "diskbath/vec2.hpp"

namespace diskbath {

/// Which half of the annulus a particle is confined to.
enum class Half { Left, Right };

enum class SurfaceKind { OuterBoundaryLeft, OuterBoundaryRight, Disk, WallUpper, WallLower };

std::string_view to_string(Half half);
std::string_view to_string(SurfaceKind kind);

constexpr bool is_outer(SurfaceKind k) {
  return k == SurfaceKind::OuterBoundaryLeft || k == SurfaceKind::OuterBoundaryRight;
}
constexpr bool is_wall(SurfaceKind k) {
  return k == SurfaceKind::WallUpper || k == SurfaceKind::WallLower;
}
constexpr SurfaceKind outer_of(Half half) {
  return half == Half::Left ? SurfaceKind::OuterBoundaryLeft : SurfaceKind::OuterBoundaryRight;
}

/// Disk of radius R centred in a circular domain of radius R+d, split into
/// two halves by the wall segments x = 0, R <= |y| <= R+d.
///
/// Only R and d are stored; alpha and l_half are recomputed on access.
class GeometryConfig {
 public:
  /// Throws DomainError unless R > 0 and d > 0.
  GeometryConfig(double disk_radius, double gap);

  double R() const { return radius_; }
  double d() const { return gap_; }
  double outer_radius() const { return radius_ + gap_; }
  /// alpha = R / (R + d): probability that a uniform-sin emission hits the disk.
  double alpha() const { return radius_ / (radius_ + gap_); }
  /// l = sqrt((R+d)^2 - R^2), half of the longest free flight.
  double l_half() const {
    const double outer = radius_ + gap_;
    return std::sqrt((outer - radius_) * (outer + radius_));
  }

  friend bool operator==(const GeometryConfig&, const GeometryConfig&) = default;

 private:
  double radius_;
  double gap_;
};

struct SurfaceHit {
  SurfaceKind surface;
  Vec2 point;
  double distance;
  /// Unit normal pointing into the particle domain.
  Vec2 inward_normal;
};

/// Collision coordinates (r, s, sin phi, xi) of a particle in flight.
///
/// `r` is the arc-length position (R+d)*atan2(y, x) of the reference
/// boundary collision. If the reference collision is in the past (the
/// particle was emitted there and has not hit the disk since), xi >= 0 is
/// the distance flown since it and sin_phi is measured against the inward
/// normal. Otherwise the reference is the future boundary collision, xi < 0
/// is minus the remaining distance, and sin_phi is measured against the
/// outward normal. In both cases cos phi > 0 and
/// sin_phi = cross(normal, direction).
struct CollisionCoords {
  double r;
  Half side;
  double s;
  double sin_phi;
  double xi;
};

/// Previous non-wall contact of a particle.
enum class Contact { None, Outer, Disk };

std::string_view to_string(Contact contact);

struct Kinematic {
  Vec2 position;
  Vec2 velocity;
};

/// Full chord 2(R+d)cos(phi) of the outer circle. |sin_phi| >= 1 -> DomainError.
double chord_length(const GeometryConfig& geom, double sin_phi);

/// Distance from the outer circle to the disk along a ray launched at angle
/// phi to the inward normal, or nullopt if the ray misses the disk. Grazing
/// rays with discriminant below 1e-12 R^2 count as misses.
std::optional<double> disk_entry_distance(const GeometryConfig& geom, double sin_phi);

/// sin(phi') = sin(phi) / alpha, the incidence sine at the disk.
double disk_angle_map(const GeometryConfig& geom, double sin_phi);

/// First strictly-forward intersection with the boundary of the given half.
/// Closed form throughout; ties resolve Disk > Wall > Outer.
SurfaceHit trace_ray(const GeometryConfig& geom, Vec2 origin, Vec2 direction, Half half);

/// Result of following a ray through wall reflections until it meets the
/// outer circle or the disk.
struct ContactLeg {
  SurfaceHit hit;       // final, non-wall surface
  Vec2 direction;       // direction of travel on arrival
  double distance;      // total unfolded path length
  int wall_reflections;
};

ContactLeg trace_to_contact(const GeometryConfig& geom, Vec2 origin, Vec2 direction, Half half);

/// Moves `distance` along `direction`, reflecting specularly off the walls.
Kinematic march(const GeometryConfig& geom, Vec2 origin, Vec2 direction, Half half,
                double distance);

/// Throws InvalidStateError if |v| == 0 or the state is inconsistent with
/// `last` (e.g. last == Disk but the particle is still heading for the disk).
CollisionCoords to_collision_coords(const GeometryConfig& geom, Vec2 x, Vec2 v, Half half,
                                    Contact last);

/// Inverse of to_collision_coords.
Kinematic from_collision_coords(const GeometryConfig& geom, const CollisionCoords& coords);

/// Point on the outer circle at arc-length coordinate r.
Vec2 outer_point(const GeometryConfig& geom, double r);

/// True if p lies in the closed half-annulus of `half`, up to `tol`.
bool in_half_annulus(const GeometryConfig& geom, Vec2 p, Half half, double tol);

}  // namespace diskbath
