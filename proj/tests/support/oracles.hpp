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

// Reference implementations used only by tests: they share no code with the
// closed-form solvers they check.

#include <algorithm>
#include <cmath>
#include <optional>

#include "diskbath/geometry.hpp"

namespace diskbath::testing {

struct MarchHit {
  SurfaceKind surface;
  double distance;
};

/// Sphere-traced ray marcher. Far from every surface it advances by the
/// distance to the nearest one; within `h` of a surface it falls back to
/// fixed steps of `h` and reports the first step that leaves the domain,
/// so the distance is accurate to h.
inline MarchHit march_ray(const GeometryConfig& geom, Vec2 o, Vec2 u, Half half, double h) {
  const double R = geom.R();
  const double outer = geom.outer_radius();
  const double side = half == Half::Right ? 1.0 : -1.0;

  auto wall_distance = [&](Vec2 p) {
    const double ay = std::abs(p.y);
    const double dy = ay < R ? R - ay : (ay > outer ? ay - outer : 0.0);
    return std::hypot(p.x, dy);
  };
  auto clearance = [&](Vec2 p) {
    const double r = std::hypot(p.x, p.y);
    return std::min({r - R, outer - r, wall_distance(p)});
  };

  double t = 0.0;
  Vec2 p = o;
  for (long iter = 0; iter < 200'000'000L; ++iter) {
    const double step = std::max(clearance(p), h);
    const Vec2 q = p + step * u;
    const double rq = std::hypot(q.x, q.y);
    // Crossing x = 0 between p and q, at height y_c.
    if (side * q.x < 0.0) {
      const double f = p.x / (p.x - q.x);
      const double yc = p.y + f * (q.y - p.y);
      const double tc = t + f * step;
      if (std::abs(yc) >= R && std::abs(yc) <= outer)
        return {yc >= 0.0 ? SurfaceKind::WallUpper : SurfaceKind::WallLower, tc};
    }
    if (rq < R) return {SurfaceKind::Disk, t + step - 0.5 * std::min(step, h)};
    if (rq > outer) return {outer_of(half), t + step - 0.5 * std::min(step, h)};
    t += step;
    p = q;
  }
  return {outer_of(half), -1.0};
}

}  // namespace diskbath::testing
