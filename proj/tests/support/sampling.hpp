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
#include <numbers>

#include "diskbath/geometry.hpp"
#include "diskbath/random.hpp"

namespace diskbath::testing {

/// Uniform in area over one half annulus.
inline Vec2 random_point(const GeometryConfig& geom, Half half, RandomStream& rng) {
  const double R = geom.R();
  const double outer = geom.outer_radius();
  const double r = std::sqrt(rng.uniform(R * R, outer * outer));
  const double a = rng.uniform(-0.5, 0.5) * std::numbers::pi + (half == Half::Left ? std::numbers::pi : 0.0);
  return {r * std::cos(a), r * std::sin(a)};
}

inline Vec2 random_direction(RandomStream& rng) {
  const double a = rng.uniform(0.0, 2.0 * std::numbers::pi);
  return {std::cos(a), std::sin(a)};
}

}  // namespace diskbath::testing
