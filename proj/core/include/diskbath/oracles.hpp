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

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diskbath/engine.hpp"
#include "diskbath/geometry.hpp"

namespace diskbath::oracles {

/// A time bound evaluated by quadrature, with the inputs it depends on.
struct BoundReport {
  std::string name;
  double value;
  /// Achieved relative error of the quadrature (0 for closed forms).
  double tol;
  std::vector<std::pair<std::string, double>> inputs;
};

inline constexpr double kDefaultRelTol = 1e-8;

/// Speed density (4 beta^{3/2}/sqrt(pi)) s^2 exp(-beta s^2) of an emission.
double maxwell_pdf(double beta, double s);

/// CDF of the emission speed: erf(sqrt(beta) s) - 2 sqrt(beta/pi) s exp(-beta s^2),
/// switching to the power series for small arguments where the two terms
/// cancel.
double maxwell_cdf(double beta, double s);

/// Upper bound on the mean boundary-to-boundary flight time of a freshly
/// emitted particle, valid for any disk velocity:
///   K = int_{|u|>=alpha} 2l/s rho + int_{|u|<alpha} (l/s + l/(s sqrt(1 - u^2/alpha^2))) rho
/// with u = sin(phi). The square-root singularity at |u| = alpha is removed
/// by u = alpha sin(w).
BoundReport K_bound(double beta, const GeometryConfig& geom, double rel_tol = kDefaultRelTol);

/// K / alpha: mean time for a fresh emission to complete a disk round trip,
/// counting re-emissions from the boundary.
BoundReport hit_bound(const BoundReport& K, const GeometryConfig& geom);

/// Renewal-time bound
///   D = int_0^{asin alpha} 4l/(s cos phi') rho + int_{asin alpha}^{pi/2} 4l/s rho
///       + l/sqrt(beta_min pi) + (1 + alpha) K / alpha.
/// The emission integrals and K use the largest beta in `beta_values`, the
/// slowest bath, which dominates every per-bath value.
BoundReport D_bound(double beta_min, std::span<const double> beta_values,
                    const GeometryConfig& geom, double rel_tol = kDefaultRelTol);

/// D' = 2l / (sqrt(epsilon) s_min) + D.
BoundReport Dprime_bound(const CSetParams& cparams, double beta_min, const GeometryConfig& geom,
                         const BoundReport& D);

struct EmissionMoments {
  double mean;
  double second;
};

/// (2/sqrt(pi beta), 3/(2 beta)); both are re-derived by quadrature and an
/// InvariantViolation is raised if they disagree by more than 1e-10.
EmissionMoments emission_moments(double beta);

}  // namespace diskbath::oracles
