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

#include <functional>

namespace diskbath {

struct QuadratureResult {
  double value;
  /// Estimated absolute error.
  double error;
  int evaluations;
};

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  int max_intervals = 4000;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 15-point Gauss-Kronrod quadrature on [a, b]: the
/// interval with the largest error estimate is bisected until the total
/// error meets max(abs_tol, rel_tol * |value|). Integrable endpoint
/// singularities are fine as long as f is finite at the Kronrod nodes
/// (which never include the endpoints). Throws ConvergenceError when the
/// interval budget runs out first.
QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureOptions& opts = {});

/// Integral over [a, inf) via the map x = a + t / (1 - t).
QuadratureResult integrate_to_infinity(const Integrand& f, double a,
                                       const QuadratureOptions& opts = {});

}  // namespace diskbath
