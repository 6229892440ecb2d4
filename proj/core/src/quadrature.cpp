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

#include "diskbath/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include <fmt/format.h>

#include "diskbath/errors.hpp"

namespace diskbath {

namespace {

// Kronrod abscissae (descending) and weights; Gauss weights for the odd
// Kronrod nodes xgk[1], xgk[3], xgk[5] and the centre.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gauss_kronrod15(const Integrand& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(centre);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double fv1[7], fv2[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fv1[j] = f(centre - dx);
    fv2[j] = f(centre + dx);
    kronrod += kWgk[j] * (fv1[j] + fv2[j]);
    if (j % 2 == 1) gauss += kWg[j / 2] * (fv1[j] + fv2[j]);
  }
  const double mean = 0.5 * kronrod;
  double asc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) asc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));

  const double value = kronrod * half;
  double error = std::abs((kronrod - gauss) * half);
  asc *= std::abs(half);
  if (asc != 0.0 && error != 0.0) error = asc * std::min(1.0, std::pow(200.0 * error / asc, 1.5));
  return {a, b, value, error};
}

}  // namespace

QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureOptions& opts) {
  if (a == b) return {0.0, 0.0, 0};
  std::priority_queue<Panel> panels;
  panels.push(gauss_kronrod15(f, a, b));
  double value = panels.top().value;
  double error = panels.top().error;
  int evaluations = 15;
  auto done = [&] { return error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(value)); };
  while (!done()) {
    if (static_cast<int>(panels.size()) >= opts.max_intervals)
      throw ConvergenceError(fmt::format(
          "integrate: {} intervals on [{}, {}] reached error {} for value {}", panels.size(), a, b,
          error, value));
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Interval can no longer be split in floating point.
      throw ConvergenceError(fmt::format("integrate: interval collapsed near {}", mid));
    }
    const Panel left = gauss_kronrod15(f, worst.a, mid);
    const Panel right = gauss_kronrod15(f, mid, worst.b);
    evaluations += 30;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }
  // Re-sum to shed the drift of the incremental updates.
  double total = 0.0;
  double total_error = 0.0;
  while (!panels.empty()) {
    total += panels.top().value;
    total_error += panels.top().error;
    panels.pop();
  }
  return {total, total_error, evaluations};
}

QuadratureResult integrate_to_infinity(const Integrand& f, double a, const QuadratureOptions& opts) {
  return integrate(
      [&f, a](double t) {
        const double one_minus = 1.0 - t;
        const double x = a + t / one_minus;
        const double fx = f(x);
        return fx == 0.0 ? 0.0 : fx / (one_minus * one_minus);
      },
      0.0, 1.0, opts);
}

}  // namespace diskbath
