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

#include "diskbath/statistics.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "diskbath/errors.hpp"

namespace diskbath::stats {

void RunningStats::merge(const RunningStats& o) {
  if (o.n_ == 0) return;
  if (n_ == 0) {
    *this = o;
    return;
  }
  const double na = static_cast<double>(n_);
  const double nb = static_cast<double>(o.n_);
  const double delta = o.mean_ - mean_;
  const double n = na + nb;
  mean_ += delta * nb / n;
  m2_ += o.m2_ + delta * delta * na * nb / n;
  n_ += o.n_;
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw DomainError("ks_statistic: empty sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) throw DomainError("wilson_interval: no trials");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

LineFit fit_line(std::span<const double> x, std::span<const double> y,
                 std::span<const double> weights) {
  const std::size_t m = x.size();
  if (y.size() != m || (!weights.empty() && weights.size() != m))
    throw DomainError("fit_line: mismatched input lengths");
  if (m < 2) throw DomainError("fit_line: need at least two points");
  auto w = [&](std::size_t i) { return weights.empty() ? 1.0 : weights[i]; };
  double sw = 0.0, sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sw += w(i);
    sx += w(i) * x[i];
    sy += w(i) * y[i];
  }
  const double xbar = sx / sw;
  const double ybar = sy / sw;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += w(i) * (x[i] - xbar) * (x[i] - xbar);
    sxy += w(i) * (x[i] - xbar) * (y[i] - ybar);
  }
  if (!(sxx > 0.0)) throw DomainError("fit_line: abscissae are all equal");
  const double slope = sxy / sxx;
  const double intercept = ybar - slope * xbar;
  double rss = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double r = y[i] - intercept - slope * x[i];
    rss += w(i) * r * r;
  }
  const double se = m > 2 ? std::sqrt(rss / static_cast<double>(m - 2) / sxx) : 0.0;
  return {intercept, slope, se, rss, m};
}

std::vector<double> fit_quadratic(std::span<const double> x, std::span<const double> y) {
  const std::size_t m = x.size();
  if (y.size() != m || m < 3) throw DomainError("fit_quadratic: need three or more points");
  // Normal equations on centred, scaled abscissae for conditioning.
  double lo = *std::min_element(x.begin(), x.end());
  double hi = *std::max_element(x.begin(), x.end());
  const double mid = 0.5 * (lo + hi);
  const double scale = hi > lo ? 0.5 * (hi - lo) : 1.0;
  double a[3][4] = {};
  for (std::size_t i = 0; i < m; ++i) {
    const double t = (x[i] - mid) / scale;
    const double basis[3] = {1.0, t, t * t};
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) a[r][c] += basis[r] * basis[c];
      a[r][3] += basis[r] * y[i];
    }
  }
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    for (int c = 0; c < 4; ++c) std::swap(a[col][c], a[pivot][c]);
    if (a[col][col] == 0.0) throw DomainError("fit_quadratic: singular system");
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
    }
  }
  const double c0 = a[0][3] / a[0][0];
  const double c1 = a[1][3] / a[1][1];
  const double c2 = a[2][3] / a[2][2];
  // Undo t = (x - mid) / scale.
  const double q = c2 / (scale * scale);
  const double b = c1 / scale - 2.0 * q * mid;
  const double c = c0 - c1 * mid / scale + q * mid * mid;
  return {c, b, q};
}

}  // namespace diskbath::stats
