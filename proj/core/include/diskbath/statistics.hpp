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
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace diskbath::stats {

/// Welford accumulator with pairwise merge.
class RunningStats {
 public:
  void add(double x) {
    ++n_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(n_);
    m2_ += delta * (x - mean_);
  }
  void merge(const RunningStats& o);

  std::uint64_t count() const { return n_; }
  double mean() const { return mean_; }
  double variance() const { return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0; }
  double stddev() const { return std::sqrt(variance()); }
  double stderr_mean() const { return n_ > 0 ? stddev() / std::sqrt(static_cast<double>(n_)) : 0.0; }

 private:
  std::uint64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// sup |F_n - F| for a sample against a continuous CDF. Sorts a copy.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

struct Interval {
  double lo;
  double hi;
};

/// Wilson score interval for a binomial proportion (z = 1.96 by default).
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = 1.959963984540054);

struct LineFit {
  double intercept;
  double slope;
  double slope_stderr;
  /// Weighted residual sum of squares.
  double rss;
  std::size_t points;
};

/// Weighted least-squares line y = a + b x. The slope standard error is
/// sqrt(rss / (m - 2) / Sxx_w); with fewer than three points it is zero.
LineFit fit_line(std::span<const double> x, std::span<const double> y,
                 std::span<const double> weights = {});

/// Fits y = a + b x + c x^2 by ordinary least squares; returns {a, b, c}.
std::vector<double> fit_quadratic(std::span<const double> x, std::span<const double> y);

}  // namespace diskbath::stats
