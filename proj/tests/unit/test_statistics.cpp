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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "diskbath/errors.hpp"
#include "diskbath/random.hpp"
#include "diskbath/statistics.hpp"

namespace diskbath::stats {
namespace {

TEST(RunningStats, MatchesTwoPass) {
  const std::vector<double> xs = {1e9 + 4, 1e9 + 7, 1e9 + 13, 1e9 + 16};
  RunningStats s;
  for (double x : xs) s.add(x);
  EXPECT_DOUBLE_EQ(s.mean(), 1e9 + 10);
  EXPECT_NEAR(s.variance(), 30.0, 1e-6);
  EXPECT_NEAR(s.stderr_mean(), std::sqrt(30.0 / 4.0), 1e-9);
}

TEST(RunningStats, MergeEqualsConcatenation) {
  RandomStream rng(1);
  RunningStats all, a, b;
  for (int i = 0; i < 1000; ++i) {
    const double x = rng.normal();
    all.add(x);
    (i < 300 ? a : b).add(x);
  }
  a.merge(b);
  EXPECT_EQ(a.count(), all.count());
  EXPECT_NEAR(a.mean(), all.mean(), 1e-14);
  EXPECT_NEAR(a.variance(), all.variance(), 1e-12);
  RunningStats empty;
  empty.merge(all);
  EXPECT_EQ(empty.count(), 1000u);
}

TEST(KsStatistic, SmallSampleByHand) {
  // Uniform CDF, samples 0.1, 0.5, 0.6: D = max(1/3-0.1, 0.5-1/3, 2/3-0.5, 0.6-2/3, 1-0.6).
  EXPECT_NEAR(ks_statistic({0.6, 0.1, 0.5}, [](double x) { return x; }), 0.4, 1e-15);
  EXPECT_THROW(ks_statistic({}, [](double x) { return x; }), DomainError);
}

TEST(WilsonInterval, KnownValues) {
  const Interval zero = wilson_interval(0, 10);
  EXPECT_EQ(zero.lo, 0.0);
  const double z2 = 1.959963984540054 * 1.959963984540054;
  EXPECT_NEAR(zero.hi, z2 / (10.0 + z2), 1e-12);
  const Interval half = wilson_interval(50, 100);
  EXPECT_NEAR(0.5 * (half.lo + half.hi), 0.5, 1e-12);
  EXPECT_NEAR(half.hi - half.lo, 2 * 0.0960, 1e-3);
  EXPECT_THROW(wilson_interval(0, 0), DomainError);
}

TEST(FitLine, ExactAndWeighted) {
  const std::vector<double> x = {0, 1, 2, 3, 4};
  std::vector<double> y;
  for (double v : x) y.push_back(2.0 - 0.5 * v);
  const LineFit f = fit_line(x, y);
  EXPECT_NEAR(f.slope, -0.5, 1e-14);
  EXPECT_NEAR(f.intercept, 2.0, 1e-14);
  EXPECT_NEAR(f.slope_stderr, 0.0, 1e-14);

  // An outlier with negligible weight barely moves the fit.
  y[4] += 100.0;
  const std::vector<double> w = {1, 1, 1, 1, 1e-12};
  EXPECT_NEAR(fit_line(x, y, w).slope, -0.5, 1e-6);
  EXPECT_THROW(fit_line(std::vector<double>{1, 1}, std::vector<double>{0, 1}), DomainError);
}

TEST(FitQuadratic, RecoversCoefficients) {
  std::vector<double> x, y;
  for (int i = 0; i < 11; ++i) {
    x.push_back(10.0 + i);
    y.push_back(1.5 - 0.25 * x.back() + 0.125 * x.back() * x.back());
  }
  const auto c = fit_quadratic(x, y);
  EXPECT_NEAR(c[0], 1.5, 1e-9);
  EXPECT_NEAR(c[1], -0.25, 1e-10);
  EXPECT_NEAR(c[2], 0.125, 1e-12);
}

}  // namespace
}  // namespace diskbath::stats
