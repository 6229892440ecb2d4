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
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <gtest/gtest.h>

#include "diskbath/engine.hpp"
#include "diskbath/errors.hpp"
#include "diskbath/oracles.hpp"

namespace diskbath::oracles {
namespace {

constexpr double kPi = std::numbers::pi;
const GeometryConfig kUnit(1.0, 1.0);

// Independent reference: Boost's adaptive Gauss-Kronrod on the density.
double reference_cdf(double beta, double s) {
  auto pdf = [beta](double x) {
    return 4.0 * std::pow(beta, 1.5) / std::sqrt(kPi) * x * x * std::exp(-beta * x * x);
  };
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(pdf, 0.0, s, 15, 1e-14);
}

// int_0^inf (1/s) (2 beta^{3/2}/sqrt(pi)) s^2 e^{-beta s^2} ds, by hand.
double inverse_speed(double beta) { return std::sqrt(beta / kPi); }

TEST(Maxwell, CdfExamples) {
  EXPECT_EQ(maxwell_cdf(1.0, 0.0), 0.0);
  EXPECT_EQ(maxwell_cdf(1.0, INFINITY), 1.0);
  EXPECT_NEAR(maxwell_cdf(1.0, 50.0), 1.0, 1e-15);
  EXPECT_NEAR(maxwell_cdf(1.0, 1.0), 0.4275932955, 1e-9);
  for (double beta : {0.3, 1.0, 4.0})
    for (double s : {1e-4, 0.01, 0.2, 0.3, 1.0, 2.5})
      EXPECT_NEAR(maxwell_cdf(beta, s), reference_cdf(beta, s), 1e-13 + 1e-10 * reference_cdf(beta, s));
}

TEST(Maxwell, AccurateOnBothSidesOfTheSeriesSwitch) {
  for (double x : {0.25 * (1 - 1e-12), 0.25 * (1 + 1e-12), 1e-3, 1e-6}) {
    const double ref = reference_cdf(1.0, x);
    EXPECT_NEAR(maxwell_cdf(1.0, x), ref, 1e-13 * ref) << x;
  }
}

TEST(Maxwell, PdfIntegratesToOne) {
  auto pdf = [](double s) { return maxwell_pdf(2.0, s); };
  boost::math::quadrature::tanh_sinh<double> ts;
  EXPECT_NEAR(ts.integrate(pdf, 0.0, 30.0), 1.0, 1e-12);
  EXPECT_EQ(maxwell_pdf(1.0, -1.0), 0.0);
  EXPECT_THROW(maxwell_pdf(0.0, 1.0), DomainError);
}

TEST(EmissionMoments, Examples) {
  const EmissionMoments m1 = emission_moments(1.0);
  EXPECT_NEAR(m1.mean, 1.1283792, 1e-7);
  EXPECT_NEAR(m1.second, 1.5, 1e-12);
  EXPECT_NEAR(emission_moments(4.0).mean, 0.5641896, 1e-7);
}

double K_closed(double beta, const GeometryConfig& g) {
  const double a = g.alpha();
  return inverse_speed(beta) * g.l_half() * (4.0 * (1.0 - a) + a * (2.0 + kPi));
}

TEST(KBound, MatchesClosedForm) {
  const BoundReport K = K_bound(1.0, kUnit);
  EXPECT_EQ(K.name, "K");
  EXPECT_NEAR(K.value, K_closed(1.0, kUnit), 1e-8 * K.value);
  EXPECT_NEAR(K.value, 4.4666, 1e-4);
  EXPECT_LE(K.tol, 1e-8);
  const GeometryConfig g(0.3, 2.2);
  EXPECT_NEAR(K_bound(3.0, g).value, K_closed(3.0, g), 1e-8 * K_closed(3.0, g));
}

TEST(KBound, HitBoundDividesByAlpha) {
  const BoundReport K = K_bound(1.0, kUnit);
  const BoundReport H = hit_bound(K, kUnit);
  EXPECT_NEAR(H.value, 2.0 * K.value, 1e-15);
  EXPECT_EQ(H.name, "K_hit");
}

TEST(DBound, MatchesClosedForm) {
  const GeometryConfig g(0.7, 1.3);
  const std::vector<double> betas = {1.0, 2.0};
  const BoundReport D = D_bound(1.0, betas, g);
  const double a = g.alpha();
  const double l = g.l_half();
  const double expected = inverse_speed(2.0) * l * (2.0 * kPi * a + 4.0 * (1.0 - a)) +
                          l / std::sqrt(kPi) + (1.0 + a) * K_closed(2.0, g) / a;
  EXPECT_NEAR(D.value, expected, 1e-8 * expected);
  EXPECT_EQ(D.name, "D");
  EXPECT_THROW(D_bound(1.0, std::vector<double>{}, g), DomainError);
}

TEST(DprimeBound, Example) {
  const std::vector<double> betas = {1.0};
  const BoundReport D = D_bound(1.0, betas, kUnit);
  const BoundReport Dp = Dprime_bound(CSetParams(0.5, 2.0, 0.1), 1.0, kUnit, D);
  EXPECT_NEAR(Dp.value - D.value, 2.0 * std::sqrt(3.0) / (std::sqrt(0.1) * 0.5), 1e-12);
  EXPECT_NEAR(Dp.value - D.value, 21.9089, 1e-4);
  EXPECT_EQ(Dp.name, "Dprime");
}

TEST(BoundReports, CarryTheirInputs) {
  const BoundReport K = K_bound(2.0, kUnit);
  bool has_beta = false;
  for (const auto& [key, value] : K.inputs)
    if (key == "beta") has_beta = value == 2.0;
  EXPECT_TRUE(has_beta);
}

}  // namespace
}  // namespace diskbath::oracles
