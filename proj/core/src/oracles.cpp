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

#include "diskbath/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "diskbath/errors.hpp"
#include "diskbath/quadrature.hpp"

namespace diskbath::oracles {

namespace {

constexpr double kPi = std::numbers::pi;

void require_beta(double beta, const char* where) {
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw DomainError(fmt::format("{}: beta must be positive, got {}", where, beta));
}

struct Scalar {
  double value;
  double rel_err;
};

Scalar checked(const QuadratureResult& r, double rel_tol, const char* what) {
  const double rel = r.value != 0.0 ? r.error / std::abs(r.value) : r.error;
  if (rel > rel_tol)
    throw ConvergenceError(fmt::format("{}: relative error {} above {}", what, rel, rel_tol));
  return {r.value, rel};
}

/// int_0^inf (1/s) (2 beta^{3/2}/sqrt(pi)) s^2 exp(-beta s^2) ds: the speed
/// factor of the emission law weighted by inverse speed.
Scalar inverse_speed_integral(double beta, double rel_tol) {
  const double norm = 2.0 * std::pow(beta, 1.5) / std::sqrt(kPi);
  const QuadratureResult r = integrate_to_infinity(
      [=](double s) { return norm * s * std::exp(-beta * s * s); }, 0.0,
      {.rel_tol = rel_tol * 0.1});
  return checked(r, rel_tol, "inverse_speed_integral");
}

/// Nested quadrature of angle(w) * speed(s); the inner speed integral is
/// re-evaluated at every outer node.
Scalar angle_speed_integral(const Integrand& angle, double lo, double hi, double beta,
                            double rel_tol) {
  double inner_err = 0.0;
  const QuadratureResult r = integrate(
      [&](double w) {
        const Scalar inner = inverse_speed_integral(beta, rel_tol * 0.1);
        inner_err = std::max(inner_err, inner.rel_err);
        return angle(w) * inner.value;
      },
      lo, hi, {.rel_tol = rel_tol * 0.1});
  const Scalar outer = checked(r, rel_tol, "angle_speed_integral");
  return {outer.value, outer.rel_err + inner_err};
}

std::vector<std::pair<std::string, double>> geometry_inputs(const GeometryConfig& g) {
  return {{"R", g.R()}, {"d", g.d()}, {"alpha", g.alpha()}, {"l", g.l_half()}};
}

}  // namespace

double maxwell_pdf(double beta, double s) {
  require_beta(beta, "maxwell_pdf");
  if (s < 0.0) return 0.0;
  return 4.0 * std::pow(beta, 1.5) / std::sqrt(kPi) * s * s * std::exp(-beta * s * s);
}

double maxwell_cdf(double beta, double s) {
  require_beta(beta, "maxwell_cdf");
  if (s <= 0.0) return 0.0;
  if (std::isinf(s)) return 1.0;
  const double x = std::sqrt(beta) * s;
  if (x < 0.25) {
    // (4/sqrt(pi)) sum_n (-1)^n x^{2n+3} / (n! (2n+3))
    const double x2 = x * x;
    double term = x * x2;  // (-1)^n x^{2n+3} / n!
    double sum = 0.0;
    for (int n = 0; n < 30; ++n) {
      const double add = term / (2 * n + 3);
      sum += add;
      if (std::abs(add) < 1e-18 * std::abs(sum)) break;
      term *= -x2 / (n + 1);
    }
    return 4.0 / std::sqrt(kPi) * sum;
  }
  return std::erf(x) - 2.0 / std::sqrt(kPi) * x * std::exp(-x * x);
}

BoundReport K_bound(double beta, const GeometryConfig& geom, double rel_tol) {
  require_beta(beta, "K_bound");
  const double alpha = geom.alpha();
  const double l = geom.l_half();
  // |u| >= alpha: 2l over u in [alpha, 1] on both sides.
  const Scalar miss = angle_speed_integral([=](double) { return 2.0 * 2.0 * l; }, alpha, 1.0,
                                           beta, rel_tol);
  // |u| < alpha with u = alpha sin(w): (l + l / cos w) alpha cos w dw.
  const Scalar hit = angle_speed_integral(
      [=](double w) { return l * alpha * (std::cos(w) + 1.0); }, -0.5 * kPi, 0.5 * kPi, beta,
      rel_tol);
  const double value = miss.value + hit.value;
  const double err = (miss.value * miss.rel_err + hit.value * hit.rel_err) / value;
  auto inputs = geometry_inputs(geom);
  inputs.emplace_back("beta", beta);
  return {"K", value, err, std::move(inputs)};
}

BoundReport hit_bound(const BoundReport& K, const GeometryConfig& geom) {
  auto inputs = K.inputs;
  return {"K_hit", K.value / geom.alpha(), K.tol, std::move(inputs)};
}

BoundReport D_bound(double beta_min, std::span<const double> beta_values,
                    const GeometryConfig& geom, double rel_tol) {
  require_beta(beta_min, "D_bound");
  if (beta_values.empty()) throw DomainError("D_bound: no reservoir temperatures");
  const double beta = *std::max_element(beta_values.begin(), beta_values.end());
  require_beta(beta, "D_bound");
  const double alpha = geom.alpha();
  const double l = geom.l_half();

  // phi in [0, asin alpha]: u = alpha sin w turns 4l/sqrt(1 - u^2/alpha^2) du into 4 l alpha dw.
  const Scalar hit = angle_speed_integral([=](double) { return 4.0 * l * alpha; }, 0.0,
                                          0.5 * kPi, beta, rel_tol);
  const Scalar miss = angle_speed_integral([=](double) { return 4.0 * l; }, alpha, 1.0, beta,
                                           rel_tol);
  const double disk_term = l / std::sqrt(beta_min * kPi);
  const BoundReport K = K_bound(beta, geom, rel_tol);
  const double k_term = (1.0 + alpha) * K.value / alpha;
  const double value = hit.value + miss.value + disk_term + k_term;
  const double err =
      (hit.value * hit.rel_err + miss.value * miss.rel_err + k_term * K.tol) / value;
  auto inputs = geometry_inputs(geom);
  inputs.emplace_back("beta_min", beta_min);
  inputs.emplace_back("beta_emission", beta);
  inputs.emplace_back("K", K.value);
  return {"D", value, err, std::move(inputs)};
}

BoundReport Dprime_bound(const CSetParams& cparams, double beta_min, const GeometryConfig& geom,
                         const BoundReport& D) {
  require_beta(beta_min, "Dprime_bound");
  const double value =
      2.0 * geom.l_half() / (std::sqrt(cparams.epsilon()) * cparams.s_min()) + D.value;
  auto inputs = geometry_inputs(geom);
  inputs.emplace_back("beta_min", beta_min);
  inputs.emplace_back("s_min", cparams.s_min());
  inputs.emplace_back("s_max", cparams.s_max());
  inputs.emplace_back("epsilon", cparams.epsilon());
  inputs.emplace_back("D", D.value);
  return {"Dprime", value, D.tol * D.value / value, std::move(inputs)};
}

EmissionMoments emission_moments(double beta) {
  require_beta(beta, "emission_moments");
  const EmissionMoments closed{2.0 / std::sqrt(kPi * beta), 1.5 / beta};
  const QuadratureOptions opts{.rel_tol = 1e-13};
  const double mean =
      integrate_to_infinity([=](double s) { return s * maxwell_pdf(beta, s); }, 0.0, opts).value;
  const double second =
      integrate_to_infinity([=](double s) { return s * s * maxwell_pdf(beta, s); }, 0.0, opts).value;
  if (std::abs(mean - closed.mean) > 1e-10 * closed.mean ||
      std::abs(second - closed.second) > 1e-10 * closed.second)
    throw InvariantViolation(fmt::format(
        "emission_moments: quadrature ({}, {}) disagrees with closed form ({}, {})", mean, second,
        closed.mean, closed.second));
  return closed;
}

}  // namespace diskbath::oracles
