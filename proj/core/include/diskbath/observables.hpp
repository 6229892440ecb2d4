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

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "diskbath/engine.hpp"
#include "diskbath/random.hpp"
#include "diskbath/statistics.hpp"

namespace diskbath {

/// The physical run parameters shared by every snapshot of an ensemble.
struct PhysicsConfig {
  GeometryConfig geom;
  ReservoirParams params;
  int k_left = 1;
  int k_right = 1;

  int k() const { return k_left + k_right; }
  /// FNV-1a hash of the canonical text form of the parameters.
  std::uint64_t fingerprint() const;
};

/// Snapshots of one long trajectory, stored flat.
class SteadyEnsemble {
 public:
  SteadyEnsemble(PhysicsConfig config, double burn_in, double spacing);

  void push(const SystemState& state);
  /// Appends another shard with the same fingerprint.
  void append(const SteadyEnsemble& other);

  std::size_t size() const { return clocks_.size(); }
  bool empty() const { return clocks_.empty(); }
  SystemState state(std::size_t j) const;
  double clock(std::size_t j) const { return clocks_[j]; }
  const DiskState& disk(std::size_t j) const { return disks_[j]; }
  std::span<const ParticleState> particles(std::size_t j) const;

  const PhysicsConfig& config() const { return config_; }
  std::uint64_t fingerprint() const { return fingerprint_; }
  double burn_in() const { return burn_in_; }
  double spacing() const { return spacing_; }

 private:
  PhysicsConfig config_;
  std::uint64_t fingerprint_;
  double burn_in_;
  double spacing_;
  std::vector<double> clocks_;
  std::vector<DiskState> disks_;
  std::vector<ParticleState> particles_;
};

/// Energy bookkeeping of the two baths: kinetic energy s^2/2 absorbed at
/// the outer circle and re-emitted from it.
struct FluxAccumulator {
  std::array<double, 2> absorbed{};
  std::array<double, 2> emitted{};
  std::array<std::uint64_t, 2> absorptions{};
  std::array<std::uint64_t, 2> emissions{};
  double elapsed = 0.0;

  void observe(const EventRecord& event);
  void merge(const FluxAccumulator& other);
  /// (absorbed - emitted) / elapsed: positive when the bath gains energy.
  double net_rate(Half half) const;
};

inline std::size_t index_of(Half half) { return half == Half::Left ? 0 : 1; }

/// Bath energy balance over a logged segment of length `elapsed`.
FluxAccumulator heat_flux(std::span<const EventRecord> log, double elapsed);

/// sum_i s_i^2 / 2 + omega^2 / 2.
double total_energy(const SystemState& state);

struct EnsembleOptions {
  std::size_t n_samples = 1;
  double burn_in = 0.0;
  double spacing = 1.0;
  std::uint64_t max_events = kDefaultEventCap;
};

using SnapshotVisitor = std::function<void(std::size_t index, const SystemState& state)>;

/// Runs one trajectory from freshly emitted particles and hands `visit` the
/// state at exactly burn_in + j * spacing, j = 1 .. n, so that n = 1 with no
/// burn-in gives the time-`spacing` state. Outer-circle events after the
/// burn-in are fed to `flux` if given.
void sample_steady_states(const PhysicsConfig& config, RandomStream& rng,
                          const EnsembleOptions& options, const SnapshotVisitor& visit,
                          FluxAccumulator* flux = nullptr);

/// sample_steady_states, keeping every snapshot.
SteadyEnsemble build_steady_ensemble(const PhysicsConfig& config, RandomStream& rng,
                                     const EnsembleOptions& options,
                                     FluxAccumulator* flux = nullptr);

/// Mean time between consecutive outer-circle collisions of one particle,
/// from a pilot run of length `horizon` after `burn_in`.
double mean_boundary_interval(const PhysicsConfig& config, RandomStream& rng, double burn_in,
                              double horizon);

/// Per particle, the time until its next collision with the outer circle
/// or the disk; wall bounces do not count.
std::vector<double> time_to_first_collision(const SystemState& state);
double max_free_flight(const SystemState& state);
double max_free_flight(const GeometryConfig& geom, std::span<const ParticleState> particles);

/// Estimated P(state in B_T) on a grid of T with Wilson 95% intervals.
struct TailCurve {
  std::vector<double> T_grid;
  std::vector<double> p_hat;
  std::vector<double> ci_lo;
  std::vector<double> ci_hi;
  std::vector<double> ci_half_width;
  std::vector<std::uint64_t> counts;
  std::uint64_t n = 0;
  /// Distinct long flights behind each count. Consecutive snapshots of one
  /// trajectory see the same slow particle many times over, so counts[j]
  /// overstates the information in the far tail; episodes[j] does not.
  std::vector<std::uint64_t> episodes;
};

/// Mergeable counts behind a TailCurve. Snapshots of one trajectory must be
/// added in time order, `spacing` apart; a snapshot in B_T opens a new
/// episode unless the previous one was already in B_{T + spacing}. The
/// default spacing treats every snapshot as independent.
class TailCounter {
 public:
  explicit TailCounter(std::vector<double> T_grid,
                       double spacing = std::numeric_limits<double>::infinity());
  void add(double max_flight);
  /// Starts a new trajectory: the next snapshot continues no episode.
  void restart() { previous_ = 0.0; }
  void merge(const TailCounter& other);
  TailCurve curve() const;

 private:
  std::vector<double> grid_;
  double spacing_;
  std::vector<std::uint64_t> counts_;
  std::vector<std::uint64_t> episodes_;
  std::uint64_t n_ = 0;
  double previous_ = 0.0;
};

TailCurve b_t_tail(const SteadyEnsemble& ensemble, std::span<const double> T_grid);

struct PowerLawFit {
  double exponent;
  double std_error;
  double T_lo;
  double T_hi;
  std::size_t points;
};

/// Weighted least-squares slope of log p_hat against log T over grid points
/// in [T_lo, T_hi] with p_hat > 0. Weights are (p_hat / ci_half_width)^2,
/// or uniform when some interval has zero width. Needs five points.
PowerLawFit fit_power_law(const TailCurve& curve, double T_lo, double T_hi);

/// The decade [T_hi / 10, T_hi] ending at the largest grid point backed by
/// at least `min_count` independent episodes.
std::pair<double, double> counted_decade(const TailCurve& curve, std::uint64_t min_count = 50);

/// P(a fresh emission flies longer than T + delay before reaching the disk
/// or the outer circle) by quadrature over sin(phi) of the speed CDF.
double deposit_rate_analytic(double beta, const GeometryConfig& geom, double T, double delay = 0.0);

struct McEstimate {
  double mean;
  double std_error;
  std::uint64_t draws;
};

/// Same probability by tracing emissions. Speeds are drawn from
/// 3 s^2 / c^3 on (0, c) with c = 2(R+d)/(T + delay), the only range that
/// can contribute, and reweighted by the emission density.
McEstimate deposit_rate_mc(double beta, const GeometryConfig& geom, double T, double delay,
                           std::uint64_t draws, RandomStream& rng);

/// (4/3) beta^{3/2} / sqrt(pi) * d^3 / (T + delay)^3, the leading term of
/// the lower bound restricted to flights of length at least d.
double deposit_leading_term(double beta, const GeometryConfig& geom, double T, double delay = 0.0);

/// Mergeable histogram over a fixed box; out-of-range values land in the
/// edge bins.
class Histogram {
 public:
  struct Axis {
    double lo;
    double hi;
    int bins;
  };

  explicit Histogram(std::vector<Axis> axes);

  void add(std::span<const double> values, double weight = 1.0);
  void merge(const Histogram& other);
  double mass() const { return mass_; }
  const std::vector<double>& cells() const { return cells_; }
  const std::vector<Axis>& axes() const { return axes_; }

 private:
  std::vector<Axis> axes_;
  std::vector<double> cells_;
  double mass_ = 0.0;
};

/// (1/2) sum |p_a - p_b| over the normalised cells.
double tv_distance(const Histogram& a, const Histogram& b);

enum class Marginal { ParticleTriple, Omega, MaxFreeFlight };

struct Binning {
  int bins = 40;
  double speed_max = 6.0;
  double omega_max = 6.0;
  double flight_max = 100.0;
};

Histogram make_histogram(Marginal marginal, const GeometryConfig& geom, const Binning& binning);
/// Adds the selected marginal of one state; particle triples share the weight.
void accumulate(Histogram& h, const SystemState& state, Marginal marginal, double weight = 1.0);

/// Total-variation distance between the binned marginals of two ensembles:
/// a lower bound on the distance between the underlying laws.
double tv_distance(const SteadyEnsemble& a, const SteadyEnsemble& b, Marginal marginal,
                   const Binning& binning);

/// Reweighting of an ensemble: weight 1 + c on B_{T0}, and the constant on
/// the complement that keeps the mean weight at one.
struct WeightedEnsemble {
  std::vector<double> weights;
  std::vector<bool> in_B0;
  double c;
  double T0;
  /// Fraction of samples in B_{T0}.
  double p0;
};

WeightedEnsemble perturbed_initial(const SteadyEnsemble& ensemble, double c, double T0);

/// The empirical (1 - target) quantile of the max free flight: the T0 with
/// mu-hat(B_T0) closest to `target` from above.
double calibrate_T0(const SteadyEnsemble& ensemble, double target = 1e-2);

struct MixingSeries {
  std::vector<double> t;
  /// lambda_t(B_{T*}) from the weighted samples.
  std::vector<double> lambda_B;
  /// mu-hat(B_{T*}) from the same samples unweighted.
  std::vector<double> mu_B;
  /// lambda_B - mu_B.
  std::vector<double> r;
  /// Max-free-flight marginal TV between the weighted and unweighted laws.
  std::vector<double> tv;
};

/// Evolves every sample independently (sample i uses base.substream(i)) and
/// tracks membership in B_{T*} at each time of t_grid.
MixingSeries evolve_perturbed(const SteadyEnsemble& ensemble, const WeightedEnsemble& lambda,
                              double T_star, std::span<const double> t_grid,
                              const RandomStream& base, const Binning& binning = {});

/// Flight time to the outer circle of one emission from a uniform point of
/// the right half, interacting with a disk of rim speed `omega`.
double sample_flight_time(const GeometryConfig& geom, double beta, double omega, RandomStream& rng);

struct HitSample {
  double time;
  int rounds;
};

/// Emits from the boundary until an emission hits the disk (rim speed drawn
/// from N(0, 1/(2 beta))) and returns to the boundary; reports the total
/// time and the number of emissions used.
HitSample sample_hit_time(const GeometryConfig& geom, double beta, RandomStream& rng);

}  // namespace diskbath
