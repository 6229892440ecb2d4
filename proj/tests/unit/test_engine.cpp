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

#include "diskbath/engine.hpp"
#include "diskbath/errors.hpp"

namespace diskbath {
namespace {

const GeometryConfig kUnit(1.0, 1.0);
const ReservoirParams kEq(1.0, 1.0);

SystemState single(Vec2 x, Vec2 v, Half half = Half::Right, Contact last = Contact::None) {
  return {{{x, v, half, last}}, {}, 0.0, kUnit, kEq};
}

TEST(NextEvent, RadialShotHitsTheDisk) {
  const NextEvent e = next_event(single({2.0, 0.0}, {-1.0, 0.0}));
  EXPECT_EQ(e.particle, 0);
  EXPECT_EQ(e.hit.surface, SurfaceKind::Disk);
  EXPECT_NEAR(e.dt, 1.0, 1e-15);
}

TEST(NextEvent, EarliestParticleWins) {
  SystemState s = single({2.0, 0.0}, {-0.8, 0.6});
  s.particles.push_back({{0.0, 1.5}, {0.8, 0.6}, Half::Right, Contact::None});
  const NextEvent e = next_event(s);
  EXPECT_EQ(e.particle, 1);
  EXPECT_NEAR(e.dt, 0.7, 1e-14);
}

TEST(NextEvent, TiesGoToTheLowerIndex) {
  SystemState s = single({2.0, 0.0}, {-1.0, 0.0});
  s.particles.push_back({{-2.0, 0.0}, {1.0, 0.0}, Half::Left, Contact::None});
  EXPECT_EQ(next_event(s).particle, 0);
  RandomStream rng(1);
  Simulator sim(s, rng);
  EXPECT_EQ(sim.peek().particle, 0);
}

TEST(Step, RadialRoundTrip) {
  SystemState s = single({2.0, 0.0}, {-1.0, 0.0});
  RandomStream rng(2);
  const EventRecord a = step(s, rng);
  EXPECT_EQ(a.surface, SurfaceKind::Disk);
  EXPECT_NEAR(a.time, 1.0, 1e-15);
  EXPECT_NEAR(s.particles[0].velocity.x, 1.0, 1e-15);
  EXPECT_NEAR(s.particles[0].velocity.y, 0.0, 1e-15);
  EXPECT_EQ(s.disk.omega, 0.0);
  const EventRecord b = step(s, rng);
  EXPECT_EQ(b.surface, SurfaceKind::OuterBoundaryRight);
  EXPECT_NEAR(s.clock, 2.0, 1e-15);
  EXPECT_NEAR(s.particles[0].position.x, 2.0, 1e-15);
  EXPECT_NEAR(s.particles[0].position.y, 0.0, 1e-15);
  EXPECT_EQ(s.particles[0].last_contact, Contact::Outer);
}

TEST(Step, RecordsIncidenceKinematics) {
  SystemState s = single({2.0, 0.0}, {-0.8, 0.6});
  RandomStream rng(3);
  const EventRecord e = step(s, rng);
  EXPECT_EQ(e.surface, SurfaceKind::WallUpper);
  EXPECT_NEAR(e.pre.s, 1.0, 1e-15);
  EXPECT_NEAR(e.post.s, 1.0, 1e-15);
  EXPECT_NEAR(std::abs(e.pre.sin_phi), 0.6, 1e-15);
  // Specular: the incoming sine is taken against the surface, the outgoing
  // one against the domain, so the two differ only in sign.
  EXPECT_NEAR(e.pre.sin_phi, -e.post.sin_phi, 1e-15);
}

SystemState equilibrium(int kl, int kr, std::uint64_t seed) {
  RandomStream rng(seed, 99);
  return sample_emitted_state(kUnit, kEq, kl, kr, rng);
}

TEST(Simulator, MatchesPlainStepping) {
  SystemState a = equilibrium(2, 1, 4);
  SystemState b = a;
  RandomStream ra(5), rb(5);
  Simulator sim(b, rb);
  for (int i = 0; i < 2000; ++i) {
    const EventRecord ea = step(a, ra);
    const EventRecord eb = sim.step();
    ASSERT_EQ(ea.particle, eb.particle) << i;
    ASSERT_EQ(ea.surface, eb.surface) << i;
    ASSERT_NEAR(ea.time, eb.time, 1e-9 * (1.0 + ea.time)) << i;
  }
}

TEST(Engine, InvariantsOverALongRun) {
  SystemState s = equilibrium(2, 2, 6);
  s.params = ReservoirParams(1.0, 3.0);
  RandomStream rng(7);
  const double tol = 1e-9 * kUnit.outer_radius();
  std::vector<int> disk_hits(s.particles.size(), 0);
  double last = s.clock;
  Simulator sim(s, rng);
  for (int i = 0; i < 200000; ++i) {
    const EventRecord e = sim.step();
    ASSERT_GT(e.time, last);
    last = e.time;
    const auto k = static_cast<std::size_t>(e.particle);
    if (e.surface == SurfaceKind::Disk) {
      ASSERT_LE(++disk_hits[k], 1) << "second disk hit before the boundary";
      const double before = e.pre.s * e.pre.s + e.pre.omega * e.pre.omega;
      const double after = e.post.s * e.post.s + e.post.omega * e.post.omega;
      ASSERT_NEAR(after, before, 1e-12 * before);
    } else if (is_outer(e.surface)) {
      disk_hits[k] = 0;
    } else {
      ASSERT_EQ(e.pre.s, e.post.s);
    }
    for (const ParticleState& p : s.particles)
      ASSERT_TRUE(in_half_annulus(kUnit, p.position, p.half, tol));
  }
  EXPECT_EQ(s.count(Half::Left), 2u);
  EXPECT_EQ(s.count(Half::Right), 2u);
}

TEST(Engine, ReplayIsBitIdentical) {
  auto run = [] {
    SystemState s = equilibrium(1, 1, 8);
    RandomStream rng(9);
    std::vector<EventRecord> log;
    evolve_until(s, rng, nullptr, {.horizon = 200.0}, log);
    return log;
  };
  const auto a = run();
  const auto b = run();
  ASSERT_EQ(a.size(), b.size());
  ASSERT_GT(a.size(), 100u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    ASSERT_EQ(a[i].time, b[i].time);
    ASSERT_EQ(a[i].post.s, b[i].post.s);
    ASSERT_EQ(a[i].post.omega, b[i].post.omega);
  }
}

TEST(EvolveUntil, StopsOnThePredicateEvent) {
  SystemState s = equilibrium(1, 1, 10);
  RandomStream rng(11);
  std::vector<EventRecord> log;
  const EvolveResult r = evolve_until(
      s, rng,
      [](const SystemState&, const EventRecord& e) { return e.particle == 0 && is_outer(e.surface); },
      {}, log);
  EXPECT_EQ(r.reason, StopReason::Predicate);
  EXPECT_EQ(r.events, log.size());
  EXPECT_EQ(log.back().particle, 0);
  EXPECT_TRUE(is_outer(log.back().surface));
}

TEST(EvolveUntil, HorizonIsExact) {
  SystemState s = equilibrium(1, 1, 12);
  RandomStream rng(13);
  const EvolveResult r = evolve_until(s, rng, nullptr, {.horizon = 10.0});
  EXPECT_EQ(r.reason, StopReason::Horizon);
  EXPECT_EQ(s.clock, 10.0);
  validate(s);
}

TEST(EvolveUntil, EventCapRaises) {
  SystemState s = equilibrium(1, 1, 14);
  RandomStream rng(15);
  EXPECT_THROW(evolve_until(s, rng, [](const SystemState&, const EventRecord&) { return false; },
                            {.max_events = 1000}),
               RunawayError);
  EXPECT_EQ(kDefaultEventCap, 1'000'000'000ULL);
}

TEST(ComputeT0, Examples) {
  EXPECT_NEAR(compute_t0(single({2.0, 0.0}, {-2.0, 0.0})), 0.5, 1e-15);
  EXPECT_EQ(compute_t0(single({2.0, 0.0}, {-0.8, 0.6})), 0.0);
  SystemState s = single({2.0, 0.0}, {-2.0, 0.0});
  s.particles.push_back({{-2.0, 0.0}, {0.8, 0.0}, Half::Left, Contact::None});
  EXPECT_NEAR(compute_t0(s), 1.25, 1e-15);
}

TEST(RunToTau, SingleParticleCompletesADiskCycle) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    SystemState s = single({2.0, 0.0}, {-0.8, 0.6});
    RandomStream rng(seed);
    std::vector<EventRecord> log;
    StoppingMonitor monitor(s);
    evolve_until(s, rng, [&](const SystemState&, const EventRecord& e) { return monitor.observe(e); },
                 {}, log);
    // Reference: last event is a boundary hit whose previous non-wall
    // event was a disk hit preceded by an emission.
    std::vector<SurfaceKind> kinds;
    for (const auto& e : log)
      if (!is_wall(e.surface)) kinds.push_back(e.surface);
    ASSERT_GE(kinds.size(), 3u);
    EXPECT_TRUE(is_outer(kinds.back()));
    EXPECT_EQ(kinds[kinds.size() - 2], SurfaceKind::Disk);
    EXPECT_TRUE(is_outer(kinds[kinds.size() - 3]));
    for (std::size_t i = 0; i + 3 < kinds.size(); ++i)
      EXPECT_FALSE(is_outer(kinds[i]) && kinds[i + 1] == SurfaceKind::Disk && is_outer(kinds[i + 2]));
    EXPECT_NEAR(*monitor.tau(), log.back().time, 1e-12);
  }
}

TEST(RunToTau, WaitsForDiskHitsAlreadyScheduled) {
  // Two particles; the right one reaches the disk at t0 = 1.25, and only a
  // disk hit after t0 by a re-emitted particle renews the disk.
  SystemState s = single({2.0, 0.0}, {-0.8, 0.0});
  s.particles.push_back({{-2.0, 0.0}, {0.5, 0.5}, Half::Left, Contact::None});
  RandomStream rng(16);
  const double t0 = compute_t0(s);
  EXPECT_NEAR(t0, 1.25, 1e-15);
  std::vector<EventRecord> log;
  StoppingMonitor monitor(s);
  evolve_until(s, rng, [&](const SystemState&, const EventRecord& e) { return monitor.observe(e); },
               {}, log);
  const double tau = *monitor.tau();
  EXPECT_GT(tau, t0);
  bool boundary[2] = {false, false};
  for (const auto& e : log)
    if (is_outer(e.surface)) boundary[e.particle] = true;
  EXPECT_TRUE(boundary[0] && boundary[1]);
}

TEST(RunToTauAfter, CountsTheDelay) {
  SystemState a = equilibrium(1, 1, 17);
  SystemState b = a;
  RandomStream ra(18), rb(18);
  const TauResult with = run_to_tau_after(a, ra, 3.0);
  EXPECT_GE(with.tau, 3.0);
  const TauResult without = run_to_tau_after(b, rb, 0.0);
  EXPECT_GT(without.tau, 0.0);
}

const CSetParams kC(0.5, 2.0, 0.1);

TEST(CSet, Bounds) {
  EXPECT_NEAR(kC.omega_bound(0.5), 2.0 * std::sqrt(0.9 / 1.25), 1e-15);
  EXPECT_NEAR(kC.omega_bound(0.5), 1.697, 1e-3);
  EXPECT_NEAR(kC.pre_disk_sin_bound(0.5), 0.5 / std::sqrt(1.25) * std::sqrt(0.9), 1e-15);
  EXPECT_NEAR(kC.pre_disk_sin_bound(0.5), 0.4243, 1e-4);
  EXPECT_NEAR(kC.post_disk_speed_min(0.5), 0.5 * std::sqrt(0.35 / 1.25), 1e-15);
  EXPECT_NEAR(kC.post_disk_speed_max(0.5), 2.0 * std::sqrt(2.15 / 1.25), 1e-15);
  EXPECT_LT(kC.post_disk_sin_bound(0.5), 0.5);
  EXPECT_THROW(CSetParams(1.0, 0.5, 0.1), DomainError);
  EXPECT_THROW(CSetParams(0.5, 1.0, 1.0), DomainError);
}

TEST(CSet, ClauseExamples) {
  EXPECT_EQ(classify_c({0.0, Half::Right, 1.0, 0.6, 0.5}, 0.5, kC), CClause::NoDisk);
  EXPECT_EQ(classify_c({0.0, Half::Right, 1.0, -0.6, -0.5}, 0.5, kC), CClause::NoDisk);
  EXPECT_EQ(classify_c({0.0, Half::Right, 1.0, 0.4, 0.5}, 0.5, kC), CClause::PreDisk);
  EXPECT_EQ(classify_c({0.0, Half::Right, 1.0, 0.45, 0.5}, 0.5, kC), CClause::None);
  EXPECT_EQ(classify_c({0.0, Half::Right, 3.0, 0.6, 0.5}, 0.5, kC), CClause::None);
  EXPECT_EQ(classify_c({0.0, Half::Right, 3.0, 0.4, 0.5}, 0.5, kC), CClause::None);
  EXPECT_EQ(classify_c({0.0, Half::Right, 3.0, 0.1, -0.5}, 0.5, kC), CClause::None);
  EXPECT_EQ(classify_c({0.0, Half::Right, 1.0, 0.1, -0.5}, 0.5, kC), CClause::PostDisk);
}

SystemState from_coords(const CollisionCoords& c, double omega) {
  const Kinematic k = from_collision_coords(kUnit, c);
  SystemState s = single(k.position, k.velocity, c.side, c.xi > 0 ? Contact::Outer : Contact::Disk);
  s.disk.omega = omega;
  return s;
}

TEST(CSet, InCExamples) {
  EXPECT_TRUE(in_C(from_coords({0.2, Half::Right, 1.0, 0.6, 0.3}, 0.3), kC));
  EXPECT_TRUE(in_C(from_coords({0.2, Half::Right, 1.0, 0.4, 0.3}, 0.3), kC));
  EXPECT_FALSE(in_C(from_coords({0.2, Half::Right, 3.0, 0.6, 0.3}, 0.3), kC));
  EXPECT_FALSE(in_C(from_coords({0.2, Half::Right, 1.0, 0.6, 0.3}, 1.8), kC));
}

TEST(HittingTimeC, ZeroWhenAlreadyInside) {
  SystemState s = from_coords({0.2, Half::Right, 1.0, 0.6, 0.3}, 0.3);
  RandomStream rng(19);
  EXPECT_EQ(hitting_time_C(s, rng, kC, 0.0), 0.0);
}

TEST(HittingTimeC, ReturnsAnEventTimeInsideC) {
  RandomStream rng(20);
  const CSetParams cp = CSetParams::defaults_for(kEq);
  for (int i = 0; i < 20; ++i) {
    SystemState s = equilibrium(1, 1, 100 + i);
    s.disk.omega = 10.0;  // far outside the omega bound
    const double t = hitting_time_C(s, rng, cp, 0.5);
    EXPECT_GT(t, 0.5);
    EXPECT_NEAR(s.clock, t, 1e-12);
    EXPECT_TRUE(in_C(s, cp));
  }
}

TEST(CSet, ForwardInvariantBetweenBoundaryHits) {
  RandomStream rng(21);
  const CSetParams cp = CSetParams::defaults_for(kEq);
  for (int start = 0; start < 200; ++start) {
    SystemState s = sample_c_surrogate(kUnit, kEq, cp, 1, 2, rng);
    ASSERT_TRUE(in_C(s, cp));
    bool done = false;
    evolve_until(s, rng, [&](const SystemState& st, const EventRecord& e) {
      if (is_outer(e.surface)) return done = true;
      EXPECT_TRUE(in_C(st, cp));
      return false;
    });
    EXPECT_TRUE(done);
  }
}

TEST(CSet, DefaultDelayIsBelowTheCrossingTime) {
  const CSetParams cp = CSetParams::defaults_for(ReservoirParams(1.0, 2.0));
  EXPECT_NEAR(cp.s_min(), 0.2 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(cp.s_max(), 3.0, 1e-15);
  EXPECT_LT(cp.default_delay(kUnit), kUnit.d() / cp.post_disk_speed_max(kUnit.alpha()));
}

TEST(Validate, RejectsStrayStates) {
  EXPECT_THROW(validate(single({0.5, 0.0}, {1.0, 0.0})), InvalidStateError);
  EXPECT_THROW(validate(single({-1.5, 0.0}, {1.0, 0.0}, Half::Right)), InvalidStateError);
  EXPECT_THROW(validate(single({1.5, 0.0}, {0.0, 0.0})), InvalidStateError);
  EXPECT_NO_THROW(validate(single({1.5, 0.0}, {0.0, 1.0})));
}

}  // namespace
}  // namespace diskbath
