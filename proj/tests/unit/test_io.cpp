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

#include <sstream>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "diskbath/io.hpp"

namespace diskbath::io {
namespace {

TEST(Io, DoublesRoundTrip) {
  for (double x : {0.1, 1.0 / 3.0, 2.0 / 3.0 * 1e-300, 123456789.123456789}) {
    EXPECT_EQ(std::stod(format_double(x)), x);
  }
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
}

TEST(Io, FingerprintLine) {
  EXPECT_EQ(fnv1a(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(fingerprint_line(0xabcULL), "# fingerprint=0000000000000abc");
}

TEST(Io, EventRecordSchema) {
  const EventRecord e{1.5, 2, SurfaceKind::Disk, Half::Left, {1.0, 0.25, -0.5}, {0.75, -0.1, 0.3}};
  std::ostringstream out;
  write_event(out, e);
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_EQ(j["t"], 1.5);
  EXPECT_EQ(j["i"], 2);
  EXPECT_EQ(j["surface"], "disk");
  EXPECT_EQ(j["half"], "left");
  EXPECT_EQ(j["s_pre"], 1.0);
  EXPECT_EQ(j["s_post"], 0.75);
  EXPECT_EQ(j["sin_phi_pre"], 0.25);
  EXPECT_EQ(j["sin_phi_post"], -0.1);
  EXPECT_EQ(j["omega_pre"], -0.5);
  EXPECT_EQ(j["omega_post"], 0.3);
  EXPECT_EQ(j.size(), 10u);
}

TEST(Io, TailCsvColumns) {
  TailCurve c{{1.0, 2.0}, {0.5, 0.25}, {0.4, 0.2}, {0.6, 0.3}, {0.1, 0.05}, {2, 1}, 4};
  std::ostringstream out;
  write_tail_csv(out, c);
  EXPECT_EQ(out.str(), "T,p_hat,ci_lo,ci_hi,n\n1,0.5,0.40000000000000002,0.59999999999999998,4\n"
                       "2,0.25,0.20000000000000001,0.29999999999999999,4\n");
}

TEST(Io, FluxCsv) {
  FluxAccumulator f;
  f.absorbed = {2.0, 1.0};
  f.emitted = {1.0, 2.0};
  f.absorptions = {3, 4};
  f.elapsed = 4.0;
  std::ostringstream out;
  write_flux_csv(out, f);
  EXPECT_EQ(out.str(), "reservoir,absorbed,emitted,net_rate,events\nleft,2,1,0.25,3\nright,1,2,-0.25,4\n");
}

TEST(Io, BoundsJson) {
  const std::vector<oracles::BoundReport> reports = {{"K", 4.5, 1e-9, {{"beta", 1.0}}}};
  const auto j = nlohmann::json::parse(bounds_json(reports, 0x10));
  EXPECT_EQ(j["fingerprint"], "0000000000000010");
  ASSERT_EQ(j["bounds"].size(), 1u);
  EXPECT_EQ(j["bounds"][0]["name"], "K");
  EXPECT_EQ(j["bounds"][0]["value"], 4.5);
  EXPECT_EQ(j["bounds"][0]["tol"], 1e-9);
  EXPECT_EQ(j["bounds"][0]["inputs"]["beta"], 1.0);
}

}  // namespace
}  // namespace diskbath::io
