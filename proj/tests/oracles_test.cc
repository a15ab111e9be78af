// Copyright 2026 The GLDP Reformulation Authors
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

#include <algorithm>

#include "doctest.h"
#include "gldp/builders.h"
#include "gldp/oracles.h"
#include "gldp/reformulate.h"
#include "support/fixtures.h"

namespace gldp::oracle {
namespace {

TEST_CASE("scheduling oracle on small instances") {
  const SchedOracleResult two = SchedOracle({{{3, 0, 10}, {2, 0, 10}}});
  CHECK(two.feasible);
  CHECK(two.optimum == 5);
  const SchedOracleResult one = SchedOracle({{{4, 1, 10}}});
  CHECK(one.optimum == 5);
  const SchedOracleResult three = SchedOracle({{{2, 0, 10}, {3, 1, 10}, {1, 4, 10}}});
  CHECK(three.optimum == 6);
  CHECK(three.witness.sequence == std::vector<int>{0, 1, 2});
  CHECK(three.witness.start == std::vector<double>{0, 2, 5});
}

TEST_CASE("earliest starts respect releases") {
  const SchedulingInstance inst{{{2, 5, 20}, {3, 0, 20}}};
  CHECK(EarliestStarts(inst, {0, 1}) == std::vector<double>{5, 7});
  CHECK(EarliestStarts(inst, {1, 0}) == std::vector<double>{5, 0});
}

TEST_CASE("scheduling oracle enforces the size guard") {
  SchedulingInstance big;
  for (int i = 0; i <= kMaxSchedJobs; ++i) big.jobs.push_back({1, 0, 100});
  CHECK_THROWS_AS(SchedOracle(big), std::invalid_argument);
}

TEST_CASE("scheduling witnesses satisfy every concept") {
  for (int n = 2; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const SchedulingInstance inst = GenerateScheduling(n, seed);
      const SchedOracleResult res = SchedOracle(inst);
      REQUIRE(res.feasible);
      const std::vector<double> point = SchedulePoint(inst, res.witness);
      CHECK(point.back() == res.optimum);
      CHECK(SatisfiesGdp(BuildGp(inst), point));
      CHECK(SatisfiesGdp(BuildGpStrengthened(inst), point));
      CHECK(SatisfiesGdp(BuildIp(inst), point));
    }
  }
}

TEST_CASE("strip oracle examples") {
  const StripOracleResult one = StripOracle({{{4, 3}}, 10, 4});
  CHECK(one.optimum == 4);
  const StripOracleResult side = StripOracle({{{3, 3}, {4, 3}}, 5, 7});
  CHECK(side.optimum == 7);
  const StripOracleResult stack = StripOracle({{{3, 2}, {4, 2}}, 5, 7});
  CHECK(stack.optimum == 4);
  const StripOracleResult squares = StripOracle({{{2, 2}, {2, 2}, {2, 2}}, 6, 6});
  CHECK(squares.optimum == 2);
  for (Relation r : squares.witness.relations) {
    CHECK((r == Relation::kAbove || r == Relation::kBelow));
  }
}

TEST_CASE("strip oracle enforces the size guard") {
  StripInstance big{{}, 10, 0};
  for (int i = 0; i <= kMaxStripRects; ++i) big.rects.push_back({1, 1});
  big.UB = static_cast<double>(big.rects.size());
  CHECK_THROWS_AS(StripOracle(big), std::invalid_argument);
}

TEST_CASE("packing witnesses satisfy every strip variant") {
  for (int n = 2; n <= 4; ++n) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const StripInstance inst = GenerateStrip(n, seed);
      const StripOracleResult res = StripOracle(inst);
      REQUIRE(res.feasible);
      const std::vector<double> point = PackingPoint(inst, res.witness);
      CHECK(point.back() == res.optimum);
      for (StripVariant v : {StripVariant::kOriginal, StripVariant::kSymBreak,
                             StripVariant::kS0, StripVariant::kS1}) {
        CAPTURE(StripVariantName(v));
        CHECK(SatisfiesGdp(BuildStrip(inst, v), point));
      }
    }
  }
}

TEST_CASE("SatisfiesGdp rejects overlaps") {
  const StripInstance inst{{{3, 3}, {4, 3}}, 5, 7};
  // Both rectangles at the origin.
  CHECK_FALSE(SatisfiesGdp(BuildStrip(inst, StripVariant::kOriginal),
                           {0, 0, 3, 3, 4}));
  CHECK(SatisfiesGdp(BuildStrip(inst, StripVariant::kOriginal), {0, 3, 3, 3, 7}));
}

TEST_CASE("interval union hull is the whole box") {
  const GdpModel m = testing::IntervalUnionModel();
  const HullMask hull = HullOracle(m.disjunctions()[0], m.vars(), 20);
  CHECK(hull.grid.size() == 21);
  CHECK(std::all_of(hull.in.begin(), hull.in.end(), [](auto v) { return v == 1; }));
  const MilpModel rhr = ReformulateReaggregatedHull(m, true);
  CHECK(testing::RelaxationMask(rhr, hull) == hull.in);
}

TEST_CASE("single disjunct hull is the disjunct itself") {
  GdpModel m;
  const VarId x = m.AddVar("x", 0, 10);
  const Disjunction d{"d", {{"only", m.AddBool("y"),
                             {LinRow::Ge({{x, 1}}, 2), LinRow::Le({{x, 1}}, 4)}}}};
  const HullMask hull = HullOracle(d, m.vars(), 10);
  for (int k = 0; k < hull.grid.size(); ++k) {
    CHECK(hull.in[k] == (k >= 2 && k <= 4));
  }
}

TEST_CASE("two squares hull is the hexagon") {
  const GdpModel m = testing::TwoSquaresModel();
  const HullMask hull = HullOracle(m.disjunctions()[0], m.vars(), 6);
  auto at = [&](double u, double v) {
    const int i = static_cast<int>(u * 2), j = static_cast<int>(v * 2);
    return hull.in[i * hull.grid.samples() + j];
  };
  CHECK(at(0, 0));
  CHECK(at(3, 3));
  CHECK(at(1.5, 1.5));
  CHECK(at(0, 1));
  CHECK(at(1, 0));
  CHECK(at(2, 1));
  CHECK_FALSE(at(3, 0));
  CHECK_FALSE(at(0, 3));
  CHECK_FALSE(at(2.5, 0.5));
  CHECK_FALSE(at(0.5, 2.5));
  CHECK(MaskMismatchesOutsideBand(hull, hull.in, 0) == 0);
}

TEST_CASE("hull oracle rejects three dimensions") {
  GdpModel m;
  const VarId a = m.AddVar("a", 0, 1), b = m.AddVar("b", 0, 1), c = m.AddVar("c", 0, 1);
  const Disjunction d{"d", {{"p", m.AddBool("p"), {LinRow::Le({{a, 1}, {b, 1}}, 1)}},
                            {"q", m.AddBool("q"), {LinRow::Le({{c, 1}}, 0)}}}};
  CHECK_THROWS_AS(HullOracle(d, m.vars()), std::invalid_argument);
}

TEST_CASE("band mismatch counting ignores points near the boundary") {
  const GdpModel m = testing::IntervalUnionModel();
  GdpModel half;
  const VarId x = half.AddVar("x", 0, 10);
  const Disjunction d{"d", {{"a", half.AddBool("a"), {LinRow::Le({{x, 1}}, 5)}}}};
  const HullMask ref = HullOracle(d, half.vars(), 10);
  std::vector<std::uint8_t> shifted = ref.in;
  shifted[6] = 1;
  CHECK(MaskMismatchesOutsideBand(ref, shifted, 0) == 1);
  CHECK(MaskMismatchesOutsideBand(ref, shifted, 1) == 0);
  shifted[9] = 1;
  CHECK(MaskMismatchesOutsideBand(ref, shifted, 2) == 1);
}

}  // namespace
}  // namespace gldp::oracle
