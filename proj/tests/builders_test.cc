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

#include "doctest.h"
#include "gldp/branch_and_bound.h"
#include "gldp/builders.h"
#include "gldp/oracles.h"
#include "gldp/reformulate.h"

namespace gldp {
namespace {

double Optimum(const GdpModel& gdp, Reformulation r) {
  const SolveResult res = SolveBranchAndBound(Reformulate(gdp, r, true));
  REQUIRE(res.status == SolveStatus::kOptimal);
  return res.incumbent;
}

SchedulingInstance ThreeJobs() {
  return {{{2, 0, 10}, {3, 1, 10}, {1, 4, 10}}};
}

TEST_CASE("CheckInstance names the offending job or rectangle") {
  try {
    CheckInstance(SchedulingInstance{{{1, 0, 5}, {5, 0, 4}}});
    FAIL("expected InstanceError");
  } catch (const InstanceError& e) {
    CHECK(e.index() == 1);
  }
  try {
    CheckInstance(StripInstance{{{2, 3}, {1, 11}}, 10, 5});
    FAIL("expected InstanceError");
  } catch (const InstanceError& e) {
    CHECK(e.index() == 1);
  }
  CHECK_THROWS_AS(CheckInstance(StripInstance{{{6, 3}}, 10, 5}), InstanceError);
  CHECK_THROWS_AS(BuildGp(SchedulingInstance{{{5, 0, 4}}}), InstanceError);
}

TEST_CASE("general precedence structure for two jobs") {
  const SchedulingInstance inst{{{3, 0, 10}, {2, 0, 10}}};
  const GdpModel gp = BuildGp(inst);
  CHECK(gp.disjunctions().size() == 1);
  CHECK(gp.num_bools() == 2);
  CHECK(gp.var(VarId{0}).lower == 0);
  CHECK(gp.var(VarId{0}).upper == 7);
  const auto [lo, hi] = MakespanBox(inst);
  CHECK(lo == 3);
  CHECK(hi == 5);
  for (Reformulation r : {Reformulation::kBigM, Reformulation::kHull}) {
    CHECK(Optimum(gp, r) == doctest::Approx(5));
  }
}

TEST_CASE("strengthened precedence bounds the difference on both sides") {
  const GdpModel gps = BuildGpStrengthened(SchedulingInstance{{{3, 0, 10}, {2, 0, 10}}});
  const Disjunct first = CanonicalizeRows(gps.disjunctions()[0].disjuncts[0]);
  const VarId x1{0}, x2{1};
  REQUIRE(first.rows.size() == 2);
  // -8 <= x1 - x2 <= min(-3, 7 - 0)
  CHECK(first.rows[0] == LinRow::Le({{x1, -1}, {x2, 1}}, 8));
  CHECK(first.rows[1] == LinRow::Le({{x1, 1}, {x2, -1}}, -3));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const GdpModel model = BuildGpStrengthened(GenerateScheduling(5, seed));
    for (const Disjunction& d : model.disjunctions()) {
      CHECK(SharedLhs(d));
    }
  }
}

TEST_CASE("single job needs no disjunctions") {
  const SchedulingInstance inst{{{4, 1, 10}}};
  const GdpModel gp = BuildGp(inst);
  CHECK(gp.disjunctions().empty());
  CHECK(Optimum(gp, Reformulation::kBigM) == doctest::Approx(5));
  CHECK(Optimum(BuildTs(inst), Reformulation::kHull) == doctest::Approx(5));
  CHECK_THROWS_AS(BuildIp(inst), InstanceError);
}

TEST_CASE("every scheduling concept finds makespan 6 on three jobs") {
  for (Concept c : {Concept::kGP, Concept::kGPStrengthened, Concept::kIP, Concept::kTS}) {
    const GdpModel gdp = BuildScheduling(ThreeJobs(), c);
    for (Reformulation r : {Reformulation::kBigM, Reformulation::kHull,
                            Reformulation::kReaggregatedHull}) {
      if (c == Concept::kIP && r == Reformulation::kReaggregatedHull) continue;
      CAPTURE(ConceptName(c));
      CAPTURE(ReformulationName(r));
      CHECK(Optimum(gdp, r) == doctest::Approx(6));
    }
  }
}

TEST_CASE("immediate precedence carries first/last logic") {
  const GdpModel ip = BuildIp(ThreeJobs());
  CHECK(ip.logic().size() >= 3);
  bool any_unshared = false;
  for (const Disjunction& d : ip.disjunctions()) any_unshared |= !SharedLhs(d);
  CHECK(any_unshared);
  const GdpModel two = BuildIp(SchedulingInstance{{{3, 0, 10}, {2, 0, 10}}});
  CHECK(Optimum(two, Reformulation::kBigM) == doctest::Approx(5));
}

TEST_CASE("time slots share left-hand sides") {
  const GdpModel ts = BuildTs(GenerateScheduling(5, 2));
  CHECK(ts.num_vars() == 6);
  CHECK(ts.disjunctions().size() == 5);
  for (const Disjunction& d : ts.disjunctions()) {
    CHECK(d.disjuncts.size() == 5);
    CHECK(SharedLhs(d));
  }
}

TEST_CASE("strip examples") {
  const StripInstance stack{{{3, 2}, {4, 2}}, 5, 7};
  const StripInstance side{{{3, 3}, {4, 3}}, 5, 7};
  for (StripVariant v : {StripVariant::kOriginal, StripVariant::kSymBreak,
                         StripVariant::kS0, StripVariant::kS1}) {
    CAPTURE(StripVariantName(v));
    for (Reformulation r : {Reformulation::kBigM, Reformulation::kHull,
                            Reformulation::kReaggregatedHull}) {
      CHECK(Optimum(BuildStrip(stack, v), r) == doctest::Approx(4));
      CHECK(Optimum(BuildStrip(side, v), r) == doctest::Approx(7));
    }
  }
  const GdpModel one = BuildStrip(StripInstance{{{4, 3}}, 10, 4}, StripVariant::kS0);
  CHECK(one.disjunctions().empty());
  CHECK(Optimum(one, Reformulation::kBigM) == doctest::Approx(4));
}

TEST_CASE("aligned strip variants share left-hand sides") {
  const StripInstance inst = GenerateStrip(4, 9);
  for (StripVariant v : {StripVariant::kS0, StripVariant::kS1}) {
    const GdpModel model = BuildStrip(inst, v);
    for (const Disjunction& d : model.disjunctions()) {
      CHECK(d.disjuncts.size() == 4);
      CHECK(SharedLhs(d));
    }
  }
  bool any_unshared = false;
  const GdpModel original = BuildStrip(inst, StripVariant::kOriginal);
  for (const Disjunction& d : original.disjunctions()) {
    any_unshared |= !SharedLhs(d);
  }
  CHECK(any_unshared);
}

TEST_CASE("generators are deterministic and valid") {
  for (int n = 1; n <= 8; ++n) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const SchedulingInstance a = GenerateScheduling(n, seed);
      const SchedulingInstance b = GenerateScheduling(n, seed);
      REQUIRE(a.jobs.size() == static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) {
        CHECK(a.jobs[i].p == b.jobs[i].p);
        CHECK(a.jobs[i].r == b.jobs[i].r);
        CHECK(a.jobs[i].d == b.jobs[i].d);
        CHECK(a.jobs[i].p >= 1);
        CHECK(a.jobs[i].p <= 10);
        CHECK(a.jobs[i].r <= 2 * n);
        CHECK(a.jobs[i].r + a.jobs[i].p <= a.jobs[i].d);
      }
      const StripInstance s = GenerateStrip(n, seed);
      const StripInstance t = GenerateStrip(n, seed);
      double sum_l = 0;
      for (int i = 0; i < n; ++i) {
        CHECK(s.rects[i].L == t.rects[i].L);
        CHECK(s.rects[i].H == t.rects[i].H);
        CHECK(s.rects[i].H <= s.W);
        sum_l += s.rects[i].L;
      }
      CHECK(s.W == 10);
      CHECK(s.UB == sum_l);
    }
  }
  int differing = 0;
  for (std::uint64_t seed = 1; seed < 10; ++seed) {
    const SchedulingInstance a = GenerateScheduling(5, 0);
    const SchedulingInstance b = GenerateScheduling(5, seed);
    for (int i = 0; i < 5; ++i) differing += a.jobs[i].p != b.jobs[i].p;
  }
  CHECK(differing > 0);
}

TEST_CASE("generated scheduling instances are feasible") {
  for (int n = 2; n <= 7; ++n) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      CHECK(oracle::SchedOracle(GenerateScheduling(n, seed)).feasible);
    }
  }
}

}  // namespace
}  // namespace gldp
