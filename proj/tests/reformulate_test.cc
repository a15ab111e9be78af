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
#include <map>
#include <set>
#include <string>
#include <utility>

#include "doctest.h"
#include "gldp/builders.h"
#include "gldp/lp_solver.h"
#include "gldp/reformulate.h"
#include "gldp/text.h"
#include "support/fixtures.h"

namespace gldp {
namespace {

using testing::IntervalUnionModel;
using testing::TwoSquaresModel;

// LP-relaxation range of column `col`.
std::pair<double, double> Projection(MilpModel milp, int col) {
  milp.SetObjective({{col, 1.0}});
  const LpResult lo = SolveLp(milp);
  milp.SetObjective({{col, -1.0}});
  const LpResult hi = SolveLp(milp);
  REQUIRE(lo.status == LpStatus::kOptimal);
  REQUIRE(hi.status == LpStatus::kOptimal);
  return {lo.objective, -hi.objective};
}

bool HasRow(const MilpModel& milp, const std::vector<Term>& terms, Sense sense,
            double rhs) {
  const std::vector<Term> sorted = NormalizeTerms(terms);
  for (const MilpRow& row : milp.rows()) {
    if (row.terms == sorted && row.sense == sense && row.rhs == rhs) return true;
  }
  return false;
}

TEST_CASE("BigMBound is the interval maximum of the violation") {
  std::vector<ContinuousVar> boxes{{"x1", 0, 10}, {"x2", 0, 10}};
  CHECK(BigMBound(LinRow::Le({{VarId{0}, 1}, {VarId{1}, -1}}, -2), boxes) == 12);
  CHECK(BigMBound(LinRow::Le({{VarId{0}, 1}}, 5), {{"x", 0, 4}}) == -1);
}

TEST_CASE("BigMBound matches corner enumeration") {
  const std::vector<ContinuousVar> boxes{{"xi", 0, 20}, {"xj", 0, 20}};
  const LinRow row = LinRow::Le({{VarId{0}, 1}, {VarId{1}, -1}}, -3);
  double best = -1e300;
  for (double a : {0.0, 20.0}) {
    for (double b : {0.0, 20.0}) best = std::max(best, a - b + 3);
  }
  CHECK(best == 23);
  CHECK(BigMBound(row, boxes) == best);
}

TEST_CASE("ComputeBigM clamps slack rows at zero") {
  GdpModel m;
  const VarId x = m.AddVar("x", 0, 4);
  const BoolId a = m.AddBool("a"), b = m.AddBool("b");
  m.AddDisjunction({"d", {{"slack", a, {LinRow::Le({{x, 1}}, 5)}},
                          {"tight", b, {LinRow::Ge({{x, 1}}, 1)}}}});
  const BigMCoeffs m_values = ComputeBigM(m);
  CHECK(m_values.m[0][0][0] == 0);
  CHECK(m_values.m[0][1][0] == 1);
}

TEST_CASE("Big-M rows for the interval union") {
  const MilpModel milp = ReformulateBigM(IntervalUnionModel());
  CHECK(milp.num_columns() == 3);
  CHECK(milp.num_rows() == 3);
  // x <= 2 + 8 (1 - y1) and -x <= -5 + 5 (1 - y2)
  CHECK(HasRow(milp, {{0, 1}, {1, 8}}, Sense::kLe, 10));
  CHECK(HasRow(milp, {{0, -1}, {2, 5}}, Sense::kLe, 0));
  CHECK(HasRow(milp, {{1, 1}, {2, 1}}, Sense::kEq, 1));
}

TEST_CASE("hull rows for the interval union") {
  DisaggVarMap disagg;
  const MilpModel milp = ReformulateHull(IntervalUnionModel(), &disagg);
  REQUIRE(disagg.size() == 2);
  const int h1 = disagg.at({0, 0, 0}), h2 = disagg.at({0, 1, 0});
  CHECK(milp.num_columns() == 5);
  CHECK(milp.column(h1).lower == 0);
  CHECK(milp.column(h1).upper == 10);
  CHECK(HasRow(milp, {{1, -2}, {h1, 1}}, Sense::kLe, 0));
  CHECK(HasRow(milp, {{2, 5}, {h2, -1}}, Sense::kLe, 0));
  CHECK(HasRow(milp, {{h1, 1}, {1, -10}}, Sense::kLe, 0));
  CHECK(HasRow(milp, {{h2, 1}, {2, -10}}, Sense::kLe, 0));
  CHECK(HasRow(milp, {{0, 1}, {h1, -1}, {h2, -1}}, Sense::kEq, 0));
  CHECK(HasRow(milp, {{1, 1}, {2, 1}}, Sense::kEq, 1));
  const auto [lo, hi] = Projection(milp, 0);
  CHECK(lo == doctest::Approx(0).epsilon(1e-9));
  CHECK(hi == doctest::Approx(10).epsilon(1e-9));
}

TEST_CASE("no disjunctions gives the same MILP from every pass") {
  GdpModel m;
  const VarId x = m.AddVar("x", 0, 5), z = m.AddVar("z", 1, 4);
  m.AddGlobal(LinRow::Ge({{x, 1}, {z, 1}}, 3));
  m.SetObjective({{x, 2}, {z, 1}});
  const MilpModel bm = ReformulateBigM(m);
  for (Reformulation r : {Reformulation::kHull, Reformulation::kReaggregatedHull}) {
    const MilpModel other = Reformulate(m, r);
    CHECK(other.num_columns() == bm.num_columns());
    REQUIRE(other.num_rows() == bm.num_rows());
    CHECK(other.rows()[0].terms == bm.rows()[0].terms);
    CHECK(other.objective() == bm.objective());
  }
  CHECK(SolveLp(bm).objective == doctest::Approx(3));
}

TEST_CASE("SharedLhs on the case-study disjunctions") {
  const SchedulingInstance inst = GenerateScheduling(4, 3);
  const GdpModel ts = BuildTs(inst), gps = BuildGpStrengthened(inst), ip = BuildIp(inst);
  for (const Disjunction& d : ts.disjunctions()) CHECK(SharedLhs(d));
  for (const Disjunction& d : gps.disjunctions()) CHECK(SharedLhs(d));
  bool any_ip_fails = false;
  for (const Disjunction& d : ip.disjunctions()) {
    any_ip_fails = any_ip_fails || !SharedLhs(d);
  }
  CHECK(any_ip_fails);
  CHECK_FALSE(SharedLhs(IntervalUnionModel().disjunctions()[0]));
}

TEST_CASE("AlignDisjunction on the interval union") {
  const GdpModel m = IntervalUnionModel();
  const Disjunction aligned = AlignDisjunction(m.disjunctions()[0], m.vars());
  CHECK(SharedLhs(aligned));
  const VarId x{0};
  REQUIRE(aligned.disjuncts[0].rows.size() == 2);
  // Canonical order puts -x before x.
  CHECK(aligned.disjuncts[0].rows[0] == LinRow::Le({{x, -1}}, 0));
  CHECK(aligned.disjuncts[0].rows[1] == LinRow::Le({{x, 1}}, 2));
  CHECK(aligned.disjuncts[1].rows[0] == LinRow::Le({{x, -1}}, -5));
  CHECK(aligned.disjuncts[1].rows[1] == LinRow::Le({{x, 1}}, 10));

  const Disjunction again = AlignDisjunction(aligned, m.vars());
  for (size_t j = 0; j < aligned.disjuncts.size(); ++j) {
    CHECK(again.disjuncts[j].rows == aligned.disjuncts[j].rows);
  }
}

TEST_CASE("aligning a general-precedence pair gives the strengthened block") {
  const SchedulingInstance inst{{{3, 0, 10}, {2, 1, 8}}};
  const GdpModel gp = BuildGp(inst);
  const GdpModel gps = BuildGpStrengthened(inst);
  REQUIRE(gp.disjunctions().size() == 1);
  const Disjunction aligned = AlignDisjunction(gp.disjunctions()[0], gp.vars());
  const Disjunction& expected = gps.disjunctions()[0];
  REQUIRE(aligned.disjuncts.size() == expected.disjuncts.size());
  for (size_t j = 0; j < aligned.disjuncts.size(); ++j) {
    CHECK(aligned.disjuncts[j].rows == CanonicalizeRows(expected.disjuncts[j]).rows);
  }
  // x1 - x2 <= min(-p1, (d1 - p1) - r2) = -3 when job 1 goes first.
  CHECK(aligned.disjuncts[0].rows[1] ==
        LinRow::Le({{VarId{0}, 1}, {VarId{1}, -1}}, -3));
}

TEST_CASE("RHR rows for the aligned interval union") {
  const MilpModel milp =
      ReformulateReaggregatedHull(IntervalUnionModel(), /*auto_align=*/true);
  CHECK(milp.num_columns() == 3);
  CHECK(HasRow(milp, {{0, 1}, {1, -2}, {2, -10}}, Sense::kLe, 0));
  CHECK(HasRow(milp, {{0, -1}, {2, 5}}, Sense::kLe, 0));
  CHECK(HasRow(milp, {{1, 1}, {2, 1}}, Sense::kEq, 1));
  const auto rhr = Projection(milp, 0);
  const auto hr = Projection(ReformulateHull(IntervalUnionModel()), 0);
  CHECK(rhr.first == doctest::Approx(hr.first));
  CHECK(rhr.second == doctest::Approx(hr.second));
}

TEST_CASE("RHR refuses unaligned disjunctions") {
  CHECK_THROWS_AS(ReformulateReaggregatedHull(IntervalUnionModel(), false),
                  SharedLhsViolation);
  const GdpModel ip = BuildIp(GenerateScheduling(3, 1));
  try {
    ReformulateReaggregatedHull(ip, false);
    FAIL("expected SharedLhsViolation");
  } catch (const SharedLhsViolation& e) {
    CHECK(e.disjunction() >= 0);
    CHECK(std::string(e.what()).find(ip.disjunctions()[e.disjunction()].name) !=
          std::string::npos);
  }
}

TEST_CASE("ParseReformulation round trips the names") {
  for (Reformulation r : {Reformulation::kBigM, Reformulation::kHull,
                          Reformulation::kReaggregatedHull}) {
    CHECK(ParseReformulation(ReformulationName(r)) == r);
  }
  CHECK_THROWS(ParseReformulation("CH"));
}

TEST_CASE("hull adds one copy per disjunct and touched variable") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const GdpModel gdp = BuildStrip(GenerateStrip(4, seed), StripVariant::kS1);
    int expected = 0;
    for (const Disjunction& d : gdp.disjunctions()) {
      std::set<int> touched;
      for (const Disjunct& dj : d.disjuncts) {
        for (const LinRow& row : dj.rows) {
          for (const LinTerm& t : row.terms) touched.insert(t.var.value);
        }
      }
      expected += static_cast<int>(d.disjuncts.size() * touched.size());
    }
    const MilpStats base = ReformulateBigM(gdp).Stats();
    CHECK(base.continuous == gdp.num_vars());
    CHECK(ReformulateReaggregatedHull(gdp, false).Stats().continuous ==
          gdp.num_vars());
    CHECK(ReformulateHull(gdp).Stats().continuous == gdp.num_vars() + expected);
    CHECK(base.binary == gdp.num_bools());
  }
}

TEST_CASE("Big-M relaxation is never tighter than the hull") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const SchedulingInstance inst = GenerateScheduling(4, seed);
    for (Concept c : {Concept::kGP, Concept::kIP, Concept::kTS}) {
      const GdpModel gdp = BuildScheduling(inst, c);
      const double bm = SolveLp(ReformulateBigM(gdp)).objective;
      const double hr = SolveLp(ReformulateHull(gdp)).objective;
      CHECK(bm <= hr + 1e-6);
    }
  }
}

}  // namespace
}  // namespace gldp
