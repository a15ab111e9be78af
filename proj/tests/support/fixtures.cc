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

#include "support/fixtures.h"

#include "gldp/lp_solver.h"

namespace gldp::testing {

std::vector<std::uint8_t> RelaxationMask(const MilpModel& milp,
                                         const oracle::HullMask& like) {
  std::vector<std::uint8_t> mask(like.grid.size(), 0);
  DualSimplex lp(milp);
  for (int k = 0; k < like.grid.size(); ++k) {
    const std::vector<double> point = like.grid.Point(k);
    for (size_t a = 0; a < like.vars.size(); ++a) {
      lp.SetColumnBounds(like.vars[a].value, point[a], point[a]);
    }
    mask[k] = lp.Solve().status == LpStatus::kOptimal;
  }
  return mask;
}

GdpModel IntervalUnionModel() {
  GdpModel m("interval_union");
  const VarId x = m.AddVar("x", 0, 10);
  const BoolId y1 = m.AddBool("y1");
  const BoolId y2 = m.AddBool("y2");
  m.AddDisjunction({"d", {{"low", y1, {LinRow::Le({{x, 1}}, 2)}},
                          {"high", y2, {LinRow::Ge({{x, 1}}, 5)}}}});
  m.SetObjective({{x, 1}});
  return m;
}

GdpModel TwoSquaresModel() {
  GdpModel m("two_squares");
  const VarId u = m.AddVar("u", 0, 3);
  const VarId v = m.AddVar("v", 0, 3);
  auto square = [&](double lo, double hi) {
    return std::vector<LinRow>{LinRow::Le({{u, 1}}, hi), LinRow::Ge({{u, 1}}, lo),
                               LinRow::Le({{v, 1}}, hi), LinRow::Ge({{v, 1}}, lo)};
  };
  m.AddDisjunction({"d", {{"a", m.AddBool("ya"), square(0, 1)},
                          {"b", m.AddBool("yb"), square(2, 3)}}});
  m.SetObjective({{u, 1}});
  return m;
}

}  // namespace gldp::testing
