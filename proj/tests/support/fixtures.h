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

// LP-relaxation membership masks and small fixtures shared by the tests.

#pragma once

#include <cstdint>
#include <vector>

#include "gldp/gdp.h"
#include "gldp/milp_model.h"
#include "gldp/oracles.h"

namespace gldp::testing {

// 1 where the LP relaxation of `milp` stays feasible with the mask variables
// fixed at the grid point. GDP variable v is MILP column v.
std::vector<std::uint8_t> RelaxationMask(const MilpModel& milp,
                                         const oracle::HullMask& like);

// [x <= 2] v [x >= 5] with x in [0, 10].
GdpModel IntervalUnionModel();

// Two disjoint unit squares [0,1]^2 and [2,3]^2 inside the box [0,3]^2.
GdpModel TwoSquaresModel();

}  // namespace gldp::testing
