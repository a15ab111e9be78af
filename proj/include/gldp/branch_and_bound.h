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

// Best-bound branch and bound over the binary columns of a MilpModel.

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "gldp/milp_model.h"

namespace gldp {

struct BbConfig {
  double rel_gap = 1e-4;
  double time_limit = 0.0;      // seconds, 0 = none
  std::int64_t node_limit = 0;  // LP solves, 0 = none
  double abs_tol = 1e-6;        // prune when bound >= incumbent - abs_tol
  double int_tol = 1e-6;
};

// kOptimal: the tree was exhausted. kGapLimit: stopped once the relative gap
// fell to rel_gap with open nodes left.
enum class SolveStatus { kOptimal, kGapLimit, kTimeLimit, kNodeLimit, kInfeasible };

std::string_view SolveStatusName(SolveStatus status);
// True for kOptimal and kGapLimit.
bool IsSolved(SolveStatus status);

struct SolveResult {
  SolveStatus status = SolveStatus::kInfeasible;
  bool has_incumbent = false;
  double incumbent = 0.0;
  double bound = 0.0;
  double rel_gap = 0.0;  // infinity without an incumbent
  std::int64_t nodes = 0;
  double wall_seconds = 0.0;
  std::vector<double> solution;
  double root_bound = 0.0;
  std::vector<double> bound_history;  // global bound after each node
};

double RelativeGap(double incumbent, double bound);

SolveResult SolveBranchAndBound(const MilpModel& model, const BbConfig& config = {});

}  // namespace gldp
