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

// Bounded dual simplex for the LP relaxation of a MilpModel.
//
// Row i is written as a_i'x - s_i = 0 with a logical s_i boxed by the row's
// range; one-sided rows get the missing side from the activity range implied
// by the column boxes. With every variable boxed, any basis can be made dual
// feasible by putting each nonbasic variable on the bound that matches the
// sign of its reduced cost, so only the dual simplex is needed. Bound changes
// keep the current basis dual feasible.

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "gldp/milp_model.h"

namespace gldp {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

const char* LpStatusName(LpStatus status);

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  double objective = 0.0;
  std::vector<double> x;  // one value per MilpModel column
  std::int64_t iterations = 0;
};

struct LpOptions {
  double primal_tol = 1e-9;
  double dual_tol = 1e-9;
  double pivot_tol = 1e-7;
  // Row/bound violation accepted for a returned optimum.
  double certificate_tol = 1e-7;
  // Relative cost shift applied while iterating, removed before returning.
  double perturbation = 5e-7;
  int degenerate_streak_for_bland = 50;
  int refactor_interval = 100;
  std::int64_t iteration_limit = 0;  // 0 picks a size-based default
};

struct BoundOverride {
  int col = -1;
  double lower = 0.0;
  double upper = 0.0;
};

// Snapshot of a simplex basis, used to restart a solve elsewhere in a tree.
struct LpBasis {
  std::vector<int> basic;            // variable per basis row
  std::vector<std::uint8_t> status;  // per structural and logical variable
  std::vector<double> weights;
};

class DualSimplex {
 public:
  explicit DualSimplex(const MilpModel& model, LpOptions options = {});
  ~DualSimplex();
  DualSimplex(const DualSimplex&) = delete;
  DualSimplex& operator=(const DualSimplex&) = delete;

  void SetColumnBounds(int col, double lower, double upper);
  double column_lower(int col) const;
  double column_upper(int col) const;

  LpBasis GetBasis() const;
  void SetBasis(const LpBasis& basis);

  // Solves with the current bounds, warm-starting from the last basis.
  LpResult Solve();

 private:
  class Impl;
  std::unique_ptr<Impl> impl_;
};

// One-shot LP relaxation (binaries relaxed to [0,1]) with optional bound
// overrides.
LpResult SolveLp(const MilpModel& model,
                 std::span<const BoundOverride> overrides = {},
                 LpOptions options = {});

}  // namespace gldp
