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

// GDP -> MILP passes.
//
// Column layout shared by every pass: the GDP continuous variables keep their
// indices, the GDP booleans follow as binaries (column num_vars + b), and any
// pass-specific columns (hull disaggregation) come last.
//
//   Big-M:  a'x - b <= M (1 - y_jk)           per disjunct row
//   Hull:   x = sum_j xh_jk,  a'xh_jk <= b y_jk,  x^L y_jk <= xh_jk <= x^U y_jk
//   RHR:    a'x <= sum_j b_jk y_jk            per shared row, no new columns
//
// and every pass adds sum_j y_jk = 1 per disjunction.

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "gldp/gdp.h"
#include "gldp/milp_model.h"

namespace gldp {

enum class Reformulation { kBigM, kHull, kReaggregatedHull };

std::string_view ReformulationName(Reformulation r);  // "BM", "HR", "RHR"
Reformulation ParseReformulation(std::string_view name);

// max over the box of (a'x - b) for a <= row. Not clamped.
double BigMBound(const LinRow& row, const std::vector<ContinuousVar>& boxes);

// max over the box of a'x.
double IntervalMax(const std::vector<LinTerm>& terms,
                   const std::vector<ContinuousVar>& boxes);

// M per disjunction, disjunct and canonical row, clamped at zero.
struct BigMCoeffs {
  std::vector<std::vector<std::vector<double>>> m;
};

BigMCoeffs ComputeBigM(const GdpModel& model);

// (disjunction, disjunct, original variable) -> disaggregated column.
using DisaggVarMap = std::map<std::tuple<int, int, int>, int>;

MilpModel ReformulateBigM(const GdpModel& model);
MilpModel ReformulateHull(const GdpModel& model,
                          DisaggVarMap* disagg = nullptr);

// True iff every disjunct has the same number of canonical rows and row r has
// the identical coefficient vector in all of them.
bool SharedLhs(const Disjunction& disjunction);

// Basic step against the variable box: every coefficient vector used by any
// disjunct is added to every disjunct. Missing rows get the box maximum as
// right-hand side; present rows keep min(existing, box maximum).
Disjunction AlignDisjunction(const Disjunction& disjunction,
                             const std::vector<ContinuousVar>& boxes);

class SharedLhsViolation : public std::invalid_argument {
 public:
  SharedLhsViolation(int disjunction, const std::string& name);
  int disjunction() const { return disjunction_; }

 private:
  int disjunction_;
};

// Throws SharedLhsViolation unless every disjunction passes SharedLhs; with
// auto_align the failing disjunctions are aligned first.
MilpModel ReformulateReaggregatedHull(const GdpModel& model, bool auto_align);

MilpModel Reformulate(const GdpModel& model, Reformulation reformulation,
                      bool auto_align = false);

// Set of variables touched by any row of the disjunction, ascending.
std::vector<VarId> VarsInDisjunction(const Disjunction& disjunction);

}  // namespace gldp
