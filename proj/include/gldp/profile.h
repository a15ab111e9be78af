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

// Performance profiles: cumulative counts of instances per variant over
// solve time or final gap, with virtual-best and virtual-worst envelopes.

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "gldp/bench.h"

namespace gldp {

enum class ProfileAxis { kTime, kGap };

std::optional<ProfileAxis> ParseProfileAxis(std::string_view name);

// A record's value on an axis: seconds for solved runs, percent gap for runs
// with an incumbent, nullopt otherwise.
std::optional<double> AxisValue(const BenchRecord& record, ProfileAxis axis);

struct Profile {
  std::vector<std::string> instances;
  std::vector<std::string> variants;
  // values[v][i]: axis value of variant v on instance i.
  std::vector<std::vector<std::optional<double>>> values;
  // Per-instance min over variants, and max when every variant has a value.
  std::vector<std::optional<double>> virtual_best;
  std::vector<std::optional<double>> virtual_worst;
  std::vector<double> thresholds;           // sorted distinct values
  std::vector<std::vector<int>> counts;     // counts[v][t]
  std::vector<int> best_counts, worst_counts;
};

Profile BuildProfile(const std::vector<BenchRecord>& records, ProfileAxis axis);

// Columns: threshold, one per variant, virtual_best, virtual_worst.
void WriteProfileCsv(std::ostream& out, const Profile& profile);

}  // namespace gldp
