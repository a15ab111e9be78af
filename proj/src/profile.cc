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

#include "gldp/profile.h"

#include <algorithm>

#include "gldp/text.h"

namespace gldp {

std::optional<ProfileAxis> ParseProfileAxis(std::string_view name) {
  if (name == "time") return ProfileAxis::kTime;
  if (name == "gap") return ProfileAxis::kGap;
  return std::nullopt;
}

std::optional<double> AxisValue(const BenchRecord& record, ProfileAxis axis) {
  if (axis == ProfileAxis::kTime) {
    if (record.Solved()) return record.time_s;
    return std::nullopt;
  }
  if (record.objective) return record.gap;
  return std::nullopt;
}

namespace {

int Index(std::vector<std::string>& names, const std::string& name) {
  const auto it = std::find(names.begin(), names.end(), name);
  if (it != names.end()) return static_cast<int>(it - names.begin());
  names.push_back(name);
  return static_cast<int>(names.size()) - 1;
}

int CountAtMost(const std::vector<std::optional<double>>& values, double t) {
  return static_cast<int>(std::count_if(values.begin(), values.end(),
                                        [t](const auto& v) { return v && *v <= t; }));
}

}  // namespace

Profile BuildProfile(const std::vector<BenchRecord>& records, ProfileAxis axis) {
  Profile p;
  for (const BenchRecord& r : records) {
    Index(p.instances, r.instance);
    Index(p.variants, r.Variant());
  }
  const size_t ni = p.instances.size();
  p.values.assign(p.variants.size(), std::vector<std::optional<double>>(ni));
  for (const BenchRecord& r : records) {
    const int v = Index(p.variants, r.Variant());
    const int i = Index(p.instances, r.instance);
    p.values[v][i] = AxisValue(r, axis);
  }
  p.virtual_best.resize(ni);
  p.virtual_worst.resize(ni);
  for (size_t i = 0; i < ni; ++i) {
    bool all = true;
    double worst = 0.0;
    for (const auto& column : p.values) {
      const std::optional<double>& value = column[i];
      if (!value) {
        all = false;
        continue;
      }
      if (!p.virtual_best[i] || *value < *p.virtual_best[i]) p.virtual_best[i] = value;
      worst = std::max(worst, *value);
    }
    if (all && !p.variants.empty()) p.virtual_worst[i] = worst;
  }
  for (const auto& column : p.values) {
    for (const auto& value : column) {
      if (value) p.thresholds.push_back(*value);
    }
  }
  std::sort(p.thresholds.begin(), p.thresholds.end());
  p.thresholds.erase(std::unique(p.thresholds.begin(), p.thresholds.end()),
                     p.thresholds.end());
  p.counts.resize(p.variants.size());
  for (size_t v = 0; v < p.variants.size(); ++v) {
    for (double t : p.thresholds) p.counts[v].push_back(CountAtMost(p.values[v], t));
  }
  for (double t : p.thresholds) {
    p.best_counts.push_back(CountAtMost(p.virtual_best, t));
    p.worst_counts.push_back(CountAtMost(p.virtual_worst, t));
  }
  return p;
}

void WriteProfileCsv(std::ostream& out, const Profile& profile) {
  out << "threshold";
  for (const std::string& v : profile.variants) out << ',' << v;
  out << ",virtual_best,virtual_worst\n";
  for (size_t t = 0; t < profile.thresholds.size(); ++t) {
    out << FormatDouble(profile.thresholds[t]);
    for (const auto& column : profile.counts) out << ',' << column[t];
    out << ',' << profile.best_counts[t] << ',' << profile.worst_counts[t] << "\n";
  }
}

}  // namespace gldp
