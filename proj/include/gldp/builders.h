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

// Case-study GDP models: single-machine scheduling with release and due
// times (general precedence, strengthened general precedence, immediate
// precedence, time slots) and 2-D strip packing (four variants).

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gldp/gdp.h"

namespace gldp {

struct Job {
  double p = 0.0;  // processing time
  double r = 0.0;  // release time
  double d = 0.0;  // due time
};

struct SchedulingInstance {
  std::vector<Job> jobs;
};

struct Rect {
  double L = 0.0;  // length along the strip
  double H = 0.0;  // height across the strip
};

struct StripInstance {
  std::vector<Rect> rects;
  double W = 0.0;   // strip width
  double UB = 0.0;  // upper bound on the used length
};

class InstanceError : public std::invalid_argument {
 public:
  InstanceError(std::string message, int index)
      : std::invalid_argument(std::move(message)), index_(index) {}
  // Offending job or rectangle, -1 when the instance as a whole is at fault.
  int index() const { return index_; }

 private:
  int index_;
};

// Throws InstanceError naming the first job with r + p > d (or negative data).
void CheckInstance(const SchedulingInstance& inst);
// Throws InstanceError naming the first rectangle with H > W or L, H <= 0,
// or when UB < max L.
void CheckInstance(const StripInstance& inst);

enum class Concept { kGP, kGPStrengthened, kIP, kTS };
enum class StripVariant { kOriginal, kSymBreak, kS0, kS1 };

std::string_view ConceptName(Concept c);  // "GP", "GP_S", "IP", "TS"
std::string_view StripVariantName(StripVariant v);  // "S_original", ...

// Makespan box [max_i (r_i + p_i), min(sum p + max r, max d)].
std::pair<double, double> MakespanBox(const SchedulingInstance& inst);

GdpModel BuildGp(const SchedulingInstance& inst);
GdpModel BuildGpStrengthened(const SchedulingInstance& inst);
GdpModel BuildIp(const SchedulingInstance& inst);
GdpModel BuildTs(const SchedulingInstance& inst);
GdpModel BuildScheduling(const SchedulingInstance& inst, Concept c);

GdpModel BuildStrip(const StripInstance& inst, StripVariant variant);

// Random instances. p ~ U{1..10}, r ~ U{0..2n}, d = r + p + U{0..3n}; due
// times are then raised until the release-order schedule meets them.
SchedulingInstance GenerateScheduling(int n, std::uint64_t seed);
// L, H ~ U{1..10}, W = 10, UB = sum L.
StripInstance GenerateStrip(int n, std::uint64_t seed);

}  // namespace gldp
