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

// Brute-force ground truth for small instances and a grid-sampled convex
// hull of a low-dimensional disjunction.

#pragma once

#include <cstdint>
#include <vector>

#include "gldp/builders.h"
#include "gldp/gdp.h"

namespace gldp::oracle {

inline constexpr int kMaxSchedJobs = 9;
inline constexpr int kMaxStripRects = 5;

struct Schedule {
  std::vector<int> sequence;  // 0-based job order
  std::vector<double> start;  // indexed by job
};

struct SchedOracleResult {
  bool feasible = false;
  double optimum = 0.0;
  Schedule witness;
};

// Enumerates every job order with earliest starts. Throws
// std::invalid_argument above kMaxSchedJobs jobs.
SchedOracleResult SchedOracle(const SchedulingInstance& inst);

// Earliest-start schedule of one order; start times indexed by job.
std::vector<double> EarliestStarts(const SchedulingInstance& inst,
                                   const std::vector<int>& sequence);

enum class Relation {
  kLeftOf,    // i entirely before j along the strip
  kRightOf,   // j entirely before i
  kAbove,     // i entirely above j
  kBelow,     // j entirely above i
};

struct Packing {
  std::vector<double> x;  // left edge
  std::vector<double> y;  // top edge, in [H, W]
  std::vector<Relation> relations;  // pairs (i, j), i < j, row-major
};

struct StripOracleResult {
  bool feasible = false;
  double optimum = 0.0;
  Packing witness;
};

// Enumerates one relation per pair and solves each fixed system by longest
// paths. Throws std::invalid_argument above kMaxStripRects rectangles.
StripOracleResult StripOracle(const StripInstance& inst);

// True when `point` satisfies every global row of `model` and at least one
// disjunct of every disjunction, within tol.
bool SatisfiesGdp(const GdpModel& model, const std::vector<double>& point,
                  double tol = 1e-6);

// Point vectors in the variable order of the matching builders.
std::vector<double> SchedulePoint(const SchedulingInstance& inst,
                                  const Schedule& schedule);
std::vector<double> PackingPoint(const StripInstance& inst,
                                 const Packing& packing);

// Regular grid over the box of one or two variables, `cells` intervals per
// axis (so cells + 1 samples).
struct Grid {
  int dim = 1;
  int cells = 64;
  double lo[2] = {0.0, 0.0};
  double hi[2] = {0.0, 0.0};

  int samples() const { return cells + 1; }
  int size() const { return dim == 1 ? samples() : samples() * samples(); }
  double Coord(int axis, int k) const {
    return lo[axis] + (hi[axis] - lo[axis]) * k / cells;
  }
  // Sample point of flat index `index` (x-major).
  std::vector<double> Point(int index) const;
};

struct HullMask {
  Grid grid;
  std::vector<VarId> vars;
  std::vector<std::uint8_t> in;
};

// Samples conv(union of disjunct sets) of a disjunction over at most two
// variables. Throws std::invalid_argument for higher dimension.
HullMask HullOracle(const Disjunction& disjunction,
                    const std::vector<ContinuousVar>& boxes, int cells = 64);

// Number of cells where `reference` and `other` differ at a point farther than
// `band_cells` grid steps from the boundary of `reference`.
int MaskMismatchesOutsideBand(const HullMask& reference,
                              const std::vector<std::uint8_t>& other,
                              int band_cells);

}  // namespace gldp::oracle
