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

// Benchmark runs over (instance, model concept, reformulation) and the
// results and Table-1-style CSV files.

#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "gldp/branch_and_bound.h"
#include "gldp/instance_io.h"
#include "gldp/reformulate.h"

namespace gldp {

enum class ModelConcept { kGP, kGPS, kIP, kTS, kSOriginal, kSSymBreak, kS0, kS1 };

// "GP", "GP_S", "IP", "TS", "S_original", "S_symbreak", "S0", "S1".
std::string_view ModelConceptName(ModelConcept c);
std::optional<ModelConcept> ParseModelConcept(std::string_view name);
bool IsSchedulingConcept(ModelConcept c);

GdpModel BuildModel(const Instance& instance, ModelConcept c);

// Reason the pair cannot run, or nullopt. IP never takes RHR; GP, S_original
// and S_symbreak take it only with auto-align.
std::optional<std::string> Incompatibility(ModelConcept c, Reformulation r,
                                           bool auto_align);

struct BenchInstance {
  std::string id;
  Instance data;
};

// Seeded suites with ids "sched_n<n>_s<seed>" and "strip_n<n>_s<seed>".
std::vector<BenchInstance> SchedulingSuite(int n_min, int n_max, int seeds);
std::vector<BenchInstance> StripSuite(int n_min, int n_max, int seeds);

struct BenchConfig {
  BbConfig bb;
  bool auto_align = false;
};

struct BenchRecord {
  std::string instance;
  std::string concept_name;
  std::string reformulation;
  std::string status;
  std::optional<double> objective;  // absent without an incumbent
  double bound = 0.0;
  double gap = 0.0;  // percent, infinity without an incumbent
  long long nodes = 0;
  double time_s = 0.0;

  std::string Variant() const { return concept_name + "_" + reformulation; }
  bool Solved() const { return status == "optimal" || status == "gap_limit"; }
  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

struct RejectedRun {
  std::string instance;  // empty when the pair is rejected for every instance
  std::string concept_name;
  std::string reformulation;
  std::string reason;
};

struct BenchReport {
  std::vector<BenchRecord> records;
  std::vector<RejectedRun> rejected;
  // Root LP bound per record, in record order.
  std::vector<double> root_bounds;
};

// Runs instances x concepts x reformulations in that nesting order. Pairs
// that cannot run are listed in `rejected` rather than thrown.
BenchReport RunBench(const std::vector<BenchInstance>& instances,
                     const std::vector<ModelConcept>& concepts,
                     const std::vector<Reformulation>& reformulations,
                     const BenchConfig& config);

BenchRecord MakeRecord(const std::string& instance, ModelConcept c,
                       Reformulation r, const SolveResult& result);

inline constexpr std::string_view kRecordsHeader =
    "instance,concept,reformulation,status,objective,bound,gap,nodes,time_s";

void WriteRecordsCsv(std::ostream& out, const std::vector<BenchRecord>& records);
// Throws std::runtime_error naming the offending line.
std::vector<BenchRecord> ReadRecordsCsv(std::istream& in);

// One row per instance, one column per variant. Solved runs show seconds;
// others show "<limit>+ (<gap>)" with the gap in percent or "inf".
void WriteTableCsv(std::ostream& out, const std::vector<BenchRecord>& records,
                   double time_limit);

}  // namespace gldp
