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

#include "gldp/bench.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "gldp/text.h"

namespace gldp {

namespace {

constexpr ModelConcept kAllConcepts[] = {
    ModelConcept::kGP,        ModelConcept::kGPS,       ModelConcept::kIP,
    ModelConcept::kTS,        ModelConcept::kSOriginal, ModelConcept::kSSymBreak,
    ModelConcept::kS0,        ModelConcept::kS1};

Concept SchedulingConceptOf(ModelConcept c) {
  switch (c) {
    case ModelConcept::kGP:
      return Concept::kGP;
    case ModelConcept::kGPS:
      return Concept::kGPStrengthened;
    case ModelConcept::kIP:
      return Concept::kIP;
    default:
      return Concept::kTS;
  }
}

StripVariant StripVariantOf(ModelConcept c) {
  switch (c) {
    case ModelConcept::kSOriginal:
      return StripVariant::kOriginal;
    case ModelConcept::kSSymBreak:
      return StripVariant::kSymBreak;
    case ModelConcept::kS0:
      return StripVariant::kS0;
    default:
      return StripVariant::kS1;
  }
}

std::string Fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

// Objective for display: ten significant digits hide solver round-off.
std::string Display(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

}  // namespace

std::string_view ModelConceptName(ModelConcept c) {
  switch (c) {
    case ModelConcept::kGP:
      return "GP";
    case ModelConcept::kGPS:
      return "GP_S";
    case ModelConcept::kIP:
      return "IP";
    case ModelConcept::kTS:
      return "TS";
    case ModelConcept::kSOriginal:
      return "S_original";
    case ModelConcept::kSSymBreak:
      return "S_symbreak";
    case ModelConcept::kS0:
      return "S0";
    case ModelConcept::kS1:
      return "S1";
  }
  return "?";
}

std::optional<ModelConcept> ParseModelConcept(std::string_view name) {
  for (ModelConcept c : kAllConcepts) {
    if (ModelConceptName(c) == name) return c;
  }
  return std::nullopt;
}

bool IsSchedulingConcept(ModelConcept c) {
  return c == ModelConcept::kGP || c == ModelConcept::kGPS ||
         c == ModelConcept::kIP || c == ModelConcept::kTS;
}

GdpModel BuildModel(const Instance& instance, ModelConcept c) {
  if (IsSchedulingConcept(c)) {
    const auto* inst = std::get_if<SchedulingInstance>(&instance);
    if (inst == nullptr) {
      throw std::invalid_argument(std::string(ModelConceptName(c)) +
                                  " needs a scheduling instance");
    }
    return BuildScheduling(*inst, SchedulingConceptOf(c));
  }
  const auto* inst = std::get_if<StripInstance>(&instance);
  if (inst == nullptr) {
    throw std::invalid_argument(std::string(ModelConceptName(c)) +
                                " needs a strip-packing instance");
  }
  return BuildStrip(*inst, StripVariantOf(c));
}

std::optional<std::string> Incompatibility(ModelConcept c, Reformulation r,
                                           bool auto_align) {
  if (r != Reformulation::kReaggregatedHull) return std::nullopt;
  if (c == ModelConcept::kIP) {
    return "immediate-precedence disjuncts do not share coefficients";
  }
  if (!auto_align && (c == ModelConcept::kGP || c == ModelConcept::kSOriginal ||
                      c == ModelConcept::kSSymBreak)) {
    return "disjuncts do not share coefficients; enable auto-align";
  }
  return std::nullopt;
}

std::vector<BenchInstance> SchedulingSuite(int n_min, int n_max, int seeds) {
  std::vector<BenchInstance> suite;
  for (int n = n_min; n <= n_max; ++n) {
    for (int s = 0; s < seeds; ++s) {
      suite.push_back({"sched_n" + std::to_string(n) + "_s" + std::to_string(s),
                       GenerateScheduling(n, static_cast<std::uint64_t>(s))});
    }
  }
  return suite;
}

std::vector<BenchInstance> StripSuite(int n_min, int n_max, int seeds) {
  std::vector<BenchInstance> suite;
  for (int n = n_min; n <= n_max; ++n) {
    for (int s = 0; s < seeds; ++s) {
      suite.push_back({"strip_n" + std::to_string(n) + "_s" + std::to_string(s),
                       GenerateStrip(n, static_cast<std::uint64_t>(s))});
    }
  }
  return suite;
}

BenchRecord MakeRecord(const std::string& instance, ModelConcept c,
                       Reformulation r, const SolveResult& result) {
  BenchRecord rec;
  rec.instance = instance;
  rec.concept_name = std::string(ModelConceptName(c));
  rec.reformulation = std::string(ReformulationName(r));
  rec.status = std::string(SolveStatusName(result.status));
  if (result.has_incumbent) {
    rec.objective = result.incumbent;
    rec.gap = 100.0 * result.rel_gap;
  } else {
    rec.gap = std::numeric_limits<double>::infinity();
  }
  rec.bound = result.bound;
  rec.nodes = result.nodes;
  rec.time_s = result.wall_seconds;
  return rec;
}

BenchReport RunBench(const std::vector<BenchInstance>& instances,
                     const std::vector<ModelConcept>& concepts,
                     const std::vector<Reformulation>& reformulations,
                     const BenchConfig& config) {
  BenchReport report;
  for (ModelConcept c : concepts) {
    for (Reformulation r : reformulations) {
      if (auto reason = Incompatibility(c, r, config.auto_align)) {
        report.rejected.push_back({"", std::string(ModelConceptName(c)),
                                   std::string(ReformulationName(r)), *reason});
      }
    }
  }
  for (const BenchInstance& inst : instances) {
    const bool scheduling = std::holds_alternative<SchedulingInstance>(inst.data);
    for (ModelConcept c : concepts) {
      if (IsSchedulingConcept(c) != scheduling) continue;
      const GdpModel model = BuildModel(inst.data, c);
      for (Reformulation r : reformulations) {
        if (Incompatibility(c, r, config.auto_align)) continue;
        MilpModel milp;
        try {
          milp = Reformulate(model, r, config.auto_align);
        } catch (const SharedLhsViolation& e) {
          report.rejected.push_back({inst.id, std::string(ModelConceptName(c)),
                                     std::string(ReformulationName(r)), e.what()});
          continue;
        }
        const SolveResult result = SolveBranchAndBound(milp, config.bb);
        report.records.push_back(MakeRecord(inst.id, c, r, result));
        report.root_bounds.push_back(result.root_bound);
      }
    }
  }
  return report;
}

void WriteRecordsCsv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << kRecordsHeader << "\n";
  for (const BenchRecord& r : records) {
    out << r.instance << ',' << r.concept_name << ',' << r.reformulation << ','
        << r.status << ',' << (r.objective ? FormatDouble(*r.objective) : "")
        << ',' << FormatDouble(r.bound) << ',' << FormatDouble(r.gap) << ','
        << r.nodes << ',' << FormatDouble(r.time_s) << "\n";
  }
}

std::vector<BenchRecord> ReadRecordsCsv(std::istream& in) {
  std::vector<BenchRecord> records;
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    throw std::runtime_error("results line " + std::to_string(line_no) + ": " + what);
  };
  if (!std::getline(in, line)) fail("missing header");
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kRecordsHeader) fail("unexpected header");
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> f = SplitCsvLine(line);
    if (f.size() != 9) fail("expected 9 fields");
    BenchRecord r;
    r.instance = f[0];
    r.concept_name = f[1];
    r.reformulation = f[2];
    r.status = f[3];
    if (!f[4].empty()) {
      r.objective = ParseDouble(f[4]);
      if (!r.objective) fail("bad objective");
    }
    const auto bound = ParseDouble(f[5]);
    const auto gap = ParseDouble(f[6]);
    const auto time = ParseDouble(f[8]);
    if (!bound || !gap || !time) fail("bad number");
    r.bound = *bound;
    r.gap = *gap;
    r.time_s = *time;
    try {
      std::size_t used = 0;
      r.nodes = std::stoll(f[7], &used);
      if (used != f[7].size()) fail("bad node count");
    } catch (const std::logic_error&) {
      fail("bad node count");
    }
    records.push_back(std::move(r));
  }
  return records;
}

void WriteTableCsv(std::ostream& out, const std::vector<BenchRecord>& records,
                   double time_limit) {
  std::vector<std::string> instances, variants;
  std::map<std::pair<std::string, std::string>, const BenchRecord*> cell;
  for (const BenchRecord& r : records) {
    if (std::find(instances.begin(), instances.end(), r.instance) == instances.end()) {
      instances.push_back(r.instance);
    }
    const std::string v = r.Variant();
    if (std::find(variants.begin(), variants.end(), v) == variants.end()) {
      variants.push_back(v);
    }
    cell[{r.instance, v}] = &r;
  }
  const std::string limit =
      (time_limit > 0 ? FormatDouble(time_limit) : std::string("limit")) + "+";
  out << "instance,objective";
  for (const std::string& v : variants) out << ',' << v;
  out << "\n";
  for (const std::string& inst : instances) {
    std::optional<double> best;
    for (const std::string& v : variants) {
      const auto it = cell.find({inst, v});
      if (it != cell.end() && it->second->Solved() && it->second->objective) {
        best = best ? std::min(*best, *it->second->objective) : *it->second->objective;
      }
    }
    out << inst << ',' << (best ? Display(*best) : "");
    for (const std::string& v : variants) {
      out << ',';
      const auto it = cell.find({inst, v});
      if (it == cell.end()) continue;
      const BenchRecord& r = *it->second;
      if (r.Solved()) {
        out << Fixed2(r.time_s);
      } else {
        out << limit << " (" << (r.objective ? Fixed2(r.gap) : "inf") << ")";
      }
    }
    out << "\n";
  }
}

}  // namespace gldp
