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

#include "gldp/builders.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace gldp {

namespace {

std::string Idx(int i) { return std::to_string(i + 1); }

}  // namespace

void CheckInstance(const SchedulingInstance& inst) {
  for (size_t i = 0; i < inst.jobs.size(); ++i) {
    const Job& job = inst.jobs[i];
    const int idx = static_cast<int>(i);
    if (!std::isfinite(job.p) || !std::isfinite(job.r) ||
        !std::isfinite(job.d) || job.p < 0 || job.r < 0 || job.d < 0) {
      throw InstanceError("job " + std::to_string(i) +
                              ": p, r, d must be finite and nonnegative",
                          idx);
    }
    if (job.r + job.p > job.d) {
      throw InstanceError("job " + std::to_string(i) +
                              ": release + processing exceeds due time",
                          idx);
    }
  }
}

void CheckInstance(const StripInstance& inst) {
  if (!(inst.W > 0)) throw InstanceError("strip width W must be positive", -1);
  double max_l = 0.0;
  for (size_t i = 0; i < inst.rects.size(); ++i) {
    const Rect& rect = inst.rects[i];
    const int idx = static_cast<int>(i);
    if (!(rect.L > 0) || !(rect.H > 0)) {
      throw InstanceError(
          "rectangle " + std::to_string(i) + ": L and H must be positive", idx);
    }
    if (rect.H > inst.W) {
      throw InstanceError("rectangle " + std::to_string(i) +
                              ": height exceeds strip width",
                          idx);
    }
    max_l = std::max(max_l, rect.L);
  }
  if (inst.UB < max_l) {
    throw InstanceError("UB is smaller than the longest rectangle", -1);
  }
}

std::string_view ConceptName(Concept c) {
  switch (c) {
    case Concept::kGP:
      return "GP";
    case Concept::kGPStrengthened:
      return "GP_S";
    case Concept::kIP:
      return "IP";
    case Concept::kTS:
      return "TS";
  }
  return "?";
}

std::string_view StripVariantName(StripVariant v) {
  switch (v) {
    case StripVariant::kOriginal:
      return "S_original";
    case StripVariant::kSymBreak:
      return "S_symbreak";
    case StripVariant::kS0:
      return "S0";
    case StripVariant::kS1:
      return "S1";
  }
  return "?";
}

std::pair<double, double> MakespanBox(const SchedulingInstance& inst) {
  double lo = 0.0, sum_p = 0.0, max_r = 0.0, max_d = 0.0;
  for (const Job& job : inst.jobs) {
    lo = std::max(lo, job.r + job.p);
    sum_p += job.p;
    max_r = std::max(max_r, job.r);
    max_d = std::max(max_d, job.d);
  }
  return {lo, std::min(sum_p + max_r, max_d)};
}

namespace {

struct SchedulingVars {
  std::vector<VarId> start;
  VarId makespan;
};

// Start times boxed by [r_i, d_i - p_i], makespan, and x_i + p_i <= MS.
SchedulingVars AddStartVars(const SchedulingInstance& inst, GdpModel& model) {
  SchedulingVars vars;
  for (size_t i = 0; i < inst.jobs.size(); ++i) {
    const Job& job = inst.jobs[i];
    vars.start.push_back(
        model.AddVar("x_" + Idx(static_cast<int>(i)), job.r, job.d - job.p));
  }
  const auto [ms_lo, ms_hi] = MakespanBox(inst);
  vars.makespan = model.AddVar("MS", ms_lo, ms_hi);
  for (size_t i = 0; i < inst.jobs.size(); ++i) {
    model.AddGlobal(LinRow::Le({{vars.start[i], 1.0}, {vars.makespan, -1.0}},
                               -inst.jobs[i].p));
  }
  model.SetObjective({{vars.makespan, 1.0}});
  return vars;
}

GdpModel BuildPrecedence(const SchedulingInstance& inst, bool strengthened) {
  CheckInstance(inst);
  GdpModel model(strengthened ? "GP_S" : "GP");
  const SchedulingVars vars = AddStartVars(inst, model);
  const int n = static_cast<int>(inst.jobs.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Job& a = inst.jobs[i];
      const Job& b = inst.jobs[j];
      const std::string pair = Idx(i) + "_" + Idx(j);
      const BoolId before = model.AddBool("Y_" + pair);
      const BoolId after = model.AddBool("Ynot_" + pair);
      const std::vector<LinTerm> diff{{vars.start[i], 1.0},
                                      {vars.start[j], -1.0}};
      const std::vector<LinTerm> neg_diff{{vars.start[i], -1.0},
                                          {vars.start[j], 1.0}};
      Disjunction disj{"order_" + pair, {}};
      if (!strengthened) {
        disj.disjuncts.push_back(
            {"Y_" + pair, before, {LinRow::Le(diff, -a.p)}});
        disj.disjuncts.push_back(
            {"Ynot_" + pair, after, {LinRow::Le(neg_diff, -b.p)}});
      } else {
        // Box-implied range of x_i - x_j intersected into each disjunct.
        const double diff_lo = a.r - (b.d - b.p);
        const double diff_hi = (a.d - a.p) - b.r;
        disj.disjuncts.push_back({"Y_" + pair,
                                  before,
                                  {LinRow::Le(diff, std::min(-a.p, diff_hi)),
                                   LinRow::Ge(diff, diff_lo)}});
        disj.disjuncts.push_back({"Ynot_" + pair,
                                  after,
                                  {LinRow::Le(diff, diff_hi),
                                   LinRow::Ge(diff, std::max(b.p, diff_lo))}});
      }
      model.AddDisjunction(std::move(disj));
    }
  }
  return model;
}

}  // namespace

GdpModel BuildGp(const SchedulingInstance& inst) {
  return BuildPrecedence(inst, false);
}

GdpModel BuildGpStrengthened(const SchedulingInstance& inst) {
  return BuildPrecedence(inst, true);
}

GdpModel BuildIp(const SchedulingInstance& inst) {
  CheckInstance(inst);
  const int n = static_cast<int>(inst.jobs.size());
  if (n < 2) throw InstanceError("immediate precedence needs >= 2 jobs", -1);
  GdpModel model("IP");
  const SchedulingVars vars = AddStartVars(inst, model);
  const auto& x = vars.start;
  const auto& jobs = inst.jobs;

  // succ[i][j]: j immediately follows i.
  std::vector<std::vector<BoolId>> succ(n, std::vector<BoolId>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) succ[i][j] = model.AddBool("Y_" + Idx(i) + "_" + Idx(j));
    }
  }
  std::vector<BoolId> first(n), last(n);
  for (int i = 0; i < n; ++i) first[i] = model.AddBool("Yfirst_" + Idx(i));
  for (int i = 0; i < n; ++i) last[i] = model.AddBool("Ylast_" + Idx(i));

  // x_a + p_a <= x_b
  auto precedes = [&](int a, int b) {
    return LinRow::Le({{x[a], 1.0}, {x[b], -1.0}}, -jobs[a].p);
  };
  auto all_others_before = [&](int i) {
    std::vector<LinRow> rows;
    for (int j = 0; j < n; ++j) {
      if (j != i) rows.push_back(precedes(j, i));
    }
    return rows;
  };
  auto all_others_after = [&](int i) {
    std::vector<LinRow> rows;
    for (int j = 0; j < n; ++j) {
      if (j != i) rows.push_back(precedes(i, j));
    }
    return rows;
  };

  for (int i = 0; i < n; ++i) {
    Disjunction successor{"successor_" + Idx(i), {}};
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      successor.disjuncts.push_back({"Y_" + Idx(i) + "_" + Idx(j),
                                     succ[i][j],
                                     {precedes(i, j)}});
    }
    successor.disjuncts.push_back(
        {"Ylast_" + Idx(i), last[i], all_others_before(i)});
    model.AddDisjunction(std::move(successor));
  }
  for (int i = 0; i < n; ++i) {
    Disjunction predecessor{"predecessor_" + Idx(i), {}};
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      predecessor.disjuncts.push_back({"Y_" + Idx(j) + "_" + Idx(i),
                                       succ[j][i],
                                       {precedes(j, i)}});
    }
    predecessor.disjuncts.push_back(
        {"Yfirst_" + Idx(i), first[i], all_others_after(i)});
    model.AddDisjunction(std::move(predecessor));
  }
  Disjunction first_job{"first", {}};
  Disjunction last_job{"last", {}};
  for (int i = 0; i < n; ++i) {
    first_job.disjuncts.push_back(
        {"Yfirst_" + Idx(i), first[i], all_others_after(i)});
    last_job.disjuncts.push_back(
        {"Ylast_" + Idx(i), last[i], all_others_before(i)});
  }
  model.AddDisjunction(std::move(first_job));
  model.AddDisjunction(std::move(last_job));
  // not (first and last)
  for (int i = 0; i < n; ++i) {
    model.AddLogic({{{first[i], 1}, {last[i], 1}}, LogicSense::kLe, 1});
  }
  return model;
}

GdpModel BuildTs(const SchedulingInstance& inst) {
  CheckInstance(inst);
  const int n = static_cast<int>(inst.jobs.size());
  GdpModel model("TS");
  double min_r = 0.0, max_d = 0.0;
  if (n > 0) {
    min_r = inst.jobs[0].r;
    for (const Job& job : inst.jobs) {
      min_r = std::min(min_r, job.r);
      max_d = std::max(max_d, job.d);
    }
  }
  std::vector<VarId> slot;
  for (int t = 0; t < n; ++t) {
    slot.push_back(model.AddVar("x_t" + Idx(t), min_r, max_d));
  }
  const auto [ms_lo, ms_hi] = MakespanBox(inst);
  const VarId ms = model.AddVar("MS", ms_lo, ms_hi);
  model.SetObjective({{ms, 1.0}});

  // assign[i][t]: job i runs in slot t.
  std::vector<std::vector<BoolId>> assign(n, std::vector<BoolId>(n));
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < n; ++t) {
      assign[i][t] = model.AddBool("Y_" + Idx(i) + "_" + Idx(t));
    }
  }
  for (int t = 0; t < n; ++t) {
    const VarId next = t + 1 < n ? slot[t + 1] : ms;
    Disjunction disj{"slot_" + Idx(t), {}};
    for (int i = 0; i < n; ++i) {
      const Job& job = inst.jobs[i];
      disj.disjuncts.push_back(
          {"Y_" + Idx(i) + "_" + Idx(t),
           assign[i][t],
           {LinRow::Le({{slot[t], 1.0}, {next, -1.0}}, -job.p),
            LinRow::Le({{slot[t], -1.0}}, -job.r),
            LinRow::Le({{slot[t], 1.0}}, job.d - job.p)}});
    }
    if (n >= 2) model.AddDisjunction(std::move(disj));
  }
  if (n == 1) {
    // A single slot has a single disjunct, which is just a set of globals.
    const Job& job = inst.jobs[0];
    model.AddGlobal(LinRow::Le({{slot[0], 1.0}, {ms, -1.0}}, -job.p));
    model.AddGlobal(LinRow::Ge({{slot[0], 1.0}}, job.r));
    model.AddGlobal(LinRow::Le({{slot[0], 1.0}}, job.d - job.p));
    model.AddLogic({{{assign[0][0], 1}}, LogicSense::kEq, 1});
    return model;
  }
  for (int i = 0; i < n; ++i) {
    LogicRow row{{}, LogicSense::kEq, 1};
    for (int t = 0; t < n; ++t) row.terms.push_back({assign[i][t], 1});
    model.AddLogic(std::move(row));
  }
  return model;
}

GdpModel BuildScheduling(const SchedulingInstance& inst, Concept c) {
  switch (c) {
    case Concept::kGP:
      return BuildGp(inst);
    case Concept::kGPStrengthened:
      return BuildGpStrengthened(inst);
    case Concept::kIP:
      return BuildIp(inst);
    case Concept::kTS:
      return BuildTs(inst);
  }
  throw std::invalid_argument("unknown scheduling concept");
}

GdpModel BuildStrip(const StripInstance& inst, StripVariant variant) {
  CheckInstance(inst);
  const int n = static_cast<int>(inst.rects.size());
  const double W = inst.W;
  const double UB = inst.UB;
  GdpModel model(std::string(StripVariantName(variant)));
  std::vector<VarId> x, y;
  for (int i = 0; i < n; ++i) {
    x.push_back(model.AddVar("x_" + Idx(i), 0.0, UB - inst.rects[i].L));
  }
  for (int i = 0; i < n; ++i) {
    y.push_back(model.AddVar("y_" + Idx(i), inst.rects[i].H, W));
  }
  const VarId length = model.AddVar("lt", 0.0, UB);
  model.SetObjective({{length, 1.0}});
  for (int i = 0; i < n; ++i) {
    model.AddGlobal(
        LinRow::Ge({{length, 1.0}, {x[i], -1.0}}, inst.rects[i].L));
  }

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double Li = inst.rects[i].L, Lj = inst.rects[j].L;
      const double Hi = inst.rects[i].H, Hj = inst.rects[j].H;
      const std::string ij = Idx(i) + "_" + Idx(j);
      const std::string ji = Idx(j) + "_" + Idx(i);
      const BoolId left_ij = model.AddBool("Z1_" + ij);
      const BoolId left_ji = model.AddBool("Z1_" + ji);
      const BoolId above_ij = model.AddBool("Z2_" + ij);
      const BoolId above_ji = model.AddBool("Z2_" + ji);
      const std::vector<LinTerm> dx{{x[i], 1.0}, {x[j], -1.0}};
      const std::vector<LinTerm> dy{{y[i], 1.0}, {y[j], -1.0}};

      std::vector<LinRow> r1, r2, r3, r4;
      switch (variant) {
        case StripVariant::kOriginal:
        case StripVariant::kSymBreak:
          r1 = {LinRow::Le(dx, -Li)};   // x_i + L_i <= x_j
          r2 = {LinRow::Ge(dx, Lj)};    // x_j + L_j <= x_i
          r3 = {LinRow::Ge(dy, Hi)};    // y_i - H_i >= y_j
          r4 = {LinRow::Le(dy, -Hj)};   // y_j - H_j >= y_i
          if (variant == StripVariant::kSymBreak) {
            // x_i + L_i >= x_j and x_j + L_j >= x_i
            for (auto* rows : {&r3, &r4}) {
              rows->push_back(LinRow::Ge(dx, -Li));
              rows->push_back(LinRow::Le(dx, Lj));
            }
          }
          break;
        case StripVariant::kS0:
        case StripVariant::kS1: {
          const double dx_lo = -UB + Lj, dx_hi = UB - Li;
          const double dy_lo = -W + Hi, dy_hi = W - Hj;
          r1 = {LinRow::Le(dx, -Li), LinRow::Ge(dy, dy_lo),
                LinRow::Le(dy, dy_hi), LinRow::Ge(dx, dx_lo)};
          r2 = {LinRow::Ge(dx, Lj), LinRow::Ge(dy, dy_lo),
                LinRow::Le(dy, dy_hi), LinRow::Le(dx, dx_hi)};
          double v_lo = dx_lo, v_hi = dx_hi;
          if (variant == StripVariant::kS1) {
            v_lo = std::max(dx_lo, -Li);
            v_hi = std::min(dx_hi, Lj);
          }
          r3 = {LinRow::Ge(dy, Hi), LinRow::Ge(dx, v_lo), LinRow::Le(dx, v_hi),
                LinRow::Le(dy, dy_hi)};
          r4 = {LinRow::Le(dy, -Hj), LinRow::Ge(dx, v_lo),
                LinRow::Le(dx, v_hi), LinRow::Ge(dy, dy_lo)};
          break;
        }
      }
      model.AddDisjunction(
          {"nonoverlap_" + ij,
           {{"Z1_" + ij, left_ij, std::move(r1)},
            {"Z1_" + ji, left_ji, std::move(r2)},
            {"Z2_" + ij, above_ij, std::move(r3)},
            {"Z2_" + ji, above_ji, std::move(r4)}}});
    }
  }
  return model;
}

namespace {

// Portable bounded draw; std::uniform_int_distribution differs across
// standard libraries.
int UniformInt(std::mt19937_64& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

}  // namespace

SchedulingInstance GenerateScheduling(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("instance size must be >= 1");
  std::mt19937_64 rng(seed);
  SchedulingInstance inst;
  for (int i = 0; i < n; ++i) {
    Job job;
    job.p = UniformInt(rng, 1, 10);
    job.r = UniformInt(rng, 0, 2 * n);
    job.d = job.r + job.p + UniformInt(rng, 0, 3 * n);
    inst.jobs.push_back(job);
  }
  // Guarantee feasibility: run jobs in release order (ties by index) as
  // early as possible and extend any due time the schedule misses.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return inst.jobs[a].r < inst.jobs[b].r;
  });
  double clock = 0.0;
  for (int i : order) {
    Job& job = inst.jobs[i];
    clock = std::max(clock, job.r) + job.p;
    job.d = std::max(job.d, clock);
  }
  return inst;
}

StripInstance GenerateStrip(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("instance size must be >= 1");
  std::mt19937_64 rng(seed);
  StripInstance inst;
  inst.W = 10.0;
  for (int i = 0; i < n; ++i) {
    Rect rect;
    rect.L = UniformInt(rng, 1, 10);
    rect.H = UniformInt(rng, 1, 10);
    inst.rects.push_back(rect);
    inst.UB += rect.L;
  }
  return inst;
}

}  // namespace gldp
