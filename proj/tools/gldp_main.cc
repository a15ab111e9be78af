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

// gldp: command-line front end for building, reformulating, solving and
// benchmarking the case-study GDP models.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gldp/bench.h"
#include "gldp/branch_and_bound.h"
#include "gldp/instance_io.h"
#include "gldp/mps_writer.h"
#include "gldp/profile.h"
#include "gldp/reformulate.h"
#include "gldp/text.h"

namespace {

using namespace gldp;

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

ModelConcept ConceptOrThrow(const std::string& name) {
  if (auto c = ParseModelConcept(name)) return *c;
  throw std::invalid_argument("unknown concept '" + name + "'");
}

void MakeParent(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
}

void WriteTo(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  MakeParent(path);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

struct ModelArgs {
  std::string instance;
  std::string concept_name;
  std::string reform = "BM";
  bool auto_align = false;

  void AddTo(CLI::App* app, bool with_reform) {
    app->add_option("--instance", instance, "Instance JSON file")->required();
    app->add_option("--concept", concept_name,
                    "GP, GP_S, IP, TS, S_original, S_symbreak, S0 or S1")
        ->required();
    if (with_reform) {
      app->add_option("--reform", reform, "BM, HR or RHR");
      app->add_flag("--auto-align", auto_align,
                    "Align disjuncts to a shared LHS before RHR");
    }
  }

  GdpModel Gdp() const {
    return BuildModel(LoadInstance(instance), ConceptOrThrow(concept_name));
  }

  MilpModel Milp() const {
    const ModelConcept c = ConceptOrThrow(concept_name);
    const Reformulation r = ParseReformulation(reform);
    if (auto reason = Incompatibility(c, r, auto_align)) {
      throw std::invalid_argument(concept_name + " x " + reform + ": " + *reason);
    }
    return Reformulate(BuildModel(LoadInstance(instance), c), r, auto_align);
  }
};

struct LimitArgs {
  BbConfig bb;

  void AddTo(CLI::App* app) {
    app->add_option("--rel-gap", bb.rel_gap, "Relative optimality gap")
        ->capture_default_str();
    app->add_option("--time-limit", bb.time_limit, "Seconds per solve, 0 = none")
        ->capture_default_str();
    app->add_option("--node-limit", bb.node_limit, "Nodes per solve, 0 = none")
        ->capture_default_str();
  }
};

int Run(int argc, char** argv) {
  CLI::App app{"GDP reformulation toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a seeded random instance");
  std::string gen_kind = "sched", gen_out;
  int gen_n = 5;
  std::uint64_t gen_seed = 0;
  gen->add_option("--kind", gen_kind, "sched or strip")
      ->check(CLI::IsMember({"sched", "strip"}));
  gen->add_option("--n", gen_n, "Jobs or rectangles")->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  // build
  auto* build = app.add_subcommand("build", "Print GDP model statistics");
  ModelArgs build_args;
  build_args.AddTo(build, false);

  // reformulate
  auto* reform = app.add_subcommand("reformulate", "Print MILP statistics");
  ModelArgs reform_args;
  reform_args.AddTo(reform, true);

  // solve
  auto* solve = app.add_subcommand("solve", "Reformulate and solve");
  ModelArgs solve_args;
  LimitArgs solve_limits;
  solve_args.AddTo(solve, true);
  solve_limits.AddTo(solve);

  // bench
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite");
  std::string bench_kind = "sched", bench_concepts, bench_reforms = "BM,HR,RHR";
  std::string bench_out_dir;
  std::vector<std::string> bench_files;
  int n_min = 3, n_max = 7, seeds = 3;
  bool bench_align = false;
  LimitArgs bench_limits;
  bench->add_option("--kind", bench_kind, "sched or strip generated suite")
      ->check(CLI::IsMember({"sched", "strip"}));
  bench->add_option("--n-min", n_min)->capture_default_str();
  bench->add_option("--n-max", n_max)->capture_default_str();
  bench->add_option("--seeds", seeds, "Seeds per size")->capture_default_str();
  bench->add_option("--instances", bench_files,
                    "Instance files instead of a generated suite");
  bench->add_option("--concept", bench_concepts,
                    "Comma-separated concepts (default: all for the kind)");
  bench->add_option("--reform", bench_reforms, "Comma-separated reformulations")
      ->capture_default_str();
  bench->add_flag("--auto-align", bench_align);
  bench->add_option("--out-dir", bench_out_dir,
                    "Write results, table and profile CSVs here");
  bench_limits.AddTo(bench);

  // profile
  auto* profile = app.add_subcommand("profile", "Performance profile from results");
  std::string profile_in, profile_axis = "time", profile_out;
  profile->add_option("--results", profile_in, "Results CSV")->required();
  profile->add_option("--axis", profile_axis, "time or gap")
      ->check(CLI::IsMember({"time", "gap"}));
  profile->add_option("--out", profile_out, "Output file (default stdout)");

  // export-mps
  auto* mps = app.add_subcommand("export-mps", "Write the MILP as free MPS");
  ModelArgs mps_args;
  std::string mps_out;
  mps_args.AddTo(mps, true);
  mps->add_option("--out", mps_out, "Output file")->required();

  CLI11_PARSE(app, argc, argv);

  if (*gen) {
    const Instance inst = gen_kind == "sched"
                              ? Instance(GenerateScheduling(gen_n, gen_seed))
                              : Instance(GenerateStrip(gen_n, gen_seed));
    WriteTo(gen_out, InstanceToJson(inst));
  } else if (*build) {
    const GdpModel m = build_args.Gdp();
    int disjuncts = 0, rows = 0;
    for (const Disjunction& d : m.disjunctions()) {
      disjuncts += static_cast<int>(d.disjuncts.size());
      for (const Disjunct& j : d.disjuncts) rows += static_cast<int>(j.rows.size());
    }
    std::cout << "variables " << m.num_vars() << "\n"
              << "booleans " << m.num_bools() << "\n"
              << "global_rows " << m.globals().size() << "\n"
              << "disjunctions " << m.disjunctions().size() << "\n"
              << "disjuncts " << disjuncts << "\n"
              << "disjunct_rows " << rows << "\n"
              << "logic_rows " << m.logic().size() << "\n";
  } else if (*reform) {
    const MilpStats s = reform_args.Milp().Stats();
    std::cout << "continuous " << s.continuous << "\n"
              << "binary " << s.binary << "\n"
              << "rows " << s.rows << "\n"
              << "nonzeros " << s.nonzeros << "\n";
  } else if (*solve) {
    const MilpModel milp = solve_args.Milp();
    const SolveResult r = SolveBranchAndBound(milp, solve_limits.bb);
    std::cout << "status " << SolveStatusName(r.status) << "\n"
              << "objective "
              << (r.has_incumbent ? FormatDouble(r.incumbent) : std::string("none"))
              << "\n"
              << "bound " << FormatDouble(r.bound) << "\n"
              << "gap_percent "
              << (r.has_incumbent ? FormatDouble(100.0 * r.rel_gap) : "inf") << "\n"
              << "root_bound " << FormatDouble(r.root_bound) << "\n"
              << "nodes " << r.nodes << "\n"
              << "time_s " << FormatDouble(r.wall_seconds) << "\n";
  } else if (*bench) {
    std::vector<BenchInstance> suite;
    bool scheduling = bench_kind == "sched";
    if (!bench_files.empty()) {
      for (const std::string& f : bench_files) {
        suite.push_back({std::filesystem::path(f).stem().string(), LoadInstance(f)});
      }
      scheduling = std::holds_alternative<SchedulingInstance>(suite.front().data);
    } else {
      suite = scheduling ? SchedulingSuite(n_min, n_max, seeds)
                         : StripSuite(n_min, n_max, seeds);
    }
    if (bench_concepts.empty()) {
      bench_concepts = scheduling ? "GP,GP_S,IP,TS" : "S_original,S_symbreak,S0,S1";
    }
    std::vector<ModelConcept> concepts;
    for (const std::string& c : SplitList(bench_concepts)) {
      concepts.push_back(ConceptOrThrow(c));
    }
    std::vector<Reformulation> reforms;
    for (const std::string& r : SplitList(bench_reforms)) {
      reforms.push_back(ParseReformulation(r));
    }
    const BenchReport report =
        RunBench(suite, concepts, reforms, {bench_limits.bb, bench_align});
    for (const RejectedRun& r : report.rejected) {
      std::cerr << "rejected " << r.concept_name << " x " << r.reformulation
                << (r.instance.empty() ? "" : " on " + r.instance) << ": "
                << r.reason << "\n";
    }
    std::ostringstream results;
    WriteRecordsCsv(results, report.records);
    if (bench_out_dir.empty()) {
      std::cout << results.str();
    } else {
      const std::filesystem::path dir(bench_out_dir);
      std::filesystem::create_directories(dir);
      WriteTo((dir / "results.csv").string(), results.str());
      std::ostringstream table, time_profile, gap_profile;
      WriteTableCsv(table, report.records, bench_limits.bb.time_limit);
      WriteTo((dir / "table.csv").string(), table.str());
      if (!report.records.empty()) {
        WriteProfileCsv(time_profile, BuildProfile(report.records, ProfileAxis::kTime));
        WriteProfileCsv(gap_profile, BuildProfile(report.records, ProfileAxis::kGap));
        WriteTo((dir / "profile_time.csv").string(), time_profile.str());
        WriteTo((dir / "profile_gap.csv").string(), gap_profile.str());
      }
      std::cout << report.records.size() << " runs written to " << dir.string()
                << "\n";
    }
  } else if (*profile) {
    std::ifstream in(profile_in);
    if (!in) throw std::runtime_error("cannot open " + profile_in);
    const std::vector<BenchRecord> records = ReadRecordsCsv(in);
    if (records.empty()) throw std::runtime_error("no records in " + profile_in);
    std::ostringstream out;
    WriteProfileCsv(out, BuildProfile(records, *ParseProfileAxis(profile_axis)));
    WriteTo(profile_out, out.str());
  } else if (*mps) {
    MakeParent(mps_out);
    ExportMps(mps_args.Milp(), mps_out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return Run(argc, argv);
  } catch (const InstanceError& e) {
    std::cerr << "error: " << e.what() << " (index " << e.index() << ")\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 1;
}
