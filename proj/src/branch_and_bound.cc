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

#include "gldp/branch_and_bound.h"

#include <chrono>
#include <cmath>
#include <limits>
#include <memory>
#include <queue>
#include <stdexcept>
#include <utility>

#include "gldp/lp_solver.h"

namespace gldp {

std::string_view SolveStatusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kGapLimit:
      return "gap_limit";
    case SolveStatus::kTimeLimit:
      return "time_limit";
    case SolveStatus::kNodeLimit:
      return "node_limit";
    case SolveStatus::kInfeasible:
      return "infeasible";
  }
  return "?";
}

bool IsSolved(SolveStatus status) {
  return status == SolveStatus::kOptimal || status == SolveStatus::kGapLimit;
}

double RelativeGap(double incumbent, double bound) {
  return (incumbent - bound) / std::max(std::abs(incumbent), 1e-9);
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Node {
  double bound = -kInf;  // parent LP objective
  std::int64_t id = 0;
  std::vector<std::pair<int, double>> fixings;
  std::shared_ptr<const LpBasis> warm;  // parent's optimal basis
};

struct WorseNode {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    return a.id > b.id;
  }
};

}  // namespace

SolveResult SolveBranchAndBound(const MilpModel& model, const BbConfig& config) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(Clock::now() - start).count();
  };

  const std::vector<int> binaries = model.BinaryColumns();
  DualSimplex lp(model);

  SolveResult result;
  result.incumbent = kInf;
  double global_bound = -kInf;
  bool root_done = false;

  std::priority_queue<Node, std::vector<Node>, WorseNode> open;
  std::int64_t next_id = 0;
  open.push(Node{-kInf, next_id++, {}, nullptr});

  auto record_bound = [&](double b) {
    if (result.has_incumbent) b = std::min(b, result.incumbent);
    global_bound = std::max(global_bound, b);
    result.bound_history.push_back(global_bound);
  };

  SolveStatus stop = SolveStatus::kOptimal;
  bool exhausted = false;
  while (true) {
    if (open.empty()) {
      exhausted = true;
      break;
    }
    const double best_open = open.top().bound;
    if (result.has_incumbent &&
        best_open >= result.incumbent - config.abs_tol) {
      exhausted = true;
      break;
    }
    if (result.has_incumbent &&
        RelativeGap(result.incumbent, std::max(global_bound, best_open)) <=
            config.rel_gap) {
      stop = SolveStatus::kGapLimit;
      break;
    }
    if (config.time_limit > 0 && elapsed() >= config.time_limit) {
      stop = SolveStatus::kTimeLimit;
      break;
    }
    if (config.node_limit > 0 && result.nodes >= config.node_limit) {
      stop = SolveStatus::kNodeLimit;
      break;
    }

    Node node = open.top();
    open.pop();
    for (int b : binaries) {
      lp.SetColumnBounds(b, model.column(b).lower, model.column(b).upper);
    }
    for (auto [col, value] : node.fixings) lp.SetColumnBounds(col, value, value);
    if (node.warm) lp.SetBasis(*node.warm);
    const LpResult relax = lp.Solve();
    ++result.nodes;
    if (relax.status == LpStatus::kIterationLimit ||
        relax.status == LpStatus::kUnbounded) {
      throw std::runtime_error(std::string("node LP ended with status ") +
                               LpStatusName(relax.status));
    }
    const bool feasible = relax.status == LpStatus::kOptimal;
    if (!root_done) {
      root_done = true;
      result.root_bound = feasible ? relax.objective : kInf;
    }
    if (!feasible || (result.has_incumbent &&
                      relax.objective >= result.incumbent - config.abs_tol)) {
      record_bound(open.empty() ? kInf : open.top().bound);
      continue;
    }

    int branch = -1;
    double best_frac = config.int_tol;
    for (int b : binaries) {
      const double v = relax.x[b];
      const double frac = std::min(v - std::floor(v), std::ceil(v) - v);
      if (frac > best_frac) {
        best_frac = frac;
        branch = b;
      }
    }
    if (branch < 0) {
      result.has_incumbent = true;
      result.incumbent = relax.objective;
      result.solution = relax.x;
      for (int b : binaries) result.solution[b] = std::round(relax.x[b]);
      record_bound(open.empty() ? kInf : open.top().bound);
      continue;
    }
    auto warm = std::make_shared<const LpBasis>(lp.GetBasis());
    for (double value : {0.0, 1.0}) {
      Node child{relax.objective, next_id++, node.fixings, warm};
      child.fixings.emplace_back(branch, value);
      open.push(std::move(child));
    }
    record_bound(open.top().bound);
  }

  result.wall_seconds = elapsed();
  if (!result.has_incumbent) {
    result.rel_gap = kInf;
    if (exhausted) {
      result.status = SolveStatus::kInfeasible;
      result.bound = kInf;
    } else {
      result.status = stop;
      result.bound = open.empty() ? global_bound
                                  : std::max(global_bound, open.top().bound);
    }
    return result;
  }
  if (exhausted) {
    result.status = SolveStatus::kOptimal;
    result.bound = result.incumbent;
  } else {
    result.status = stop;
    result.bound = std::min(result.incumbent,
                            std::max(global_bound, open.top().bound));
  }
  result.rel_gap = std::max(0.0, RelativeGap(result.incumbent, result.bound));
  return result;
}

}  // namespace gldp
