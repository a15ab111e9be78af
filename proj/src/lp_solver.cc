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

#include "gldp/lp_solver.h"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gldp {

const char* LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kIterationLimit:
      return "iteration_limit";
  }
  return "?";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class VarStatus : std::uint8_t { kBasic, kAtLower, kAtUpper };

// Column p of the product-form update E = I + (w - e_p) e_p'.
struct Eta {
  int pos = -1;
  double pivot = 1.0;
  std::vector<int> index;
  std::vector<double> value;
};

}  // namespace

class DualSimplex::Impl {
 public:
  Impl(const MilpModel& model, LpOptions options);

  void SetColumnBounds(int col, double lower, double upper) {
    lower_.at(col) = lower;
    upper_.at(col) = upper;
  }
  double lower(int j) const { return lower_.at(j); }
  double upper(int j) const { return upper_.at(j); }

  LpResult Solve();

  LpBasis GetBasis() const {
    LpBasis b;
    if (!have_basis_) return b;
    b.basic = basis_;
    b.weights = weight_;
    b.status.reserve(status_.size());
    for (VarStatus st : status_) b.status.push_back(static_cast<std::uint8_t>(st));
    return b;
  }

  void SetBasis(const LpBasis& b) {
    if (b.basic.empty()) return;
    basis_ = b.basic;
    weight_ = b.weights;
    std::fill(pos_.begin(), pos_.end(), -1);
    for (int p = 0; p < m_; ++p) pos_[basis_[p]] = p;
    for (size_t j = 0; j < status_.size(); ++j) {
      status_[j] = static_cast<VarStatus>(b.status[j]);
    }
    have_basis_ = true;
  }

 private:
  using LuSolver =
      Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>>;

  bool UpdateLogicalBounds();
  void ResetToSlackBasis();
  bool Refactor();
  void Ftran(Eigen::VectorXd& v) const;
  void Btran(Eigen::VectorXd& v) const;
  void ScatterColumn(int j, Eigen::VectorXd& v) const;
  double DotColumn(int j, const Eigen::VectorXd& v) const;
  void ComputeDuals();
  void ComputePrimals();
  int FlipDualInfeasible();
  void PlaceNonbasicByDuals();
  // Shifts the cost of every movable nonbasic variable away from zero
  // reduced cost, keeping the basis dual feasible.
  void PerturbCosts();
  // Refactor and recompute primal and dual values from scratch.
  void Refresh();
  int SelectLeaving(bool bland) const;
  double MaxRowViolation(const std::vector<double>& x) const;
  LpResult MakeResult(LpStatus status, std::int64_t iterations) const;

  const MilpModel& model_;
  LpOptions options_;
  int n_ = 0;  // structural columns
  int m_ = 0;  // rows
  std::vector<int> col_start_;
  std::vector<int> row_index_;
  std::vector<double> value_;
  std::vector<double> row_lo_, row_hi_;
  std::vector<double> cost_;       // current, possibly perturbed
  std::vector<double> true_cost_;
  std::vector<double> lower_, upper_;
  std::vector<int> basis_;
  std::vector<double> weight_;  // dual steepest-edge weights per basis row
  std::vector<int> pos_;
  std::vector<VarStatus> status_;
  std::vector<double> x_;
  std::vector<double> d_;
  mutable LuSolver lu_;
  std::vector<Eta> etas_;
  bool have_basis_ = false;
};

DualSimplex::Impl::Impl(const MilpModel& model, LpOptions options)
    : model_(model), options_(options) {
  n_ = model.num_columns();
  m_ = model.num_rows();
  const int total = n_ + m_;
  std::vector<std::vector<std::pair<int, double>>> by_col(n_);
  row_lo_.assign(m_, -kInf);
  row_hi_.assign(m_, kInf);
  for (int i = 0; i < m_; ++i) {
    const MilpRow& row = model.rows()[i];
    for (const Term& t : row.terms) by_col.at(t.col).push_back({i, t.coef});
    if (row.sense != Sense::kGe) row_hi_[i] = row.rhs;
    if (row.sense != Sense::kLe) row_lo_[i] = row.rhs;
  }
  col_start_.push_back(0);
  for (int j = 0; j < n_; ++j) {
    for (auto [i, a] : by_col[j]) {
      row_index_.push_back(i);
      value_.push_back(a);
    }
    col_start_.push_back(static_cast<int>(row_index_.size()));
  }
  cost_.assign(total, 0.0);
  for (const Term& t : model.objective()) cost_[t.col] += t.coef;
  true_cost_ = cost_;
  lower_.assign(total, 0.0);
  upper_.assign(total, 0.0);
  for (int j = 0; j < n_; ++j) {
    lower_[j] = model.column(j).lower;
    upper_[j] = model.column(j).upper;
  }
  x_.assign(total, 0.0);
  d_.assign(total, 0.0);
  pos_.assign(total, -1);
  status_.assign(total, VarStatus::kAtLower);
  if (options_.iteration_limit <= 0) {
    options_.iteration_limit = 50LL * total + 10000;
  }
}

bool DualSimplex::Impl::UpdateLogicalBounds() {
  std::vector<double> act_min(m_, 0.0), act_max(m_, 0.0);
  for (int j = 0; j < n_; ++j) {
    for (int e = col_start_[j]; e < col_start_[j + 1]; ++e) {
      const double a = value_[e];
      const int i = row_index_[e];
      if (a > 0) {
        act_min[i] += a * lower_[j];
        act_max[i] += a * upper_[j];
      } else {
        act_min[i] += a * upper_[j];
        act_max[i] += a * lower_[j];
      }
    }
  }
  const double tol = options_.primal_tol;
  for (int i = 0; i < m_; ++i) {
    const int s = n_ + i;
    const double scale = 1.0 + std::max(std::abs(act_min[i]), std::abs(act_max[i]));
    if (row_lo_[i] > act_max[i] + tol * scale ||
        row_hi_[i] < act_min[i] - tol * scale) {
      return false;
    }
    lower_[s] = std::isfinite(row_lo_[i]) ? row_lo_[i]
                                          : std::min(act_min[i], row_hi_[i]);
    upper_[s] = std::isfinite(row_hi_[i]) ? row_hi_[i]
                                          : std::max(act_max[i], row_lo_[i]);
  }
  return true;
}

void DualSimplex::Impl::ResetToSlackBasis() {
  basis_.resize(m_);
  std::fill(pos_.begin(), pos_.end(), -1);
  for (int j = 0; j < n_; ++j) status_[j] = VarStatus::kAtLower;
  for (int i = 0; i < m_; ++i) {
    basis_[i] = n_ + i;
    pos_[n_ + i] = i;
    status_[n_ + i] = VarStatus::kBasic;
  }
  weight_.assign(m_, 1.0);
  have_basis_ = true;
}

bool DualSimplex::Impl::Refactor() {
  etas_.clear();
  std::vector<Eigen::Triplet<double>> triplets;
  for (int p = 0; p < m_; ++p) {
    const int j = basis_[p];
    if (j < n_) {
      for (int e = col_start_[j]; e < col_start_[j + 1]; ++e) {
        triplets.emplace_back(row_index_[e], p, value_[e]);
      }
    } else {
      triplets.emplace_back(j - n_, p, -1.0);
    }
  }
  Eigen::SparseMatrix<double> b(m_, m_);
  b.setFromTriplets(triplets.begin(), triplets.end());
  b.makeCompressed();
  lu_.analyzePattern(b);
  lu_.factorize(b);
  return lu_.info() == Eigen::Success;
}

void DualSimplex::Impl::Ftran(Eigen::VectorXd& v) const {
  v = lu_.solve(v).eval();
  for (const Eta& eta : etas_) {
    const double vp = v[eta.pos] / eta.pivot;
    v[eta.pos] = vp;
    if (vp == 0.0) continue;
    for (size_t k = 0; k < eta.index.size(); ++k) {
      v[eta.index[k]] -= eta.value[k] * vp;
    }
  }
}

void DualSimplex::Impl::Btran(Eigen::VectorXd& v) const {
  for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
    double acc = v[it->pos];
    for (size_t k = 0; k < it->index.size(); ++k) {
      acc -= it->value[k] * v[it->index[k]];
    }
    v[it->pos] = acc / it->pivot;
  }
  v = lu_.transpose().solve(v).eval();
}

void DualSimplex::Impl::ScatterColumn(int j, Eigen::VectorXd& v) const {
  v.setZero(m_);
  if (j < n_) {
    for (int e = col_start_[j]; e < col_start_[j + 1]; ++e) {
      v[row_index_[e]] = value_[e];
    }
  } else {
    v[j - n_] = -1.0;
  }
}

double DualSimplex::Impl::DotColumn(int j, const Eigen::VectorXd& v) const {
  if (j >= n_) return -v[j - n_];
  double sum = 0.0;
  for (int e = col_start_[j]; e < col_start_[j + 1]; ++e) {
    sum += value_[e] * v[row_index_[e]];
  }
  return sum;
}

void DualSimplex::Impl::ComputeDuals() {
  Eigen::VectorXd y(m_);
  for (int p = 0; p < m_; ++p) y[p] = cost_[basis_[p]];
  Btran(y);
  for (int j = 0; j < n_ + m_; ++j) {
    d_[j] = status_[j] == VarStatus::kBasic ? 0.0 : cost_[j] - DotColumn(j, y);
  }
}

void DualSimplex::Impl::ComputePrimals() {
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m_);
  for (int j = 0; j < n_ + m_; ++j) {
    if (status_[j] == VarStatus::kBasic) continue;
    x_[j] = status_[j] == VarStatus::kAtUpper ? upper_[j] : lower_[j];
    if (x_[j] == 0.0) continue;
    if (j < n_) {
      for (int e = col_start_[j]; e < col_start_[j + 1]; ++e) {
        rhs[row_index_[e]] -= value_[e] * x_[j];
      }
    } else {
      rhs[j - n_] += x_[j];
    }
  }
  Ftran(rhs);
  for (int p = 0; p < m_; ++p) x_[basis_[p]] = rhs[p];
}

int DualSimplex::Impl::FlipDualInfeasible() {
  int flipped = 0;
  for (int j = 0; j < n_ + m_; ++j) {
    if (status_[j] == VarStatus::kBasic || lower_[j] == upper_[j]) continue;
    if (status_[j] == VarStatus::kAtLower && d_[j] < -options_.dual_tol) {
      status_[j] = VarStatus::kAtUpper;
      ++flipped;
    } else if (status_[j] == VarStatus::kAtUpper && d_[j] > options_.dual_tol) {
      status_[j] = VarStatus::kAtLower;
      ++flipped;
    }
  }
  return flipped;
}

void DualSimplex::Impl::PlaceNonbasicByDuals() {
  for (int j = 0; j < n_ + m_; ++j) {
    if (status_[j] == VarStatus::kBasic) continue;
    if (lower_[j] == upper_[j] || d_[j] > options_.dual_tol) {
      status_[j] = VarStatus::kAtLower;
    } else if (d_[j] < -options_.dual_tol) {
      status_[j] = VarStatus::kAtUpper;
    }
  }
}

void DualSimplex::Impl::PerturbCosts() {
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  for (int j = 0; j < n_ + m_; ++j) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    if (status_[j] == VarStatus::kBasic || lower_[j] == upper_[j]) continue;
    const double u = static_cast<double>(state >> 11) * 0x1.0p-53;
    const double delta =
        options_.perturbation * (1.0 + std::abs(true_cost_[j])) * (1.0 + u);
    const double shift = status_[j] == VarStatus::kAtLower ? delta : -delta;
    cost_[j] += shift;
    d_[j] += shift;
  }
}

void DualSimplex::Impl::Refresh() {
  if (!Refactor()) {
    ResetToSlackBasis();
    if (!Refactor()) throw std::runtime_error("slack basis failed to factor");
  }
  ComputeDuals();
  FlipDualInfeasible();
  ComputePrimals();
}

int DualSimplex::Impl::SelectLeaving(bool bland) const {
  int best = -1;
  int best_var = std::numeric_limits<int>::max();
  double best_infeasibility = 0.0;
  for (int p = 0; p < m_; ++p) {
    const int v = basis_[p];
    const double tol = options_.primal_tol * (1.0 + std::abs(x_[v]));
    double infeasibility = 0.0;
    if (x_[v] < lower_[v] - tol) {
      infeasibility = lower_[v] - x_[v];
    } else if (x_[v] > upper_[v] + tol) {
      infeasibility = x_[v] - upper_[v];
    }
    if (infeasibility <= 0.0) continue;
    if (bland) {
      if (v < best_var) {
        best_var = v;
        best = p;
      }
    } else if (infeasibility * infeasibility > best_infeasibility * weight_[p]) {
      best_infeasibility = infeasibility * infeasibility / weight_[p];
      best = p;
    }
  }
  return best;
}

double DualSimplex::Impl::MaxRowViolation(const std::vector<double>& x) const {
  double worst = 0.0;
  for (const MilpRow& row : model_.rows()) {
    double lhs = 0.0;
    for (const Term& t : row.terms) lhs += t.coef * x[t.col];
    if (row.sense != Sense::kGe) worst = std::max(worst, lhs - row.rhs);
    if (row.sense != Sense::kLe) worst = std::max(worst, row.rhs - lhs);
  }
  for (int j = 0; j < n_; ++j) {
    worst = std::max({worst, lower_[j] - x[j], x[j] - upper_[j]});
  }
  return worst;
}

LpResult DualSimplex::Impl::MakeResult(LpStatus status,
                                       std::int64_t iterations) const {
  LpResult result;
  result.status = status;
  result.iterations = iterations;
  if (status == LpStatus::kOptimal) {
    result.x.assign(x_.begin(), x_.begin() + n_);
    for (int j = 0; j < n_; ++j) {
      result.x[j] = std::clamp(result.x[j], lower_[j], upper_[j]);
    }
    result.objective = model_.ObjectiveValue(result.x);
  }
  return result;
}

LpResult DualSimplex::Impl::Solve() {
  for (int j = 0; j < n_; ++j) {
    if (lower_[j] > upper_[j]) return MakeResult(LpStatus::kInfeasible, 0);
  }
  if (!UpdateLogicalBounds()) return MakeResult(LpStatus::kInfeasible, 0);
  if (m_ == 0) {
    for (int j = 0; j < n_; ++j) {
      x_[j] = cost_[j] < 0 ? upper_[j] : lower_[j];
    }
    return MakeResult(LpStatus::kOptimal, 0);
  }
  if (!have_basis_) ResetToSlackBasis();
  if (!Refactor()) {
    ResetToSlackBasis();
    if (!Refactor()) throw std::runtime_error("slack basis failed to factor");
  }
  cost_ = true_cost_;
  ComputeDuals();
  PlaceNonbasicByDuals();
  bool perturbed = options_.perturbation > 0.0;
  if (perturbed) PerturbCosts();
  ComputePrimals();

  const int total = n_ + m_;
  std::vector<double> alpha(total, 0.0);
  Eigen::VectorXd rho(m_), column(m_), tau(m_);
  std::int64_t iterations = 0;
  int degenerate_streak = 0;
  int certificate_retries = 0;
  bool bland = false;
  bool fresh = true;  // no updates since the last full recomputation

  while (true) {
    if (iterations >= options_.iteration_limit) {
      return MakeResult(LpStatus::kIterationLimit, iterations);
    }
    if (static_cast<int>(etas_.size()) >= options_.refactor_interval) {
      Refresh();
      fresh = true;
    }
    const int r = SelectLeaving(bland);
    if (r < 0) {
      if (!fresh) {
        Refresh();
        fresh = true;
        continue;
      }
      if (perturbed) {
        perturbed = false;
        cost_ = true_cost_;
        ComputeDuals();
        if (FlipDualInfeasible() > 0) ComputePrimals();
        continue;
      }
      LpResult result = MakeResult(LpStatus::kOptimal, iterations);
      if (MaxRowViolation(result.x) > options_.certificate_tol &&
          certificate_retries < 3) {
        ++certificate_retries;
        ResetToSlackBasis();
        Refresh();
        continue;
      }
      return result;
    }

    const int leaving = basis_[r];
    const bool to_lower = x_[leaving] < lower_[leaving];
    const double sign = to_lower ? -1.0 : 1.0;

    rho.setZero();
    rho[r] = 1.0;
    Btran(rho);
    for (int j = 0; j < total; ++j) {
      alpha[j] = status_[j] == VarStatus::kBasic ? 0.0 : DotColumn(j, rho);
    }

    // Dual ratio test: ratio_j = d_j / (sign * alpha_j) over nonbasic j that
    // can move in the direction that repairs the leaving row.
    int entering = -1;
    double min_ratio = kInf;
    double harris_bound = kInf;
    auto eligible = [&](int j) {
      if (status_[j] == VarStatus::kBasic || lower_[j] == upper_[j]) {
        return false;
      }
      const double sa = sign * alpha[j];
      if (std::abs(alpha[j]) <= options_.pivot_tol) return false;
      return status_[j] == VarStatus::kAtLower ? sa > 0 : sa < 0;
    };
    auto ratio_of = [&](int j) {
      const double dj = status_[j] == VarStatus::kAtLower ? std::max(d_[j], 0.0)
                                                          : std::min(d_[j], 0.0);
      return dj / (sign * alpha[j]);
    };
    for (int j = 0; j < total; ++j) {
      if (!eligible(j)) continue;
      const double ratio = ratio_of(j);
      if (bland) {
        if (ratio < min_ratio - 1e-12) {
          min_ratio = ratio;
          entering = j;
        }
      } else {
        const double relaxed =
            (d_[j] + (status_[j] == VarStatus::kAtLower ? options_.dual_tol
                                                         : -options_.dual_tol)) /
            (sign * alpha[j]);
        harris_bound = std::min(harris_bound, relaxed);
      }
    }
    if (!bland) {
      double best_pivot = 0.0;
      for (int j = 0; j < total; ++j) {
        if (!eligible(j)) continue;
        if (ratio_of(j) <= harris_bound && std::abs(alpha[j]) > best_pivot) {
          best_pivot = std::abs(alpha[j]);
          entering = j;
        }
      }
    }
    if (entering < 0) {
      if (!fresh) {
        Refresh();
        fresh = true;
        continue;
      }
      return MakeResult(LpStatus::kInfeasible, iterations);
    }

    // A Harris choice may carry a slightly wrong-signed reduced cost; shift
    // its cost to zero so the dual objective never moves backwards.
    if (status_[entering] == VarStatus::kAtLower ? d_[entering] < 0
                                                  : d_[entering] > 0) {
      cost_[entering] -= d_[entering];
      d_[entering] = 0.0;
      perturbed = true;
    }

    ScatterColumn(entering, column);
    Ftran(column);
    const double pivot = column[r];
    if (std::abs(pivot) <= options_.pivot_tol ||
        std::abs(pivot - alpha[entering]) >
            1e-6 * (1.0 + std::abs(pivot))) {
      if (!fresh) {
        Refresh();
        fresh = true;
        continue;
      }
      if (std::abs(pivot) <= options_.pivot_tol) {
        throw std::runtime_error("dual simplex: singular pivot on fresh basis");
      }
    }

    // Primal step: move the entering variable until the leaving one sits on
    // its violated bound.
    const double target = to_lower ? lower_[leaving] : upper_[leaving];
    const double delta = (x_[leaving] - target) / pivot;
    x_[entering] += delta;
    for (int p = 0; p < m_; ++p) x_[basis_[p]] -= delta * column[p];
    x_[leaving] = target;

    // Dual step.
    const double theta = d_[entering] / alpha[entering];
    for (int j = 0; j < total; ++j) {
      if (status_[j] != VarStatus::kBasic) d_[j] -= theta * alpha[j];
    }
    d_[leaving] = -theta;
    d_[entering] = 0.0;

    if (std::abs(theta) <= 1e-12) {
      if (++degenerate_streak >= options_.degenerate_streak_for_bland) {
        bland = true;
      }
    } else {
      degenerate_streak = 0;
      bland = false;
    }

    // Dual steepest-edge update; tau = B^-1 rho before the basis change.
    if (!bland) {
      tau = rho;
      Ftran(tau);
    }
    const double rho_norm2 = rho.squaredNorm();
    for (int p = 0; p < m_ && !bland; ++p) {
      if (p == r || column[p] == 0.0) continue;
      const double ratio = column[p] / pivot;
      weight_[p] = std::max(
          weight_[p] + ratio * (ratio * rho_norm2 - 2.0 * tau[p]), 1e-6);
    }
    weight_[r] = std::max(rho_norm2 / (pivot * pivot), 1e-6);

    Eta eta;
    eta.pos = r;
    eta.pivot = pivot;
    for (int p = 0; p < m_; ++p) {
      if (p != r && std::abs(column[p]) > 1e-14) {
        eta.index.push_back(p);
        eta.value.push_back(column[p]);
      }
    }
    etas_.push_back(std::move(eta));

    basis_[r] = entering;
    pos_[entering] = r;
    pos_[leaving] = -1;
    status_[entering] = VarStatus::kBasic;
    status_[leaving] = to_lower ? VarStatus::kAtLower : VarStatus::kAtUpper;
    fresh = false;
    ++iterations;
  }
}

DualSimplex::DualSimplex(const MilpModel& model, LpOptions options)
    : impl_(std::make_unique<Impl>(model, options)) {}

DualSimplex::~DualSimplex() = default;

void DualSimplex::SetColumnBounds(int col, double lower, double upper) {
  impl_->SetColumnBounds(col, lower, upper);
}

double DualSimplex::column_lower(int col) const { return impl_->lower(col); }
double DualSimplex::column_upper(int col) const { return impl_->upper(col); }

LpResult DualSimplex::Solve() { return impl_->Solve(); }

LpBasis DualSimplex::GetBasis() const { return impl_->GetBasis(); }
void DualSimplex::SetBasis(const LpBasis& basis) { impl_->SetBasis(basis); }

LpResult SolveLp(const MilpModel& model,
                 std::span<const BoundOverride> overrides, LpOptions options) {
  DualSimplex lp(model, options);
  for (const BoundOverride& o : overrides) {
    lp.SetColumnBounds(o.col, o.lower, o.upper);
  }
  return lp.Solve();
}

}  // namespace gldp
