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

#include "gldp/reformulate.h"

#include <algorithm>
#include <cmath>
#include <set>

namespace gldp {

std::string_view ReformulationName(Reformulation r) {
  switch (r) {
    case Reformulation::kBigM:
      return "BM";
    case Reformulation::kHull:
      return "HR";
    case Reformulation::kReaggregatedHull:
      return "RHR";
  }
  return "?";
}

Reformulation ParseReformulation(std::string_view name) {
  if (name == "BM") return Reformulation::kBigM;
  if (name == "HR") return Reformulation::kHull;
  if (name == "RHR") return Reformulation::kReaggregatedHull;
  throw std::invalid_argument("unknown reformulation '" + std::string(name) +
                              "' (expected BM, HR or RHR)");
}

double IntervalMax(const std::vector<LinTerm>& terms,
                   const std::vector<ContinuousVar>& boxes) {
  double total = 0.0;
  for (const LinTerm& t : terms) {
    const ContinuousVar& box = boxes.at(t.var.value);
    const double bound = t.coef > 0 ? box.upper : box.lower;
    if (!std::isfinite(bound)) {
      throw std::invalid_argument("variable '" + box.name +
                                  "' has an infinite box");
    }
    total += t.coef * bound;
  }
  return total;
}

double BigMBound(const LinRow& row, const std::vector<ContinuousVar>& boxes) {
  if (row.sense != Sense::kLe) {
    throw std::invalid_argument("BigMBound expects a canonical <= row");
  }
  return IntervalMax(row.terms, boxes) - row.rhs;
}

std::vector<VarId> VarsInDisjunction(const Disjunction& disjunction) {
  std::set<VarId> vars;
  for (const Disjunct& d : disjunction.disjuncts) {
    for (const LinRow& row : d.rows) {
      for (const LinTerm& t : row.terms) vars.insert(t.var);
    }
  }
  return {vars.begin(), vars.end()};
}

namespace {

int BinaryColumn(const GdpModel& model, BoolId b) {
  return model.num_vars() + b.value;
}

std::vector<Term> ToTerms(const std::vector<LinTerm>& terms) {
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const LinTerm& t : terms) out.push_back({t.var.value, t.coef});
  return out;
}

// Columns for x and y, global rows, logic rows and the objective.
MilpModel CommonSkeleton(const GdpModel& model, std::string_view pass) {
  RequireValid(model);
  MilpModel milp(model.name() + "_" + std::string(pass));
  for (const ContinuousVar& v : model.vars()) {
    milp.AddColumn(v.name, ColumnKind::kContinuous, v.lower, v.upper);
  }
  for (const std::string& b : model.bools()) {
    milp.AddColumn(b, ColumnKind::kBinary, 0.0, 1.0);
  }
  for (size_t g = 0; g < model.globals().size(); ++g) {
    const LinRow& row = model.globals()[g];
    milp.AddRow(ToTerms(row.terms), row.sense, row.rhs,
                {"global", "", -1, -1, static_cast<int>(g)});
  }
  for (size_t l = 0; l < model.logic().size(); ++l) {
    const LogicRow& row = model.logic()[l];
    std::vector<Term> terms;
    for (const LogicTerm& t : row.terms) {
      terms.push_back({BinaryColumn(model, t.var), static_cast<double>(t.coef)});
    }
    milp.AddRow(std::move(terms),
                row.sense == LogicSense::kEq ? Sense::kEq : Sense::kLe,
                row.rhs, {"logic", "", -1, -1, static_cast<int>(l)});
  }
  milp.SetObjective(ToTerms(model.objective()));
  return milp;
}

void AddExactlyOne(const GdpModel& model, const Disjunction& disj, int k,
                   std::string_view pass, MilpModel& milp) {
  std::vector<Term> terms;
  for (const Disjunct& d : disj.disjuncts) {
    terms.push_back({BinaryColumn(model, d.indicator), 1.0});
  }
  milp.AddRow(std::move(terms), Sense::kEq, 1.0,
              {std::string(pass), "exactly-one", k, -1, -1});
}

}  // namespace

BigMCoeffs ComputeBigM(const GdpModel& model) {
  BigMCoeffs coeffs;
  for (const Disjunction& disj : model.disjunctions()) {
    auto& per_disjunction = coeffs.m.emplace_back();
    for (const Disjunct& d : disj.disjuncts) {
      auto& per_disjunct = per_disjunction.emplace_back();
      for (const LinRow& row : CanonicalizeRows(d).rows) {
        per_disjunct.push_back(std::max(BigMBound(row, model.vars()), 0.0));
      }
    }
  }
  return coeffs;
}

MilpModel ReformulateBigM(const GdpModel& model) {
  MilpModel milp = CommonSkeleton(model, "BM");
  const BigMCoeffs coeffs = ComputeBigM(model);
  for (size_t k = 0; k < model.disjunctions().size(); ++k) {
    const Disjunction& disj = model.disjunctions()[k];
    for (size_t j = 0; j < disj.disjuncts.size(); ++j) {
      const Disjunct canonical = CanonicalizeRows(disj.disjuncts[j]);
      const int y = BinaryColumn(model, canonical.indicator);
      for (size_t r = 0; r < canonical.rows.size(); ++r) {
        // a'x - b <= M (1 - y)  <=>  a'x + M y <= b + M
        const double m = coeffs.m[k][j][r];
        std::vector<Term> terms = ToTerms(canonical.rows[r].terms);
        terms.push_back({y, m});
        milp.AddRow(std::move(terms), Sense::kLe, canonical.rows[r].rhs + m,
                    {"bm", "disjunct-row", static_cast<int>(k),
                     static_cast<int>(j), static_cast<int>(r)});
      }
    }
    AddExactlyOne(model, disj, static_cast<int>(k), "bm", milp);
  }
  return milp;
}

MilpModel ReformulateHull(const GdpModel& model, DisaggVarMap* disagg) {
  MilpModel milp = CommonSkeleton(model, "HR");
  for (size_t k = 0; k < model.disjunctions().size(); ++k) {
    const Disjunction& disj = model.disjunctions()[k];
    const int kk = static_cast<int>(k);
    const std::vector<VarId> vars = VarsInDisjunction(disj);
    // copies[j][v] is the column of the disaggregated copy of vars[v].
    std::vector<std::vector<int>> copies(disj.disjuncts.size());
    for (size_t j = 0; j < disj.disjuncts.size(); ++j) {
      for (VarId v : vars) {
        const ContinuousVar& box = model.var(v);
        const int col = milp.AddColumn(
            box.name + "_hat_k" + std::to_string(k) + "_j" + std::to_string(j),
            ColumnKind::kContinuous, std::min(box.lower, 0.0),
            std::max(box.upper, 0.0));
        copies[j].push_back(col);
        if (disagg != nullptr) {
          (*disagg)[{kk, static_cast<int>(j), v.value}] = col;
        }
      }
    }
    auto copy_of = [&](size_t j, VarId v) {
      auto it = std::lower_bound(vars.begin(), vars.end(), v);
      return copies[j][it - vars.begin()];
    };
    for (size_t j = 0; j < disj.disjuncts.size(); ++j) {
      const int jj = static_cast<int>(j);
      const Disjunct canonical = CanonicalizeRows(disj.disjuncts[j]);
      const int y = BinaryColumn(model, canonical.indicator);
      for (size_t r = 0; r < canonical.rows.size(); ++r) {
        const LinRow& row = canonical.rows[r];
        std::vector<Term> terms;
        for (const LinTerm& t : row.terms) {
          terms.push_back({copy_of(j, t.var), t.coef});
        }
        terms.push_back({y, -row.rhs});
        milp.AddRow(std::move(terms), Sense::kLe, 0.0,
                    {"hr", "disjunct-row", kk, jj, static_cast<int>(r)});
      }
      for (VarId v : vars) {
        const ContinuousVar& box = model.var(v);
        const int col = copy_of(j, v);
        milp.AddRow({{y, box.lower}, {col, -1.0}}, Sense::kLe, 0.0,
                    {"hr", "lower-link", kk, jj, v.value});
        milp.AddRow({{col, 1.0}, {y, -box.upper}}, Sense::kLe, 0.0,
                    {"hr", "upper-link", kk, jj, v.value});
      }
    }
    for (VarId v : vars) {
      std::vector<Term> terms{{v.value, 1.0}};
      for (size_t j = 0; j < disj.disjuncts.size(); ++j) {
        terms.push_back({copy_of(j, v), -1.0});
      }
      milp.AddRow(std::move(terms), Sense::kEq, 0.0,
                  {"hr", "aggregate", kk, -1, v.value});
    }
    AddExactlyOne(model, disj, kk, "hr", milp);
  }
  return milp;
}

bool SharedLhs(const Disjunction& disjunction) {
  if (disjunction.disjuncts.empty()) return true;
  const Disjunct first = CanonicalizeRows(disjunction.disjuncts.front());
  for (size_t j = 1; j < disjunction.disjuncts.size(); ++j) {
    const Disjunct other = CanonicalizeRows(disjunction.disjuncts[j]);
    if (other.rows.size() != first.rows.size()) return false;
    for (size_t r = 0; r < first.rows.size(); ++r) {
      if (other.rows[r].terms != first.rows[r].terms) return false;
    }
  }
  return true;
}

Disjunction AlignDisjunction(const Disjunction& disjunction,
                             const std::vector<ContinuousVar>& boxes) {
  std::vector<Disjunct> canonical;
  std::vector<std::vector<LinTerm>> vectors;
  for (const Disjunct& d : disjunction.disjuncts) {
    canonical.push_back(CanonicalizeRows(d));
    for (const LinRow& row : canonical.back().rows) vectors.push_back(row.terms);
  }
  auto less = [](const std::vector<LinTerm>& a, const std::vector<LinTerm>& b) {
    return CompareCoefficients(a, b) < 0;
  };
  std::sort(vectors.begin(), vectors.end(), less);
  vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());

  Disjunction out{disjunction.name, {}};
  for (const Disjunct& d : canonical) {
    Disjunct aligned{d.name, d.indicator, {}};
    for (const std::vector<LinTerm>& v : vectors) {
      double rhs = IntervalMax(v, boxes);
      for (const LinRow& row : d.rows) {
        if (row.terms == v) rhs = std::min(rhs, row.rhs);
      }
      aligned.rows.push_back(LinRow{v, Sense::kLe, rhs});
    }
    out.disjuncts.push_back(std::move(aligned));
  }
  return out;
}

SharedLhsViolation::SharedLhsViolation(int disjunction,
                                       const std::string& name)
    : std::invalid_argument("disjunction " + std::to_string(disjunction) +
                            " '" + name +
                            "' does not share a left-hand side across its "
                            "disjuncts; RHR needs aligned rows"),
      disjunction_(disjunction) {}

MilpModel ReformulateReaggregatedHull(const GdpModel& model, bool auto_align) {
  MilpModel milp = CommonSkeleton(model, "RHR");
  for (size_t k = 0; k < model.disjunctions().size(); ++k) {
    const int kk = static_cast<int>(k);
    Disjunction disj = model.disjunctions()[k];
    if (!SharedLhs(disj)) {
      if (!auto_align) throw SharedLhsViolation(kk, disj.name);
      disj = AlignDisjunction(disj, model.vars());
    }
    std::vector<Disjunct> canonical;
    for (const Disjunct& d : disj.disjuncts) {
      canonical.push_back(CanonicalizeRows(d));
    }
    const size_t num_rows = canonical.front().rows.size();
    for (size_t r = 0; r < num_rows; ++r) {
      // A_k x - sum_j b_jk y_jk <= 0
      std::vector<Term> terms = ToTerms(canonical.front().rows[r].terms);
      for (const Disjunct& d : canonical) {
        terms.push_back({BinaryColumn(model, d.indicator), -d.rows[r].rhs});
      }
      milp.AddRow(std::move(terms), Sense::kLe, 0.0,
                  {"rhr", "aggregated-row", kk, -1, static_cast<int>(r)});
    }
    AddExactlyOne(model, disj, kk, "rhr", milp);
  }
  return milp;
}

MilpModel Reformulate(const GdpModel& model, Reformulation reformulation,
                      bool auto_align) {
  switch (reformulation) {
    case Reformulation::kBigM:
      return ReformulateBigM(model);
    case Reformulation::kHull:
      return ReformulateHull(model);
    case Reformulation::kReaggregatedHull:
      return ReformulateReaggregatedHull(model, auto_align);
  }
  throw std::invalid_argument("unknown reformulation");
}

}  // namespace gldp
