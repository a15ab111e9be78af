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

#include "gldp/milp_model.h"

#include <algorithm>
#include <cmath>

namespace gldp {

std::string Provenance::ToString() const {
  std::string s = pass;
  if (!kind.empty()) s += "/" + kind;
  if (disjunction >= 0) s += "/k" + std::to_string(disjunction);
  if (disjunct >= 0) s += "/j" + std::to_string(disjunct);
  if (row >= 0) s += "/r" + std::to_string(row);
  return s;
}

std::vector<Term> NormalizeTerms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.col < b.col; });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (const Term& t : terms) {
    if (!merged.empty() && merged.back().col == t.col) {
      merged.back().coef += t.coef;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coef == 0.0; });
  return merged;
}

int MilpModel::AddColumn(std::string name, ColumnKind kind, double lower,
                         double upper) {
  columns_.push_back(Column{std::move(name), kind, lower, upper});
  return num_columns() - 1;
}

void MilpModel::AddRow(std::vector<Term> terms, Sense sense, double rhs,
                       Provenance provenance) {
  terms = NormalizeTerms(std::move(terms));
  if (terms.empty()) return;
  rows_.push_back(MilpRow{std::move(terms), sense, rhs, std::move(provenance)});
}

void MilpModel::SetObjective(std::vector<Term> terms) {
  objective_ = NormalizeTerms(std::move(terms));
}

std::vector<int> MilpModel::BinaryColumns() const {
  std::vector<int> out;
  for (int j = 0; j < num_columns(); ++j) {
    if (columns_[j].kind == ColumnKind::kBinary) out.push_back(j);
  }
  return out;
}

MilpStats MilpModel::Stats() const {
  MilpStats s;
  for (const Column& c : columns_) {
    (c.kind == ColumnKind::kBinary ? s.binary : s.continuous)++;
  }
  s.rows = num_rows();
  for (const MilpRow& r : rows_) s.nonzeros += static_cast<int>(r.terms.size());
  return s;
}

double MilpModel::ObjectiveValue(const std::vector<double>& x) const {
  double z = 0.0;
  for (const Term& t : objective_) z += t.coef * x.at(t.col);
  return z;
}

double MilpModel::MaxViolation(const std::vector<double>& x) const {
  double worst = 0.0;
  for (int j = 0; j < num_columns(); ++j) {
    worst = std::max({worst, columns_[j].lower - x.at(j),
                      x.at(j) - columns_[j].upper});
  }
  for (const MilpRow& r : rows_) {
    double lhs = 0.0;
    for (const Term& t : r.terms) lhs += t.coef * x.at(t.col);
    switch (r.sense) {
      case Sense::kLe:
        worst = std::max(worst, lhs - r.rhs);
        break;
      case Sense::kGe:
        worst = std::max(worst, r.rhs - lhs);
        break;
      case Sense::kEq:
        worst = std::max(worst, std::abs(lhs - r.rhs));
        break;
    }
  }
  return worst;
}

}  // namespace gldp
