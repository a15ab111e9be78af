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

#pragma once

#include <string>
#include <vector>

#include "gldp/gdp.h"

namespace gldp {

enum class ColumnKind { kContinuous, kBinary };

struct Column {
  std::string name;
  ColumnKind kind = ColumnKind::kContinuous;
  double lower = 0.0;
  double upper = 0.0;
};

struct Term {
  int col = -1;
  double coef = 0.0;
  friend bool operator==(const Term&, const Term&) = default;
};

// Where a MILP row came from. `pass` is one of "global", "logic", "bm",
// "hr", "rhr"; `kind` distinguishes the row families a pass emits.
struct Provenance {
  std::string pass;
  std::string kind;
  int disjunction = -1;
  int disjunct = -1;
  int row = -1;

  std::string ToString() const;
};

struct MilpRow {
  std::vector<Term> terms;  // sorted by column, no zeros
  Sense sense = Sense::kLe;
  double rhs = 0.0;
  Provenance provenance;
};

struct MilpStats {
  int continuous = 0;
  int binary = 0;
  int rows = 0;
  int nonzeros = 0;
};

class MilpModel {
 public:
  MilpModel() = default;
  explicit MilpModel(std::string name) : name_(std::move(name)) {}

  int AddColumn(std::string name, ColumnKind kind, double lower, double upper);
  // Terms are merged and sorted; rows whose terms all cancel are dropped.
  void AddRow(std::vector<Term> terms, Sense sense, double rhs,
              Provenance provenance);
  void SetObjective(std::vector<Term> terms);

  const std::string& name() const { return name_; }
  const std::vector<Column>& columns() const { return columns_; }
  const Column& column(int j) const { return columns_.at(j); }
  const std::vector<MilpRow>& rows() const { return rows_; }
  const std::vector<Term>& objective() const { return objective_; }
  int num_columns() const { return static_cast<int>(columns_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }

  std::vector<int> BinaryColumns() const;
  MilpStats Stats() const;

  double ObjectiveValue(const std::vector<double>& x) const;
  // Largest violation of any row or column bound at x (0 when feasible).
  double MaxViolation(const std::vector<double>& x) const;

 private:
  std::string name_;
  std::vector<Column> columns_;
  std::vector<MilpRow> rows_;
  std::vector<Term> objective_;
};

std::vector<Term> NormalizeTerms(std::vector<Term> terms);

}  // namespace gldp
