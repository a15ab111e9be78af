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

// Intermediate representation for generalized linear disjunctive programs:
//
//   min  c'x
//   s.t. B x <= b                                  (globals)
//        XOR_{j in D_k} [ Y_jk ; A_jk x <= b_jk ]  for every disjunction k
//        D y <= d                                  (linearized logic)
//        x in [x^L, x^U],  Y boolean.
//
// Every continuous variable carries a finite box; reformulation passes rely
// on it for Big-M coefficients and hull bound links.

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gldp {

struct VarId {
  int value = -1;
  friend auto operator<=>(const VarId&, const VarId&) = default;
};

struct BoolId {
  int value = -1;
  friend auto operator<=>(const BoolId&, const BoolId&) = default;
};

enum class Sense { kLe, kGe, kEq };

const char* SenseSymbol(Sense sense);

struct ContinuousVar {
  std::string name;
  double lower = 0.0;
  double upper = 0.0;
};

struct LinTerm {
  VarId var;
  double coef = 0.0;
  friend bool operator==(const LinTerm&, const LinTerm&) = default;
};

// A single linear row sum_i coef_i * x_i (sense) rhs. Terms are kept sorted
// by variable with duplicates merged and zero coefficients dropped.
struct LinRow {
  std::vector<LinTerm> terms;
  Sense sense = Sense::kLe;
  double rhs = 0.0;

  static LinRow Make(std::vector<LinTerm> terms, Sense sense, double rhs);
  static LinRow Le(std::vector<LinTerm> terms, double rhs) {
    return Make(std::move(terms), Sense::kLe, rhs);
  }
  static LinRow Ge(std::vector<LinTerm> terms, double rhs) {
    return Make(std::move(terms), Sense::kGe, rhs);
  }
  static LinRow Eq(std::vector<LinTerm> terms, double rhs) {
    return Make(std::move(terms), Sense::kEq, rhs);
  }

  friend bool operator==(const LinRow&, const LinRow&) = default;
};

// Dense lexicographic order on coefficient vectors (absent entries are zero).
// Returns <0, 0, >0.
int CompareCoefficients(const std::vector<LinTerm>& a,
                        const std::vector<LinTerm>& b);

struct Disjunct {
  std::string name;
  BoolId indicator;
  std::vector<LinRow> rows;
};

struct Disjunction {
  std::string name;
  std::vector<Disjunct> disjuncts;
};

enum class LogicSense { kLe, kEq };

struct LogicTerm {
  BoolId var;
  int coef = 0;
};

// Pre-linearized logic proposition: sum coef * y (sense) rhs over binaries.
struct LogicRow {
  std::vector<LogicTerm> terms;
  LogicSense sense = LogicSense::kLe;
  int rhs = 0;
};

struct Diagnostic {
  std::string entity;
  std::string message;
};

class GdpModel {
 public:
  GdpModel() = default;
  explicit GdpModel(std::string name) : name_(std::move(name)) {}

  VarId AddVar(std::string name, double lower, double upper);
  BoolId AddBool(std::string name);
  void AddGlobal(LinRow row) { globals_.push_back(std::move(row)); }
  int AddDisjunction(Disjunction disjunction);
  void AddLogic(LogicRow row) { logic_.push_back(std::move(row)); }
  void SetObjective(std::vector<LinTerm> terms);

  const std::string& name() const { return name_; }
  const std::vector<ContinuousVar>& vars() const { return vars_; }
  const ContinuousVar& var(VarId id) const { return vars_.at(id.value); }
  const std::vector<std::string>& bools() const { return bools_; }
  const std::vector<LinTerm>& objective() const { return objective_; }
  const std::vector<LinRow>& globals() const { return globals_; }
  const std::vector<Disjunction>& disjunctions() const { return disjunctions_; }
  const std::vector<LogicRow>& logic() const { return logic_; }

  int num_vars() const { return static_cast<int>(vars_.size()); }
  int num_bools() const { return static_cast<int>(bools_.size()); }

 private:
  std::string name_;
  std::vector<ContinuousVar> vars_;
  std::vector<std::string> bools_;
  std::vector<LinTerm> objective_;
  std::vector<LinRow> globals_;
  std::vector<Disjunction> disjunctions_;
  std::vector<LogicRow> logic_;
};

// Reports every violated IR invariant; empty means the model is valid.
std::vector<Diagnostic> Validate(const GdpModel& model);

class InvalidModelError : public std::invalid_argument {
 public:
  explicit InvalidModelError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

// Throws InvalidModelError when Validate reports anything.
void RequireValid(const GdpModel& model);

// Rewrites every row into <= form: >= rows are negated, = rows become a <=
// pair. Rows come back sorted by coefficient vector, ties broken by rhs.
Disjunct CanonicalizeRows(const Disjunct& disjunct);

// Evaluates sum coef * x for a dense point indexed by VarId.
double Evaluate(const std::vector<LinTerm>& terms,
                const std::vector<double>& point);
bool IsSatisfied(const LinRow& row, const std::vector<double>& point,
                 double tol);

}  // namespace gldp
