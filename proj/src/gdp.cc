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

#include "gldp/gdp.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace gldp {

const char* SenseSymbol(Sense sense) {
  switch (sense) {
    case Sense::kLe:
      return "<=";
    case Sense::kGe:
      return ">=";
    case Sense::kEq:
      return "=";
  }
  return "?";
}

LinRow LinRow::Make(std::vector<LinTerm> terms, Sense sense, double rhs) {
  std::sort(terms.begin(), terms.end(),
            [](const LinTerm& a, const LinTerm& b) { return a.var < b.var; });
  std::vector<LinTerm> merged;
  merged.reserve(terms.size());
  for (const LinTerm& t : terms) {
    if (!merged.empty() && merged.back().var == t.var) {
      merged.back().coef += t.coef;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const LinTerm& t) { return t.coef == 0.0; });
  return LinRow{std::move(merged), sense, rhs};
}

int CompareCoefficients(const std::vector<LinTerm>& a,
                        const std::vector<LinTerm>& b) {
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    double ca = 0.0, cb = 0.0;
    if (j >= b.size() || (i < a.size() && a[i].var < b[j].var)) {
      ca = a[i++].coef;
    } else if (i >= a.size() || b[j].var < a[i].var) {
      cb = b[j++].coef;
    } else {
      ca = a[i++].coef;
      cb = b[j++].coef;
    }
    if (ca < cb) return -1;
    if (ca > cb) return 1;
  }
  return 0;
}

VarId GdpModel::AddVar(std::string name, double lower, double upper) {
  vars_.push_back(ContinuousVar{std::move(name), lower, upper});
  return VarId{static_cast<int>(vars_.size()) - 1};
}

BoolId GdpModel::AddBool(std::string name) {
  bools_.push_back(std::move(name));
  return BoolId{static_cast<int>(bools_.size()) - 1};
}

int GdpModel::AddDisjunction(Disjunction disjunction) {
  disjunctions_.push_back(std::move(disjunction));
  return static_cast<int>(disjunctions_.size()) - 1;
}

void GdpModel::SetObjective(std::vector<LinTerm> terms) {
  objective_ = LinRow::Make(std::move(terms), Sense::kLe, 0.0).terms;
}

namespace {

void CheckRow(const GdpModel& model, const LinRow& row,
              const std::string& entity, std::vector<Diagnostic>& out) {
  if (row.terms.empty()) {
    out.push_back({entity, "row has no nonzero coefficient"});
  }
  if (!std::isfinite(row.rhs)) {
    out.push_back({entity, "row has a non-finite right-hand side"});
  }
  for (const LinTerm& t : row.terms) {
    if (t.var.value < 0 || t.var.value >= model.num_vars()) {
      out.push_back({entity, "references undeclared variable #" +
                                 std::to_string(t.var.value)});
    }
    if (!std::isfinite(t.coef)) {
      out.push_back({entity, "row has a non-finite coefficient"});
    }
  }
}

bool BoolDeclared(const GdpModel& model, BoolId id) {
  return id.value >= 0 && id.value < model.num_bools();
}

}  // namespace

std::vector<Diagnostic> Validate(const GdpModel& model) {
  std::vector<Diagnostic> out;
  for (const ContinuousVar& v : model.vars()) {
    const std::string entity = "variable '" + v.name + "'";
    if (!std::isfinite(v.lower) || !std::isfinite(v.upper)) {
      out.push_back({entity, "box must be finite on both sides"});
    } else if (v.lower > v.upper) {
      std::ostringstream msg;
      msg << "inverted box [" << v.lower << ", " << v.upper << "]";
      out.push_back({entity, msg.str()});
    }
  }
  for (const LinTerm& t : model.objective()) {
    if (t.var.value < 0 || t.var.value >= model.num_vars()) {
      out.push_back({"objective", "references undeclared variable #" +
                                      std::to_string(t.var.value)});
    }
  }
  for (size_t g = 0; g < model.globals().size(); ++g) {
    CheckRow(model, model.globals()[g], "global row " + std::to_string(g),
             out);
  }
  for (size_t k = 0; k < model.disjunctions().size(); ++k) {
    const Disjunction& disj = model.disjunctions()[k];
    const std::string entity =
        "disjunction " + std::to_string(k) + " '" + disj.name + "'";
    if (disj.disjuncts.size() < 2) {
      out.push_back({entity, "needs at least two disjuncts"});
    }
    std::set<int> seen;
    for (const Disjunct& d : disj.disjuncts) {
      const std::string dname = entity + " disjunct '" + d.name + "'";
      if (!BoolDeclared(model, d.indicator)) {
        out.push_back({dname, "indicator is not a declared boolean"});
      } else if (!seen.insert(d.indicator.value).second) {
        out.push_back({dname, "indicator repeated within the disjunction"});
      }
      for (const LinRow& row : d.rows) CheckRow(model, row, dname, out);
    }
  }
  for (size_t l = 0; l < model.logic().size(); ++l) {
    const std::string entity = "logic row " + std::to_string(l);
    const LogicRow& row = model.logic()[l];
    if (row.terms.empty()) out.push_back({entity, "row has no terms"});
    for (const LogicTerm& t : row.terms) {
      if (!BoolDeclared(model, t.var)) {
        out.push_back({entity, "references undeclared boolean #" +
                                   std::to_string(t.var.value)});
      }
    }
  }
  return out;
}

namespace {

std::string JoinDiagnostics(const std::vector<Diagnostic>& diagnostics) {
  std::string msg = "invalid GDP model:";
  for (const Diagnostic& d : diagnostics) {
    msg += "\n  " + d.entity + ": " + d.message;
  }
  return msg;
}

}  // namespace

InvalidModelError::InvalidModelError(std::vector<Diagnostic> diagnostics)
    : std::invalid_argument(JoinDiagnostics(diagnostics)),
      diagnostics_(std::move(diagnostics)) {}

void RequireValid(const GdpModel& model) {
  std::vector<Diagnostic> diagnostics = Validate(model);
  if (!diagnostics.empty()) throw InvalidModelError(std::move(diagnostics));
}

Disjunct CanonicalizeRows(const Disjunct& disjunct) {
  Disjunct out{disjunct.name, disjunct.indicator, {}};
  auto negated = [](const LinRow& row) {
    LinRow r = row;
    for (LinTerm& t : r.terms) t.coef = -t.coef;
    r.rhs = -r.rhs;
    r.sense = Sense::kLe;
    return r;
  };
  for (const LinRow& row : disjunct.rows) {
    switch (row.sense) {
      case Sense::kLe:
        out.rows.push_back(row);
        break;
      case Sense::kGe:
        out.rows.push_back(negated(row));
        break;
      case Sense::kEq: {
        LinRow le = row;
        le.sense = Sense::kLe;
        out.rows.push_back(le);
        out.rows.push_back(negated(row));
        break;
      }
    }
  }
  std::stable_sort(out.rows.begin(), out.rows.end(),
                   [](const LinRow& a, const LinRow& b) {
                     int c = CompareCoefficients(a.terms, b.terms);
                     if (c != 0) return c < 0;
                     return a.rhs < b.rhs;
                   });
  return out;
}

double Evaluate(const std::vector<LinTerm>& terms,
                const std::vector<double>& point) {
  double sum = 0.0;
  for (const LinTerm& t : terms) sum += t.coef * point.at(t.var.value);
  return sum;
}

bool IsSatisfied(const LinRow& row, const std::vector<double>& point,
                 double tol) {
  const double lhs = Evaluate(row.terms, point);
  switch (row.sense) {
    case Sense::kLe:
      return lhs <= row.rhs + tol;
    case Sense::kGe:
      return lhs >= row.rhs - tol;
    case Sense::kEq:
      return std::abs(lhs - row.rhs) <= tol;
  }
  return false;
}

}  // namespace gldp
