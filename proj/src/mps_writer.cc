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

#include "gldp/mps_writer.h"

#include <cctype>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gldp/text.h"

namespace gldp {

void WriteMps(const MilpModel& model, std::ostream& out) {
  const int n = model.num_columns();
  std::vector<std::string> names(n);
  int continuous = 0, binary = 0;
  for (int j = 0; j < n; ++j) {
    names[j] = model.column(j).kind == ColumnKind::kBinary
                   ? "y" + std::to_string(binary++)
                   : "x" + std::to_string(continuous++);
  }
  // Column-wise entries: objective first, then rows in order.
  std::vector<std::vector<std::pair<std::string, double>>> entries(n);
  for (const Term& t : model.objective()) entries[t.col].push_back({"obj", t.coef});
  for (int i = 0; i < model.num_rows(); ++i) {
    for (const Term& t : model.rows()[i].terms) {
      entries[t.col].push_back({"r" + std::to_string(i), t.coef});
    }
  }

  std::string title = model.name().empty() ? "gldp" : model.name();
  for (char& c : title) {
    if (std::isspace(static_cast<unsigned char>(c))) c = '_';
  }
  out << "NAME " << title << "\n";
  out << "ROWS\n N obj\n";
  for (int i = 0; i < model.num_rows(); ++i) {
    const char* type = "L";
    if (model.rows()[i].sense == Sense::kGe) type = "G";
    if (model.rows()[i].sense == Sense::kEq) type = "E";
    out << " " << type << " r" << i << "\n";
  }
  out << "COLUMNS\n";
  bool in_int = false;
  int marker = 0;
  for (int j = 0; j < n; ++j) {
    const bool is_int = model.column(j).kind == ColumnKind::kBinary;
    if (is_int != in_int) {
      out << " MARKER" << marker++ << " 'MARKER' "
          << (is_int ? "'INTORG'" : "'INTEND'") << "\n";
      in_int = is_int;
    }
    if (entries[j].empty()) {
      out << " " << names[j] << " obj 0\n";
      continue;
    }
    for (const auto& [row, coef] : entries[j]) {
      out << " " << names[j] << " " << row << " " << FormatDouble(coef) << "\n";
    }
  }
  if (in_int) out << " MARKER" << marker++ << " 'MARKER' 'INTEND'\n";
  out << "RHS\n";
  for (int i = 0; i < model.num_rows(); ++i) {
    if (model.rows()[i].rhs != 0.0) {
      out << " rhs r" << i << " " << FormatDouble(model.rows()[i].rhs) << "\n";
    }
  }
  out << "BOUNDS\n";
  for (int j = 0; j < n; ++j) {
    out << " LO bnd " << names[j] << " " << FormatDouble(model.column(j).lower) << "\n";
    out << " UP bnd " << names[j] << " " << FormatDouble(model.column(j).upper) << "\n";
  }
  out << "ENDATA\n";
}

void ExportMps(const MilpModel& model, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  WriteMps(model, out);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace gldp
