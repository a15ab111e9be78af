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

// Free-format MPS export. Continuous columns are named x0, x1, ... and binary
// columns y0, y1, ... in column order; rows are r0, r1, ...; the objective
// row is "obj". Binary columns sit between INTORG/INTEND markers and every
// column gets explicit LO and UP bounds.

#pragma once

#include <filesystem>
#include <ostream>

#include "gldp/milp_model.h"

namespace gldp {

void WriteMps(const MilpModel& model, std::ostream& out);
void ExportMps(const MilpModel& model, const std::filesystem::path& path);

}  // namespace gldp
