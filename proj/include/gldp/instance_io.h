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

// JSON instance files.
//
//   scheduling: {"jobs": [{"p": 3, "r": 0, "d": 10}, ...]}
//   strip:      {"W": 10, "UB": 20, "rects": [{"L": 3, "H": 2}, ...]}
//
// "UB" is optional and defaults to the sum of the lengths.

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "gldp/builders.h"

namespace gldp {

using Instance = std::variant<SchedulingInstance, StripInstance>;

// Malformed JSON or a schema violation. `where()` is "line N" for syntax
// errors and a field path such as "jobs[2].p" for schema errors.
class InstanceFormatError : public std::runtime_error {
 public:
  InstanceFormatError(std::string where, const std::string& message)
      : std::runtime_error(where + ": " + message), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// Throws InstanceFormatError, or InstanceError for data that parses but
// violates an instance invariant.
Instance ParseInstance(std::string_view text);
Instance LoadInstance(const std::filesystem::path& path);

std::string InstanceToJson(const Instance& instance);
void SaveInstance(const Instance& instance, const std::filesystem::path& path);

}  // namespace gldp
