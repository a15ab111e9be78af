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

#include "gldp/instance_io.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gldp {

namespace {

using nlohmann::json;

double Number(const json& obj, const std::string& key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw InstanceFormatError(path, "missing field \"" + key + "\"");
  if (!it->is_number()) {
    throw InstanceFormatError(path + "." + key, "expected a number");
  }
  return it->get<double>();
}

const json& Array(const json& obj, const std::string& key) {
  const json& a = obj.at(key);
  if (!a.is_array()) throw InstanceFormatError(key, "expected an array");
  return a;
}

int LineOf(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + byte, '\n'));
}

}  // namespace

Instance ParseInstance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InstanceFormatError("line " + std::to_string(LineOf(text, e.byte)),
                              "malformed JSON");
  }
  if (!doc.is_object()) throw InstanceFormatError("$", "expected an object");
  const bool has_jobs = doc.contains("jobs");
  const bool has_rects = doc.contains("rects");
  if (has_jobs == has_rects) {
    throw InstanceFormatError("$", "expected exactly one of \"jobs\" or \"rects\"");
  }
  if (has_jobs) {
    SchedulingInstance inst;
    const json& jobs = Array(doc, "jobs");
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      const std::string path = "jobs[" + std::to_string(i) + "]";
      if (!jobs[i].is_object()) throw InstanceFormatError(path, "expected an object");
      inst.jobs.push_back({Number(jobs[i], "p", path), Number(jobs[i], "r", path),
                           Number(jobs[i], "d", path)});
    }
    CheckInstance(inst);
    return inst;
  }
  StripInstance inst;
  const json& rects = Array(doc, "rects");
  for (std::size_t i = 0; i < rects.size(); ++i) {
    const std::string path = "rects[" + std::to_string(i) + "]";
    if (!rects[i].is_object()) throw InstanceFormatError(path, "expected an object");
    inst.rects.push_back({Number(rects[i], "L", path), Number(rects[i], "H", path)});
  }
  inst.W = Number(doc, "W", "$");
  if (doc.contains("UB")) {
    inst.UB = Number(doc, "UB", "$");
  } else {
    for (const Rect& r : inst.rects) inst.UB += r.L;
  }
  CheckInstance(inst);
  return inst;
}

Instance LoadInstance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str());
}

std::string InstanceToJson(const Instance& instance) {
  json doc;
  if (const auto* s = std::get_if<SchedulingInstance>(&instance)) {
    doc["jobs"] = json::array();
    for (const Job& j : s->jobs) doc["jobs"].push_back({{"p", j.p}, {"r", j.r}, {"d", j.d}});
  } else {
    const auto& p = std::get<StripInstance>(instance);
    doc["W"] = p.W;
    doc["UB"] = p.UB;
    doc["rects"] = json::array();
    for (const Rect& r : p.rects) doc["rects"].push_back({{"L", r.L}, {"H", r.H}});
  }
  return doc.dump(2) + "\n";
}

void SaveInstance(const Instance& instance, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << InstanceToJson(instance);
}

}  // namespace gldp
