// Copyright 2026 The qtrd authors
//
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

#ifndef QTRD_JSON_IO_HPP
#define QTRD_JSON_IO_HPP

#include <json.hpp>

#include "qtrd/bounds.hpp"
#include "qtrd/greedy.hpp"
#include "qtrd/solvers.hpp"

namespace qtrd {

// JSON shapes are a stability contract (schema_version 1); keys are emitted
// in alphabetical order, so identical content means identical bytes.
constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const ParamResult& result, bool include_timing = true);
nlohmann::json to_json(const GreedyTrace& trace);
nlohmann::json to_json(const BoundCheck& check);
nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const EnumerationResult& result);

}  // namespace qtrd

#endif  // QTRD_JSON_IO_HPP
