/* Copyright 2026 The rushhour Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rushhour/ncl/gate.hpp"
#include "rushhour/ncl/machine.hpp"

namespace rushhour::ncl {

// Gate-type text:
//   gate <name>: labels x,y,z
//   state <id>: out={x,y} [dep=<label>]
//   trans <id> <id>
// Machine text:
//   node <id> <gatename>
//   match <id>.<label> <id>.<label>
//   port <name> <id>.<label>        (optional port naming)
// Gate blocks may appear inside a machine file. '#' starts a comment.

using GateLibrary = std::map<std::string, GateType>;

std::vector<GateType> parse_gates(std::string_view text);

std::string format_gate(const GateType& g);

/// Resolves gate names against `library` first, then the built-ins.
GateType resolve_gate(const std::string& name, const GateLibrary& library);

Machine parse_machine(std::string_view text, const GateLibrary& library = {});

} // namespace rushhour::ncl
