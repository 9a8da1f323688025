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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rushhour::ncl {

// A half-edge points into its gate (In) or out of it (Out). Within a gate an
// input is active when Out and an output is active when In.
enum class Orient : std::uint8_t { In, Out };

using OutMask = std::uint32_t;  // bit i set: label i is oriented Out

inline constexpr std::size_t kMaxLabels = 16;

struct GateState {
    OutMask out = 0;
    std::string tag;  // distinguishes states with equal orientations, e.g. "dep=x"

    friend bool operator==(const GateState&, const GateState&) = default;
};

/// Gate type <L, S, E, o>: labels, states, a symmetric transition relation
/// (stored as unordered pairs), and per-state orientations.
struct GateType {
    std::string name;
    std::vector<std::string> labels;
    std::vector<GateState> states;
    std::vector<std::pair<int, int>> transitions;

    int label_index(const std::string& label) const;  // -1 if absent
    std::size_t state_count() const { return states.size(); }
    std::size_t transition_count() const { return transitions.size(); }
    /// Indices of states adjacent to s.
    std::vector<int> neighbours(int s) const;
    Orient orientation(int state, int label) const {
        return (states[static_cast<std::size_t>(state)].out >> label) & 1 ? Orient::Out : Orient::In;
    }
};

enum class BuiltinGate { Wire, And, Or, HalfOr };

/// WIRE forbids both ends In. AND (also SPLIT) allows z In only when x and y
/// are Out. OR forbids all three In. HALF-OR is OR with the state
/// (x Out, y Out, z In) split in two by the input the output depends on;
/// that input cannot flip while z is In.
GateType builtin_gate(BuiltinGate kind);

/// Looks up "wire", "and", "split", "or", "half-or"/"halfor"/"latch".
std::optional<GateType> builtin_gate_by_name(const std::string& name);

/// Every orientation over `labels` with all single-flip transitions.
GateType free_gate(std::vector<std::string> labels);

struct ValidationResult {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

/// Checks that every transition joins two existing states whose orientations
/// differ in exactly one label, and that no pair is listed twice.
ValidationResult validate_gate_type(const GateType& g);

/// Label-preserving isomorphism: a bijection on states that keeps
/// orientations and maps transitions exactly onto transitions. Labels are
/// matched by name; differing label sets are never equivalent.
bool gate_equivalence(const GateType& a, const GateType& b);

/// As gate_equivalence, but also tries every renaming of a's labels onto b's.
/// Returns the renaming (a's label i -> b's label result[i]) when one works.
std::optional<std::vector<int>> gate_equivalence_up_to_relabeling(const GateType& a,
                                                                   const GateType& b);

/// Quotient construction shared by machines and gadget blocks.
///
/// Nodes carry a port profile. Internal edges join nodes with equal profiles
/// and are contracted; port edges join nodes whose profiles differ in one
/// port and become transitions between the contracted classes.
struct ProfiledGraph {
    std::vector<OutMask> profile;
    std::vector<std::pair<std::size_t, std::size_t>> internal_edges;
    std::vector<std::pair<std::size_t, std::size_t>> port_edges;
};

/// `class_of` receives, for each node, the index of its state in the result.
GateType quotient_gate(const ProfiledGraph& g, std::vector<std::string> labels, std::string name,
                       std::vector<std::size_t>* class_of = nullptr);

} // namespace rushhour::ncl
