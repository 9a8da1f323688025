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

#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "rushhour/common.hpp"
#include "rushhour/ncl/gate.hpp"

namespace rushhour::ncl {

struct HalfEdge {
    int node = 0;
    int label = 0;  // index into the node's gate labels

    friend auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

struct MachineNode {
    std::string id;
    GateType type;
};

/// Gates joined by a matching on their half-edges; unmatched half-edges are
/// the machine's ports.
class Machine {
public:
    int add_node(std::string id, GateType type);
    /// Throws std::invalid_argument if either half-edge is unknown or already matched.
    void match(HalfEdge a, HalfEdge b);
    /// Gives the port at `h` a name; unnamed ports are called "<node>.<label>".
    void name_port(HalfEdge h, std::string name);

    const std::vector<MachineNode>& nodes() const { return nodes_; }
    const std::vector<std::pair<HalfEdge, HalfEdge>>& matching() const { return matching_; }
    int node_index(const std::string& id) const;  // -1 if absent
    HalfEdge half_edge(const std::string& node, const std::string& label) const;

    /// Unmatched half-edges in (node, label) order.
    std::vector<HalfEdge> ports() const;
    std::vector<std::string> port_names() const;
    std::string describe(HalfEdge h) const;

private:
    bool matched(HalfEdge h) const;

    std::vector<MachineNode> nodes_;
    std::vector<std::pair<HalfEdge, HalfEdge>> matching_;
    std::vector<std::pair<HalfEdge, std::string>> port_names_;
};

/// One gate state per node. Half-edge orientations follow from the gate
/// states; matched half-edges are always oriented oppositely.
struct MachineState {
    std::vector<int> node_state;

    friend auto operator<=>(const MachineState&, const MachineState&) = default;
};

inline constexpr std::size_t kDefaultMachineBound = 1'000'000;

/// Every consistent machine state, in lexicographic order of node states.
/// Throws LimitExceeded past `bound` states.
std::vector<MachineState> machine_states(const Machine& m, std::size_t bound = kDefaultMachineBound);

enum class FlipKind : std::uint8_t { Internal, Port };

struct StepEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    FlipKind kind = FlipKind::Internal;
    int port = -1;  // index into ports() for port flips
};

/// States plus single edge-flip steps. A matched pair flips both half-edges
/// at once; a port flips alone. Each touched node must take a transition of
/// its gate type. Edges are listed once per unordered pair.
struct StepGraph {
    std::vector<MachineState> states;
    std::vector<StepEdge> edges;
};

StepGraph machine_step_graph(const Machine& m, std::size_t bound = kDefaultMachineBound);

/// Port orientation of a state as an out-mask over ports().
OutMask port_profile(const Machine& m, const MachineState& s);

/// The gate type the machine induces on its ports: internal flips contracted,
/// port flips kept as transitions.
GateType project_machine(const Machine& m, std::size_t bound = kDefaultMachineBound);

/// SPLIT feeding two HALF-ORs whose outputs are matched; ports x, y, z.
Machine or_from_half_ors();

} // namespace rushhour::ncl
