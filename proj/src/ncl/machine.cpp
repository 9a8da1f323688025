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

#include "rushhour/ncl/machine.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rushhour::ncl {

int Machine::add_node(std::string id, GateType type) {
    if (node_index(id) >= 0) throw std::invalid_argument("duplicate node '" + id + "'");
    nodes_.push_back({std::move(id), std::move(type)});
    return static_cast<int>(nodes_.size()) - 1;
}

int Machine::node_index(const std::string& id) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i].id == id) return static_cast<int>(i);
    return -1;
}

HalfEdge Machine::half_edge(const std::string& node, const std::string& label) const {
    const int n = node_index(node);
    if (n < 0) throw std::invalid_argument("unknown node '" + node + "'");
    const int l = nodes_[static_cast<std::size_t>(n)].type.label_index(label);
    if (l < 0) throw std::invalid_argument("node '" + node + "' has no label '" + label + "'");
    return {n, l};
}

bool Machine::matched(HalfEdge h) const {
    return std::any_of(matching_.begin(), matching_.end(),
                       [&](const auto& p) { return p.first == h || p.second == h; });
}

void Machine::match(HalfEdge a, HalfEdge b) {
    for (HalfEdge h : {a, b}) {
        if (h.node < 0 || h.node >= static_cast<int>(nodes_.size()))
            throw std::invalid_argument("match names an unknown node");
        const GateType& t = nodes_[static_cast<std::size_t>(h.node)].type;
        if (h.label < 0 || h.label >= static_cast<int>(t.labels.size()))
            throw std::invalid_argument("match names an unknown label");
        if (matched(h)) throw std::invalid_argument(describe(h) + " is already matched");
    }
    if (a == b) throw std::invalid_argument("cannot match a half-edge with itself");
    matching_.emplace_back(a, b);
}

void Machine::name_port(HalfEdge h, std::string name) {
    port_names_.emplace_back(h, std::move(name));
}

std::vector<HalfEdge> Machine::ports() const {
    std::vector<HalfEdge> out;
    for (int n = 0; n < static_cast<int>(nodes_.size()); ++n)
        for (int l = 0; l < static_cast<int>(nodes_[static_cast<std::size_t>(n)].type.labels.size()); ++l)
            if (!matched({n, l})) out.push_back({n, l});
    return out;
}

std::string Machine::describe(HalfEdge h) const {
    const MachineNode& n = nodes_.at(static_cast<std::size_t>(h.node));
    return n.id + "." + n.type.labels.at(static_cast<std::size_t>(h.label));
}

std::vector<std::string> Machine::port_names() const {
    std::vector<std::string> out;
    for (HalfEdge h : ports()) {
        std::string name = describe(h);
        for (const auto& [e, n] : port_names_)
            if (e == h) name = n;
        out.push_back(std::move(name));
    }
    return out;
}

namespace {

struct Partner {
    int label;
    HalfEdge other;
};

std::vector<std::vector<Partner>> partners(const Machine& m) {
    std::vector<std::vector<Partner>> out(m.nodes().size());
    for (auto [a, b] : m.matching()) {
        out[static_cast<std::size_t>(a.node)].push_back({a.label, b});
        out[static_cast<std::size_t>(b.node)].push_back({b.label, a});
    }
    return out;
}

std::vector<std::vector<std::vector<int>>> gate_adjacency(const Machine& m) {
    std::vector<std::vector<std::vector<int>>> out;
    for (const MachineNode& n : m.nodes()) {
        std::vector<std::vector<int>> adj(n.type.states.size());
        for (auto [a, b] : n.type.transitions) {
            adj[static_cast<std::size_t>(a)].push_back(b);
            adj[static_cast<std::size_t>(b)].push_back(a);
        }
        for (auto& v : adj) std::sort(v.begin(), v.end());
        out.push_back(std::move(adj));
    }
    return out;
}

Orient orient_of(const Machine& m, const MachineState& s, HalfEdge h) {
    const GateType& t = m.nodes()[static_cast<std::size_t>(h.node)].type;
    return t.orientation(s.node_state[static_cast<std::size_t>(h.node)], h.label);
}

} // namespace

std::vector<MachineState> machine_states(const Machine& m, std::size_t bound) {
    const auto part = partners(m);
    const std::size_t n = m.nodes().size();
    std::vector<MachineState> out;
    MachineState cur{std::vector<int>(n, -1)};
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            if (out.size() >= bound)
                throw LimitExceeded("machine has more than " + std::to_string(bound) + " states", bound);
            out.push_back(cur);
            return;
        }
        const GateType& t = m.nodes()[i].type;
        for (int s = 0; s < static_cast<int>(t.states.size()); ++s) {
            cur.node_state[i] = s;
            bool ok = true;
            for (const Partner& p : part[i]) {
                if (static_cast<std::size_t>(p.other.node) > i) continue;
                if (orient_of(m, cur, {static_cast<int>(i), p.label}) == orient_of(m, cur, p.other)) {
                    ok = false;
                    break;
                }
            }
            if (ok) self(self, i + 1);
        }
        cur.node_state[i] = -1;
    };
    rec(rec, 0);
    return out;
}

OutMask port_profile(const Machine& m, const MachineState& s) {
    OutMask out = 0;
    const auto ports = m.ports();
    for (std::size_t i = 0; i < ports.size(); ++i)
        if (orient_of(m, s, ports[i]) == Orient::Out) out |= OutMask{1} << i;
    return out;
}

StepGraph machine_step_graph(const Machine& m, std::size_t bound) {
    StepGraph g;
    g.states = machine_states(m, bound);
    std::map<MachineState, std::size_t> index;
    for (std::size_t i = 0; i < g.states.size(); ++i) index.emplace(g.states[i], i);
    const auto adj = gate_adjacency(m);
    const auto ports = m.ports();

    // Gate states reachable from `s` by one transition that flips `label`.
    auto flips = [&](int node, int s, int label) {
        std::vector<int> out;
        const GateType& t = m.nodes()[static_cast<std::size_t>(node)].type;
        const OutMask want = t.states[static_cast<std::size_t>(s)].out ^ (OutMask{1} << label);
        for (int u : adj[static_cast<std::size_t>(node)][static_cast<std::size_t>(s)])
            if (t.states[static_cast<std::size_t>(u)].out == want) out.push_back(u);
        return out;
    };
    auto add = [&](std::size_t from, const MachineState& to, FlipKind kind, int port) {
        const std::size_t j = index.at(to);
        if (from < j) g.edges.push_back({from, j, kind, port});
    };

    for (std::size_t i = 0; i < g.states.size(); ++i) {
        const MachineState& s = g.states[i];
        for (auto [a, b] : m.matching()) {
            if (a.node == b.node) continue;  // would flip two labels of one gate at once
            for (int ta : flips(a.node, s.node_state[static_cast<std::size_t>(a.node)], a.label))
                for (int tb : flips(b.node, s.node_state[static_cast<std::size_t>(b.node)], b.label)) {
                    MachineState t = s;
                    t.node_state[static_cast<std::size_t>(a.node)] = ta;
                    t.node_state[static_cast<std::size_t>(b.node)] = tb;
                    add(i, t, FlipKind::Internal, -1);
                }
        }
        for (std::size_t p = 0; p < ports.size(); ++p) {
            const HalfEdge h = ports[p];
            for (int th : flips(h.node, s.node_state[static_cast<std::size_t>(h.node)], h.label)) {
                MachineState t = s;
                t.node_state[static_cast<std::size_t>(h.node)] = th;
                add(i, t, FlipKind::Port, static_cast<int>(p));
            }
        }
    }
    return g;
}

GateType project_machine(const Machine& m, std::size_t bound) {
    const StepGraph g = machine_step_graph(m, bound);
    ProfiledGraph pg;
    for (const MachineState& s : g.states) pg.profile.push_back(port_profile(m, s));
    for (const StepEdge& e : g.edges) {
        if (e.kind == FlipKind::Internal) pg.internal_edges.emplace_back(e.from, e.to);
        else pg.port_edges.emplace_back(e.from, e.to);
    }
    return quotient_gate(pg, m.port_names(), "induced");
}

Machine or_from_half_ors() {
    Machine m;
    GateType split = builtin_gate(BuiltinGate::And);
    split.name = "split";
    m.add_node("split", split);
    m.add_node("ho1", builtin_gate(BuiltinGate::HalfOr));
    m.add_node("ho2", builtin_gate(BuiltinGate::HalfOr));
    m.match(m.half_edge("split", "x"), m.half_edge("ho1", "x"));
    m.match(m.half_edge("split", "y"), m.half_edge("ho2", "x"));
    m.match(m.half_edge("ho1", "z"), m.half_edge("ho2", "z"));
    m.name_port(m.half_edge("split", "z"), "z");
    m.name_port(m.half_edge("ho1", "y"), "x");
    m.name_port(m.half_edge("ho2", "y"), "y");
    return m;
}

} // namespace rushhour::ncl
