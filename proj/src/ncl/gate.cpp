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

#include "rushhour/ncl/gate.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rushhour::ncl {

int GateType::label_index(const std::string& label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
}

std::vector<int> GateType::neighbours(int s) const {
    std::vector<int> out;
    for (auto [a, b] : transitions) {
        if (a == s) out.push_back(b);
        else if (b == s) out.push_back(a);
    }
    return out;
}

namespace {

// All single-flip pairs among `states`, optionally filtered.
template <class Keep>
std::vector<std::pair<int, int>> single_flip_pairs(const std::vector<GateState>& states, Keep keep) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < static_cast<int>(states.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(states.size()); ++j)
            if (std::popcount(states[i].out ^ states[j].out) == 1 && keep(i, j)) out.emplace_back(i, j);
    return out;
}

GateType from_predicate(std::string name, std::vector<std::string> labels, bool (*valid)(OutMask)) {
    GateType g{std::move(name), std::move(labels), {}, {}};
    const OutMask limit = OutMask{1} << g.labels.size();
    for (OutMask m = 0; m < limit; ++m)
        if (valid(m)) g.states.push_back({m, {}});
    g.transitions = single_flip_pairs(g.states, [](int, int) { return true; });
    return g;
}

constexpr OutMask kX = 1, kY = 2, kZ = 4;

} // namespace

GateType builtin_gate(BuiltinGate kind) {
    switch (kind) {
    case BuiltinGate::Wire:
        return from_predicate("wire", {"a", "b"}, [](OutMask m) { return m != 0; });
    case BuiltinGate::And:
        return from_predicate("and", {"x", "y", "z"}, [](OutMask m) {
            return (m & kZ) || ((m & kX) && (m & kY));
        });
    case BuiltinGate::Or:
        return from_predicate("or", {"x", "y", "z"}, [](OutMask m) { return m != 0; });
    case BuiltinGate::HalfOr: {
        GateType g{"half-or", {"x", "y", "z"}, {}, {}};
        for (OutMask m = 0; m < 8; ++m) {
            if (m == 0) continue;
            if (m == (kX | kY)) {
                g.states.push_back({m, "dep=x"});
                g.states.push_back({m, "dep=y"});
            } else {
                g.states.push_back({m, {}});
            }
        }
        // With z In and both inputs Out, the depended-on input must stay Out.
        g.transitions = single_flip_pairs(g.states, [&](int i, int j) {
            const GateState& a = g.states[static_cast<std::size_t>(i)];
            const GateState& b = g.states[static_cast<std::size_t>(j)];
            for (const auto* s : {&a, &b}) {
                const auto* o = s == &a ? &b : &a;
                if (s->tag == "dep=x" && (o->out ^ s->out) == kX) return false;
                if (s->tag == "dep=y" && (o->out ^ s->out) == kY) return false;
            }
            return true;
        });
        return g;
    }
    }
    throw std::invalid_argument("unknown builtin gate");
}

std::optional<GateType> builtin_gate_by_name(const std::string& name) {
    if (name == "wire") return builtin_gate(BuiltinGate::Wire);
    if (name == "and") return builtin_gate(BuiltinGate::And);
    if (name == "split") {
        GateType g = builtin_gate(BuiltinGate::And);
        g.name = "split";
        return g;
    }
    if (name == "or") return builtin_gate(BuiltinGate::Or);
    if (name == "half-or" || name == "halfor" || name == "latch") return builtin_gate(BuiltinGate::HalfOr);
    return std::nullopt;
}

GateType free_gate(std::vector<std::string> labels) {
    if (labels.size() > kMaxLabels) throw std::invalid_argument("too many labels");
    GateType g{"free", std::move(labels), {}, {}};
    const OutMask limit = OutMask{1} << g.labels.size();
    for (OutMask m = 0; m < limit; ++m) g.states.push_back({m, {}});
    g.transitions = single_flip_pairs(g.states, [](int, int) { return true; });
    return g;
}

ValidationResult validate_gate_type(const GateType& g) {
    ValidationResult r;
    const int n = static_cast<int>(g.states.size());
    if (g.labels.size() > kMaxLabels) r.problems.push_back("more than 16 labels");
    const OutMask all = g.labels.size() >= 32 ? ~OutMask{0} : (OutMask{1} << g.labels.size()) - 1;
    for (int i = 0; i < n; ++i)
        if (g.states[static_cast<std::size_t>(i)].out & ~all)
            r.problems.push_back("state " + std::to_string(i) + " orients an unknown label");
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : g.transitions) {
        const std::string name = "transition " + std::to_string(a) + "-" + std::to_string(b);
        if (a < 0 || b < 0 || a >= n || b >= n) {
            r.problems.push_back(name + " names a missing state");
            continue;
        }
        const int diff = std::popcount(g.states[static_cast<std::size_t>(a)].out ^
                                       g.states[static_cast<std::size_t>(b)].out);
        if (diff != 1)
            r.problems.push_back(name + " changes " + std::to_string(diff) +
                                 " half-edges, expected exactly one");
        if (!seen.insert(std::minmax(a, b)).second) r.problems.push_back(name + " is listed twice");
    }
    return r;
}

namespace {

// Backtracking search for an orientation-preserving graph isomorphism.
// `relabel` maps a's label bits onto b's.
bool isomorphic(const GateType& a, const GateType& b, const std::vector<int>& relabel) {
    const std::size_t n = a.states.size();
    if (n != b.states.size() || a.transitions.size() != b.transitions.size()) return false;
    auto map_mask = [&](OutMask m) {
        OutMask out = 0;
        for (std::size_t i = 0; i < relabel.size(); ++i)
            if ((m >> i) & 1) out |= OutMask{1} << relabel[i];
        return out;
    };
    std::vector<std::vector<char>> adj_a(n, std::vector<char>(n, 0)), adj_b = adj_a;
    for (auto [x, y] : a.transitions) adj_a[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
        adj_a[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = 1;
    for (auto [x, y] : b.transitions) adj_b[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
        adj_b[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = 1;
    std::vector<OutMask> mapped(n);
    std::vector<std::size_t> degree_a(n, 0), degree_b(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        mapped[i] = map_mask(a.states[i].out);
        for (std::size_t j = 0; j < n; ++j) {
            degree_a[i] += static_cast<std::size_t>(adj_a[i][j]);
            degree_b[i] += static_cast<std::size_t>(adj_b[i][j]);
        }
    }
    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == n) return true;
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c] || b.states[c].out != mapped[i] || degree_b[c] != degree_a[i]) continue;
            bool fits = true;
            for (std::size_t k = 0; k < i && fits; ++k)
                fits = adj_a[i][k] == adj_b[c][static_cast<std::size_t>(image[k])];
            if (!fits) continue;
            image[i] = static_cast<int>(c);
            used[c] = 1;
            if (self(self, i + 1)) return true;
            used[c] = 0;
        }
        image[i] = -1;
        return false;
    };
    return rec(rec, 0);
}

} // namespace

bool gate_equivalence(const GateType& a, const GateType& b) {
    if (a.labels.size() != b.labels.size()) return false;
    std::vector<int> relabel(a.labels.size());
    for (std::size_t i = 0; i < a.labels.size(); ++i) {
        relabel[i] = b.label_index(a.labels[i]);
        if (relabel[i] < 0) return false;
    }
    return isomorphic(a, b, relabel);
}

std::optional<std::vector<int>> gate_equivalence_up_to_relabeling(const GateType& a,
                                                                   const GateType& b) {
    if (a.labels.size() != b.labels.size()) return std::nullopt;
    std::vector<int> relabel(a.labels.size());
    std::iota(relabel.begin(), relabel.end(), 0);
    do {
        if (isomorphic(a, b, relabel)) return relabel;
    } while (std::next_permutation(relabel.begin(), relabel.end()));
    return std::nullopt;
}

GateType quotient_gate(const ProfiledGraph& g, std::vector<std::string> labels, std::string name,
                       std::vector<std::size_t>* class_of) {
    const std::size_t n = g.profile.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : g.internal_edges) {
        if (g.profile[u] != g.profile[v])
            throw std::logic_error("internal edge joins different port profiles");
        parent[find(u)] = find(v);
    }
    // Classes numbered by (profile, least member) so results do not depend on
    // edge order.
    std::map<std::size_t, std::size_t> root_to_least;
    for (std::size_t i = 0; i < n; ++i) root_to_least.try_emplace(find(i), i);
    std::vector<std::pair<OutMask, std::size_t>> keys;
    for (auto [root, least] : root_to_least) keys.emplace_back(g.profile[least], least);
    std::sort(keys.begin(), keys.end());
    std::map<std::size_t, std::size_t> least_to_class;
    for (std::size_t c = 0; c < keys.size(); ++c) least_to_class[keys[c].second] = c;

    GateType out{std::move(name), std::move(labels), {}, {}};
    std::map<OutMask, int> per_profile;
    for (auto [profile, least] : keys) {
        const int k = per_profile[profile]++;
        out.states.push_back({profile, {}});
        if (k > 0) out.states.back().tag = "#" + std::to_string(k);
    }
    // Tag the first of a duplicated profile too, once duplicates are known.
    for (std::size_t c = 0; c < keys.size(); ++c)
        if (per_profile[keys[c].first] > 1 && out.states[c].tag.empty()) out.states[c].tag = "#0";

    std::vector<std::size_t> cls(n);
    for (std::size_t i = 0; i < n; ++i) cls[i] = least_to_class[root_to_least[find(i)]];
    std::set<std::pair<int, int>> trans;
    for (auto [u, v] : g.port_edges) {
        const int a = static_cast<int>(cls[u]);
        const int b = static_cast<int>(cls[v]);
        if (a != b) trans.insert(std::minmax(a, b));
    }
    out.transitions.assign(trans.begin(), trans.end());
    if (class_of) *class_of = std::move(cls);
    return out;
}

} // namespace rushhour::ncl
