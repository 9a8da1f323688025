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

#include "rushhour/ncl/io.hpp"

#include <algorithm>
#include <sstream>

#include "rushhour/common.hpp"

namespace rushhour::ncl {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ' && c != '\t') {
            cur.push_back(c);
        }
    }
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    return out;
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    std::string s = pos == std::string::npos ? line : line.substr(0, pos);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.pop_back();
    return s;
}

struct GateBuilder {
    GateType gate;
    std::map<std::string, int> state_ids;
};

// Reads gate blocks; hands every other non-empty line to `other`.
template <class Other>
std::vector<GateType> read(std::string_view text, Other other) {
    std::vector<GateType> gates;
    std::optional<GateBuilder> cur;
    auto finish = [&] {
        if (cur) gates.push_back(std::move(cur->gate));
        cur.reset();
    };
    std::istringstream in{std::string(text)};
    int line_no = 0;
    for (std::string raw; std::getline(in, raw);) {
        ++line_no;
        const std::string line = strip_comment(raw);
        std::istringstream words(line);
        std::string kw;
        if (!(words >> kw)) continue;
        if (kw == "gate") {
            finish();
            std::string name, labels_kw, labels;
            words >> name >> labels_kw;
            std::getline(words, labels);
            if (name.empty() || name.back() != ':' || labels_kw != "labels")
                throw ParseError(line_no, "expected 'gate <name>: labels a,b,...'");
            name.pop_back();
            cur = GateBuilder{};
            cur->gate.name = name;
            cur->gate.labels = split(labels, ',');
            if (cur->gate.labels.size() > kMaxLabels) throw ParseError(line_no, "too many labels");
        } else if (kw == "state") {
            if (!cur) throw ParseError(line_no, "'state' outside a gate block");
            std::string id, rest;
            words >> id;
            std::getline(words, rest);
            if (id.empty() || id.back() != ':') throw ParseError(line_no, "expected 'state <id>: out={...}'");
            id.pop_back();
            auto open = rest.find("out={");
            auto close = rest.find('}', open == std::string::npos ? 0 : open);
            if (open == std::string::npos || close == std::string::npos)
                throw ParseError(line_no, "expected out={...}");
            GateState st;
            for (const std::string& l : split(rest.substr(open + 5, close - open - 5), ',')) {
                if (l.empty()) continue;
                const int idx = cur->gate.label_index(l);
                if (idx < 0) throw ParseError(line_no, "unknown label '" + l + "'");
                st.out |= OutMask{1} << idx;
            }
            std::istringstream tail(rest.substr(close + 1));
            tail >> st.tag;
            if (!cur->state_ids.emplace(id, static_cast<int>(cur->gate.states.size())).second)
                throw ParseError(line_no, "duplicate state id '" + id + "'");
            cur->gate.states.push_back(std::move(st));
        } else if (kw == "trans") {
            if (!cur) throw ParseError(line_no, "'trans' outside a gate block");
            std::string a, b;
            if (!(words >> a >> b)) throw ParseError(line_no, "expected 'trans <id> <id>'");
            auto ia = cur->state_ids.find(a);
            auto ib = cur->state_ids.find(b);
            if (ia == cur->state_ids.end() || ib == cur->state_ids.end())
                throw ParseError(line_no, "transition names an unknown state");
            cur->gate.transitions.emplace_back(std::min(ia->second, ib->second),
                                               std::max(ia->second, ib->second));
        } else {
            finish();
            other(kw, words, line_no);
        }
    }
    finish();
    return gates;
}

std::pair<std::string, std::string> split_half_edge(const std::string& s, int line_no) {
    auto dot = s.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == s.size())
        throw ParseError(line_no, "expected <node>.<label>, got '" + s + "'");
    return {s.substr(0, dot), s.substr(dot + 1)};
}

} // namespace

std::vector<GateType> parse_gates(std::string_view text) {
    return read(text, [](const std::string& kw, std::istream&, int line_no) {
        throw ParseError(line_no, "unexpected '" + kw + "' in gate file");
    });
}

std::string format_gate(const GateType& g) {
    std::ostringstream out;
    out << "gate " << g.name << ": labels ";
    for (std::size_t i = 0; i < g.labels.size(); ++i) out << (i ? "," : "") << g.labels[i];
    out << "\n";
    for (std::size_t s = 0; s < g.states.size(); ++s) {
        out << "state s" << s << ": out={";
        bool first = true;
        for (std::size_t l = 0; l < g.labels.size(); ++l)
            if ((g.states[s].out >> l) & 1) {
                out << (first ? "" : ",") << g.labels[l];
                first = false;
            }
        out << "}";
        if (!g.states[s].tag.empty()) out << " " << g.states[s].tag;
        out << "\n";
    }
    for (auto [a, b] : g.transitions) out << "trans s" << a << " s" << b << "\n";
    return out.str();
}

GateType resolve_gate(const std::string& name, const GateLibrary& library) {
    if (auto it = library.find(name); it != library.end()) return it->second;
    if (auto g = builtin_gate_by_name(name)) return *g;
    throw Error("unknown gate type '" + name + "'");
}

Machine parse_machine(std::string_view text, const GateLibrary& library) {
    struct Pending {
        int line;
        std::string kw, a, b;
    };
    std::vector<Pending> lines;
    auto gates = read(text, [&](const std::string& kw, std::istream& words, int line_no) {
        std::string a, b;
        words >> a >> b;
        if (kw != "node" && kw != "match" && kw != "port")
            throw ParseError(line_no, "unexpected '" + kw + "' in machine file");
        if (a.empty() || b.empty()) throw ParseError(line_no, "'" + kw + "' needs two arguments");
        lines.push_back({line_no, kw, a, b});
    });
    GateLibrary lib = library;
    for (GateType& g : gates) lib[g.name] = std::move(g);

    Machine m;
    for (const Pending& p : lines) {
        try {
            if (p.kw == "node") {
                m.add_node(p.a, resolve_gate(p.b, lib));
            } else if (p.kw == "match") {
                auto [na, la] = split_half_edge(p.a, p.line);
                auto [nb, lb] = split_half_edge(p.b, p.line);
                m.match(m.half_edge(na, la), m.half_edge(nb, lb));
            } else {
                auto [n, l] = split_half_edge(p.b, p.line);
                m.name_port(m.half_edge(n, l), p.a);
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(p.line, e.what());
        }
    }
    return m;
}

} // namespace rushhour::ncl
