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

#include "rushhour/gadgets/block.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "absl/container/flat_hash_map.h"

namespace rushhour::gadgets {

namespace {

Position parse_cell(std::string s, int line) {
    std::erase(s, '(');
    std::erase(s, ')');
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    Position p;
    std::string extra;
    if (!(in >> p.row >> p.col) || (in >> extra)) throw ParseError(line, "expected <row>,<col>");
    return p;
}

bool one_step_apart(Position a, Position b, Orientation axis) {
    if (axis == Orientation::Horizontal) return a.row == b.row && std::abs(a.col - b.col) == 1;
    return a.col == b.col && std::abs(a.row - b.row) == 1;
}

class Grid {
public:
    Grid(const Block& b, const Configuration& c) : w_(b.layout.width), h_(b.layout.height) {
        cells_.assign(static_cast<std::size_t>(w_ * h_), kEmpty);
        for (Position p : b.layout.walls) cells_[idx(p)] = kWall;
        for (std::size_t i = 0; i < c.size(); ++i) {
            core::Car car = b.layout.cars[i];
            car.anchor = c[i];
            for (int s = 0; s < car.length; ++s) cells_[idx(car.segment(s))] = static_cast<int>(i);
        }
    }

    bool free(Position p) const {
        return p.row >= 0 && p.row < h_ && p.col >= 0 && p.col < w_ && cells_[idx(p)] == kEmpty;
    }
    int at(Position p) const { return cells_[idx(p)]; }

    static constexpr int kEmpty = -1;
    static constexpr int kWall = -2;

private:
    std::size_t idx(Position p) const { return static_cast<std::size_t>(p.row * w_ + p.col); }

    int w_, h_;
    std::vector<int> cells_;
};

Configuration initial(const Block& b) {
    Configuration c;
    for (const core::Car& car : b.layout.cars) c.push_back(car.anchor);
    return c;
}

std::string key_of(const Configuration& c) {
    std::string k;
    k.reserve(c.size() * 2);
    for (Position p : c) {
        k.push_back(static_cast<char>(p.row));
        k.push_back(static_cast<char>(p.col));
    }
    return k;
}

} // namespace

std::vector<std::string> Block::port_names() const {
    std::vector<std::string> out;
    for (const Port& p : ports) out.push_back(p.name);
    return out;
}

Block parse_block(std::string_view text, const ncl::GateLibrary& library) {
    Block b;
    b.layout = core::parse_layout(text);
    const core::Layout& lay = b.layout;

    auto car_by_label = [&](char label, int line) {
        for (const core::Car& c : lay.cars)
            if (c.label == label) return c.id;
        throw ParseError(line, std::string("no car '") + label + "' in the grid");
    };
    // parse_layout leaves ids unset; number cars by position in the list.
    for (std::size_t i = 0; i < b.layout.cars.size(); ++i) b.layout.cars[i].id = static_cast<int>(i);

    for (const core::Layout::Meta& m : lay.metadata) {
        std::istringstream in(m.text);
        std::string kw;
        in >> kw;
        if (kw == "port") {
            std::string name, car_kw, letter;
            in >> name >> car_kw >> letter;
            if (name.size() < 2 || name.back() != ':' || car_kw != "car" || letter.size() != 1)
                throw ParseError(m.line, "expected '% port <label>: car <letter> in=<r,c>'");
            name.pop_back();
            Port port;
            port.name = name;
            port.car = car_by_label(letter[0], m.line);
            const core::Car& car = lay.cars[static_cast<std::size_t>(port.car)];
            port.axis = car.orientation;
            port.out_anchor = car.anchor;
            bool have_in = false;
            for (std::string arg; in >> arg;) {
                if (arg.rfind("in=", 0) == 0) {
                    port.in_anchor = parse_cell(arg.substr(3), m.line);
                    have_in = true;
                } else if (arg.rfind("out=", 0) == 0) {
                    port.out_anchor = parse_cell(arg.substr(4), m.line);
                } else {
                    throw ParseError(m.line, "unexpected '" + arg + "' in port line");
                }
            }
            if (!have_in) throw ParseError(m.line, "port '" + name + "' has no in=<r,c>");
            if (car.anchor != port.in_anchor && car.anchor != port.out_anchor)
                throw ParseError(m.line, "port '" + name + "': car starts at neither position");
            if (!one_step_apart(port.in_anchor, port.out_anchor, port.axis))
                throw ParseError(m.line, "port '" + name +
                                             "' is not bi-positional: in and out must be one step "
                                             "apart along the car's axis");
            // The cell past the out end must stop the car.
            const Direction outward = port.axis == Orientation::Horizontal
                                          ? (port.out_anchor.col < port.in_anchor.col ? Direction::Left
                                                                                      : Direction::Right)
                                          : (port.out_anchor.row < port.in_anchor.row ? Direction::Up
                                                                                      : Direction::Down);
            core::Car at_out = car;
            at_out.anchor = port.out_anchor;
            const Position lead = (outward == Direction::Left || outward == Direction::Up)
                                      ? at_out.segment(0)
                                      : at_out.segment(at_out.length - 1);
            const Position beyond = step(lead, outward);
            const bool inside = beyond.row >= 0 && beyond.row < lay.height && beyond.col >= 0 &&
                                beyond.col < lay.width;
            if (inside && std::find(lay.walls.begin(), lay.walls.end(), beyond) == lay.walls.end())
                throw ParseError(m.line, "port '" + name + "' is not bi-positional: " +
                                             to_string(beyond) + " beyond its out position is not a wall");
            for (const Port& other : b.ports)
                if (other.name == name || other.car == port.car)
                    throw ParseError(m.line, "port '" + name + "' declared twice");
            b.ports.push_back(port);
        } else if (kw == "black:") {
            for (std::string cell; in >> cell;) b.black.push_back(parse_cell(cell, m.line));
        } else if (kw == "intended:") {
            in >> b.intended_name;
            try {
                b.intended = ncl::resolve_gate(b.intended_name, library);
            } catch (const Error& e) {
                throw ParseError(m.line, e.what());
            }
        }
    }

    const Grid grid(b, initial(b));
    for (Position p : b.black) {
        if (p.row < 0 || p.row >= lay.height || p.col < 0 || p.col >= lay.width)
            throw ParseError(0, "black cell " + to_string(p) + " is off the grid");
        if (grid.at(p) == Grid::kEmpty)
            throw ParseError(0, "black cell " + to_string(p) + " is empty in the initial layout");
    }
    return b;
}

Enumeration enumerate_block(const Block& b, std::size_t bound) {
    std::vector<int> port_of(b.layout.cars.size(), -1);
    for (std::size_t i = 0; i < b.ports.size(); ++i)
        port_of[static_cast<std::size_t>(b.ports[i].car)] = static_cast<int>(i);

    Enumeration e;
    absl::flat_hash_map<std::string, std::size_t> index;
    e.configs.push_back(initial(b));
    index.emplace(key_of(e.configs[0]), 0);

    for (std::size_t u = 0; u < e.configs.size(); ++u) {
        const Configuration cur = e.configs[u];
        const Grid grid(b, cur);
        for (std::size_t i = 0; i < cur.size(); ++i) {
            core::Car car = b.layout.cars[i];
            car.anchor = cur[i];
            const bool horizontal = car.orientation == Orientation::Horizontal;
            static constexpr Direction kHorizontal[] = {Direction::Left, Direction::Right};
            static constexpr Direction kVertical[] = {Direction::Up, Direction::Down};
            for (Direction d : horizontal ? kHorizontal : kVertical) {
                const bool backward = d == Direction::Left || d == Direction::Up;
                const Position into = step(backward ? car.segment(0) : car.segment(car.length - 1), d);
                if (!grid.free(into)) continue;
                const Position anchor = step(car.anchor, d);
                const int port = port_of[i];
                if (port >= 0) {
                    const Port& p = b.ports[static_cast<std::size_t>(port)];
                    if (anchor != p.in_anchor && anchor != p.out_anchor) continue;
                }
                Configuration next = cur;
                next[i] = anchor;
                auto [it, inserted] = index.try_emplace(key_of(next), e.configs.size());
                if (inserted) {
                    if (e.configs.size() >= bound)
                        throw LimitExceeded("block enumeration exceeded " + std::to_string(bound) +
                                                " configurations",
                                            bound);
                    e.configs.push_back(std::move(next));
                }
                if (u < it->second) e.edges.push_back({u, it->second, port});
            }
        }
    }
    return e;
}

ncl::OutMask port_profile(const Block& b, const Configuration& c) {
    ncl::OutMask m = 0;
    for (std::size_t i = 0; i < b.ports.size(); ++i)
        if (c[static_cast<std::size_t>(b.ports[i].car)] == b.ports[i].out_anchor) m |= ncl::OutMask{1} << i;
    return m;
}

ncl::GateType project_block(const Block& b, const Enumeration& e) {
    ncl::ProfiledGraph g;
    for (const Configuration& c : e.configs) g.profile.push_back(port_profile(b, c));
    for (const BlockEdge& edge : e.edges) {
        if (edge.port >= 0) g.port_edges.emplace_back(edge.from, edge.to);
        else g.internal_edges.emplace_back(edge.from, edge.to);
    }
    return ncl::quotient_gate(g, b.port_names(), "induced");
}

ncl::GateType project_block(const Block& b, std::size_t bound) {
    return project_block(b, enumerate_block(b, bound));
}

std::string render_configuration(const Block& b, const Configuration& c) {
    const Grid grid(b, c);
    std::string out;
    for (int r = 0; r < b.layout.height; ++r) {
        for (int col = 0; col < b.layout.width; ++col) {
            const int v = grid.at({r, col});
            out.push_back(v == Grid::kEmpty ? '.'
                          : v == Grid::kWall ? '#'
                                             : b.layout.cars[static_cast<std::size_t>(v)].label);
        }
        out.push_back('\n');
    }
    return out;
}

BlockReport verify_block(const Block& b, std::size_t bound) {
    const Enumeration e = enumerate_block(b, bound);
    BlockReport r;
    r.reachable = e.configs.size();
    r.induced = project_block(b, e);
    if (b.intended) r.equivalent = ncl::gate_equivalence(r.induced, *b.intended);
    for (const Configuration& c : e.configs) {
        const Grid grid(b, c);
        for (Position p : b.black)
            if (grid.at(p) == Grid::kEmpty) {
                r.black_ok = false;
                r.counterexample = c;
                r.vacated = p;
                return r;
            }
    }
    return r;
}

} // namespace rushhour::gadgets
