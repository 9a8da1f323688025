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

#include "rushhour/maze/maze.hpp"

#include <algorithm>
#include <deque>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "absl/container/flat_hash_set.h"
#include "rushhour/unit/unit_state.hpp"

namespace rushhour::maze {

namespace {

std::size_t idx(int width, Position p) { return static_cast<std::size_t>(p.row * width + p.col); }

bool adjacent(Position a, Position b) {
    return std::abs(a.row - b.row) + std::abs(a.col - b.col) == 1;
}

Orientation exit_axis(const Maze& m) {
    return m.exit_from.row == m.exit_to.row ? Orientation::Horizontal : Orientation::Vertical;
}

constexpr Direction kOrder[] = {Direction::Left, Direction::Right, Direction::Up, Direction::Down};

} // namespace

std::string PlayerState::key() const {
    std::string s;
    const int height = width ? static_cast<int>(cells.size()) / width : 0;
    for (int r = 0; r < height; ++r) {
        if (r) s.push_back('\n');
        for (int c = 0; c < width; ++c) {
            if (Position{r, c} == player) s.push_back('P');
            else s.push_back(at({r, c}) == Orientation::Horizontal ? 'H' : 'V');
        }
    }
    return s;
}

Maze parse_maze(std::string_view text) {
    std::vector<std::string> rows;
    std::optional<std::pair<Position, Position>> exit;
    std::istringstream in{std::string(text)};
    static const std::regex exit_re(
        R"(^\s*exit:\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*-\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$)");
    int line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        std::string t;
        for (char c : line)
            if (c != ' ' && c != '\t' && c != '\r') t.push_back(c);
        if (t.empty()) {
            if (!rows.empty()) break;
            continue;
        }
        if (t[0] == '%') {
            std::smatch mt;
            const std::string body = line.substr(line.find('%') + 1);
            if (std::regex_match(body, mt, exit_re)) {
                exit = {{std::stoi(mt[1]), std::stoi(mt[2])}, {std::stoi(mt[3]), std::stoi(mt[4])}};
            } else if (body.find("exit") != std::string::npos) {
                throw ParseError(line_no, "expected '% exit: (r,c)-(r,c)'");
            }
            continue;
        }
        for (char c : t)
            if (c != 'H' && c != 'V' && c != 'P')
                throw ParseError(line_no, std::string("unexpected character '") + c + "' in maze");
        rows.push_back(t);
    }
    if (rows.empty()) throw ParseError(0, "empty maze");
    Maze m;
    m.height = static_cast<int>(rows.size());
    m.width = static_cast<int>(rows[0].size());
    m.start.width = m.width;
    int players = 0;
    for (int r = 0; r < m.height; ++r) {
        if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != m.width)
            throw ParseError(0, "ragged maze row " + std::to_string(r));
        for (int c = 0; c < m.width; ++c) {
            const char ch = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (ch == 'P') {
                ++players;
                m.start.player = {r, c};
            }
            m.start.cells.push_back(ch == 'V' ? Orientation::Vertical : Orientation::Horizontal);
        }
    }
    if (players != 1) throw ParseError(0, "maze needs exactly one player 'P'");
    if (!exit) throw ParseError(0, "maze needs an '% exit: (r,c)-(r,c)' line");
    m.exit_from = exit->first;
    m.exit_to = exit->second;
    if (!m.in_bounds(m.exit_from) || !m.in_bounds(m.exit_to) || !adjacent(m.exit_from, m.exit_to))
        throw ParseError(0, "exit cells must be neighbouring cells of the grid");
    return m;
}

std::string render_maze(const Maze& m, const PlayerState& s) {
    return "% exit: (" + std::to_string(m.exit_from.row) + "," + std::to_string(m.exit_from.col) +
           ")-(" + std::to_string(m.exit_to.row) + "," + std::to_string(m.exit_to.col) + ")\n" +
           s.key() + "\n";
}

Maze unit_to_maze(const core::Board& b) {
    const unit::UnitState u = unit::encode(b);
    const int e = b.exit().row;
    const bool left = b.exit().side == core::ExitSide::Left;
    // The target must be the horizontal car nearest the exit.
    for (int k = 0; k < b.width(); ++k) {
        const Position p{e, left ? k : b.width() - 1 - k};
        const core::CellContent c = b.at(p);
        if (c.kind != core::CellKind::Car) continue;
        const core::Car& car = b.car(c.car);
        if (car.orientation != Orientation::Horizontal) continue;
        if (!car.is_target)
            throw InvalidBoard("the target is not the horizontal car nearest the exit on its row");
        break;
    }
    if (b.width() < 2) throw InvalidBoard("maze exit needs at least two columns");
    Maze m;
    m.width = b.width();
    m.height = b.height();
    m.start.width = m.width;
    m.start.player = u.dims.position(u.empty_index);
    const std::uint64_t mask = u.cell_mask();
    for (int cell = 0; cell < u.dims.cells(); ++cell)
        m.start.cells.push_back((mask >> cell) & 1 ? Orientation::Vertical : Orientation::Horizontal);
    m.exit_from = left ? Position{e, 0} : Position{e, b.width() - 1};
    m.exit_to = left ? Position{e, 1} : Position{e, b.width() - 2};
    return m;
}

core::Board maze_to_unit(const Maze& m) {
    const int e = m.exit_from.row;
    core::ExitSide side;
    if (m.exit_from == Position{e, 0} && m.exit_to == Position{e, 1})
        side = core::ExitSide::Left;
    else if (m.exit_from == Position{e, m.width - 1} && m.exit_to == Position{e, m.width - 2})
        side = core::ExitSide::Right;
    else
        throw InvalidBoard("maze exit is not at the end of a row");
    std::vector<core::Car> cars;
    int target = -1;
    for (int k = 0; k < m.width; ++k) {
        const Position p{e, side == core::ExitSide::Left ? k : m.width - 1 - k};
        if (p != m.start.player && m.start.at(p) == Orientation::Horizontal) {
            target = p.col;
            break;
        }
    }
    if (target < 0) throw InvalidBoard("no horizontal car on the exit row");
    for (int r = 0; r < m.height; ++r)
        for (int c = 0; c < m.width; ++c) {
            if (Position{r, c} == m.start.player) continue;
            core::Car car;
            car.anchor = {r, c};
            car.orientation = m.start.at({r, c});
            car.label = car.orientation == Orientation::Vertical ? '|' : '-';
            if (r == e && c == target) {
                car.is_target = true;
                car.label = '=';
            }
            cars.push_back(car);
        }
    return core::Board(m.width, m.height, std::move(cars), {}, {e, side});
}

std::vector<Direction> player_moves(const Maze& m, const PlayerState& s) {
    std::vector<Direction> out;
    for (Direction d : kOrder) {
        const Position q = step(s.player, d);
        if (m.in_bounds(q) && s.at(q) == axis_of(d)) out.push_back(d);
    }
    return out;
}

PlayerState apply(const Maze& m, const PlayerState& s, Direction d) {
    const Position q = step(s.player, d);
    if (!m.in_bounds(q) || s.at(q) != axis_of(d))
        throw IllegalMove(std::string("player cannot move ") + to_string(d) + " from " +
                          to_string(s.player));
    PlayerState next = s;
    next.cells[idx(m.width, s.player)] = axis_of(d);
    next.player = q;
    ++next.moves;
    return next;
}

bool crosses_exit(const Maze& m, const PlayerState& s, Direction d) {
    return s.player == m.exit_from && step(s.player, d) == m.exit_to;
}

bool is_solved(const Maze& m, const PlayerState& s) {
    return s.player != m.exit_from && s.at(m.exit_from) == exit_axis(m);
}

std::vector<Position> reachable_cells(const Maze& m, const PlayerState& s) {
    std::vector<char> seen(static_cast<std::size_t>(m.width * m.height), 0);
    std::vector<Position> stack{s.player};
    seen[idx(m.width, s.player)] = 1;
    while (!stack.empty()) {
        const Position p = stack.back();
        stack.pop_back();
        for (Direction d : kOrder) {
            const Position q = step(p, d);
            if (!m.in_bounds(q) || seen[idx(m.width, q)] || s.at(q) != axis_of(d)) continue;
            seen[idx(m.width, q)] = 1;
            stack.push_back(q);
        }
    }
    std::vector<Position> out;
    for (int r = 0; r < m.height; ++r)
        for (int c = 0; c < m.width; ++c)
            if (seen[idx(m.width, {r, c})]) out.push_back({r, c});
    return out;
}

bool can_move_car(const core::Board& b, int car) {
    const core::Car& c = b.cars().at(static_cast<std::size_t>(car));
    const unit::UnitState u = unit::encode(b);
    Maze m;
    m.width = b.width();
    m.height = b.height();
    m.start.width = m.width;
    m.start.player = u.dims.position(u.empty_index);
    const std::uint64_t mask = u.cell_mask();
    for (int cell = 0; cell < u.dims.cells(); ++cell)
        m.start.cells.push_back((mask >> cell) & 1 ? Orientation::Vertical : Orientation::Horizontal);
    const auto cells = reachable_cells(m);
    // The player enters a cell only along that cell's axis, i.e. the car's.
    return std::find(cells.begin(), cells.end(), c.anchor) != cells.end();
}

std::optional<std::size_t> solve_maze(const Maze& m, std::size_t max_states) {
    if (is_solved(m, m.start)) return 0;
    absl::flat_hash_set<std::string> seen{m.start.key()};
    std::deque<PlayerState> queue{m.start};
    while (!queue.empty()) {
        const PlayerState s = std::move(queue.front());
        queue.pop_front();
        for (Direction d : player_moves(m, s)) {
            if (crosses_exit(m, s, d)) return s.moves + 1;
            PlayerState next = apply(m, s, d);
            if (!seen.insert(next.key()).second) continue;
            if (seen.size() > max_states)
                throw LimitExceeded("maze search exceeded " + std::to_string(max_states) + " states",
                                    max_states);
            queue.push_back(std::move(next));
        }
    }
    return std::nullopt;
}

} // namespace rushhour::maze
