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

#include "rushhour/core/board.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

namespace rushhour {

std::string to_string(Position p) {
    return "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")";
}

const char* to_string(Direction d) {
    switch (d) {
    case Direction::Left: return "left";
    case Direction::Right: return "right";
    case Direction::Up: return "up";
    case Direction::Down: return "down";
    }
    return "?";
}

} // namespace rushhour

namespace rushhour::core {

namespace {

bool is_unit_label(char c) { return c == '|' || c == '-' || c == '='; }

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

// "% exit: row <e> [left|right]"
std::optional<ExitSpec> parse_exit_line(const std::string& body, int line) {
    std::istringstream in(body);
    std::string key, row_word;
    in >> key;
    if (key != "exit:") return std::nullopt;
    int row = -1;
    if (!(in >> row_word >> row) || row_word != "row")
        throw ParseError(line, "expected '% exit: row <e> [left|right]'");
    ExitSpec spec{row, ExitSide::Left};
    std::string side;
    if (in >> side) {
        if (side == "left") spec.side = ExitSide::Left;
        else if (side == "right") spec.side = ExitSide::Right;
        else throw ParseError(line, "exit side must be 'left' or 'right', got '" + side + "'");
    }
    return spec;
}

} // namespace

Board::Board(int width, int height, std::vector<Car> cars, std::vector<Position> walls,
             ExitSpec exit)
    : width_(width), height_(height), cars_(std::move(cars)), exit_(exit) {
    if (width_ < 1 || height_ < 1) throw InvalidBoard("board dimensions must be positive");
    grid_.assign(static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_), kEmpty);
    for (Position w : walls) {
        if (!in_bounds(w)) throw InvalidBoard("wall " + to_string(w) + " out of bounds");
        if (grid_[index(w)] != kEmpty) throw InvalidBoard("duplicate wall " + to_string(w));
        grid_[index(w)] = kWall;
    }
    for (std::size_t i = 0; i < cars_.size(); ++i) {
        Car& c = cars_[i];
        c.id = static_cast<int>(i);
        if (c.length < 1 || c.length > 3)
            throw InvalidBoard("car " + std::to_string(i) + " has length " +
                               std::to_string(c.length) + ", expected 1-3");
        for (int s = 0; s < c.length; ++s) {
            Position p = c.segment(s);
            if (!in_bounds(p))
                throw InvalidBoard("car " + std::to_string(i) + " leaves the board at " +
                                   to_string(p));
            int& slot = grid_[index(p)];
            if (slot == kWall) throw InvalidBoard("car overlaps wall at " + to_string(p));
            if (slot != kEmpty) throw InvalidBoard("cars overlap at " + to_string(p));
            slot = c.id;
        }
        if (c.is_target) {
            if (target_ >= 0) throw InvalidBoard("more than one target car");
            target_ = c.id;
        }
    }
    if (target_ < 0) throw InvalidBoard("no target car");
    if (exit_.row < 0 || exit_.row >= height_)
        throw InvalidBoard("exit row " + std::to_string(exit_.row) + " out of range");
    const Car& t = target();
    if (t.orientation != Orientation::Horizontal) throw InvalidBoard("target car is not horizontal");
    if (t.anchor.row != exit_.row)
        throw InvalidBoard("target car is on row " + std::to_string(t.anchor.row) +
                           ", exit is on row " + std::to_string(exit_.row));
}

CellContent Board::at(Position p) const {
    if (!in_bounds(p)) return {CellKind::Wall, -1};
    int v = grid_[index(p)];
    if (v == kEmpty) return {CellKind::Empty, -1};
    if (v == kWall) return {CellKind::Wall, -1};
    return {CellKind::Car, v};
}

std::vector<Position> Board::walls() const {
    std::vector<Position> out;
    for (int r = 0; r < height_; ++r)
        for (int c = 0; c < width_; ++c)
            if (grid_[index({r, c})] == kWall) out.push_back({r, c});
    return out;
}

std::vector<Position> Board::empty_cells() const {
    std::vector<Position> out;
    for (int r = 0; r < height_; ++r)
        for (int c = 0; c < width_; ++c)
            if (grid_[index({r, c})] == kEmpty) out.push_back({r, c});
    return out;
}

std::string Board::key() const {
    std::string s;
    s.reserve(static_cast<std::size_t>((width_ + 1) * height_));
    for (int r = 0; r < height_; ++r) {
        if (r) s.push_back('\n');
        for (int c = 0; c < width_; ++c) {
            int v = grid_[index({r, c})];
            s.push_back(v == kEmpty ? '.' : v == kWall ? '#' : cars_[static_cast<std::size_t>(v)].label);
        }
    }
    return s;
}

Layout parse_layout(std::string_view text) {
    std::vector<std::string> rows;
    Layout layout;
    int line_no = 0;
    int first_row_line = 0;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty()) {
            if (!rows.empty()) break;  // a blank line ends the grid
            continue;
        }
        if (t[0] == '%') {
            if (auto e = parse_exit_line(t.substr(1), line_no)) layout.exit = e;
            layout.metadata.push_back({line_no, trim(t.substr(1))});
            continue;
        }
        std::string row;
        for (char c : t)
            if (c != ' ' && c != '\t') row.push_back(c);
        if (rows.empty()) first_row_line = line_no;
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError(0, "empty board");
    const int height = static_cast<int>(rows.size());
    const int width = static_cast<int>(rows[0].size());
    for (int r = 0; r < height; ++r) {
        if (static_cast<int>(rows[r].size()) != width)
            throw ParseError(first_row_line + r, "ragged row: expected " + std::to_string(width) +
                                                     " cells, got " + std::to_string(rows[r].size()));
    }

    std::vector<Car> cars;
    std::vector<Position> walls;
    std::map<char, std::vector<Position>> lettered;
    for (int r = 0; r < height; ++r)
        for (int c = 0; c < width; ++c) {
            char ch = rows[r][c];
            if (std::isupper(static_cast<unsigned char>(ch))) lettered[ch].push_back({r, c});
        }

    std::map<char, bool> placed;
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            char ch = rows[r][c];
            if (ch == '.') continue;
            if (ch == '#') {
                walls.push_back({r, c});
                continue;
            }
            if (is_unit_label(ch)) {
                Car car;
                car.orientation = ch == '|' ? Orientation::Vertical : Orientation::Horizontal;
                car.length = 1;
                car.anchor = {r, c};
                car.is_target = ch == '=';
                car.label = ch;
                cars.push_back(car);
                continue;
            }
            if (!std::isupper(static_cast<unsigned char>(ch)))
                throw ParseError(first_row_line + r,
                                 std::string("unexpected character '") + ch + "'");
            if (placed[ch]) continue;
            placed[ch] = true;
            const auto& cells = lettered[ch];  // row-major, so cells[0] is the anchor
            const int n = static_cast<int>(cells.size());
            if (n < 2 || n > 3)
                throw ParseError(first_row_line + r, std::string("car '") + ch + "' has " +
                                                         std::to_string(n) + " cells, expected 2-3");
            Car car;
            car.anchor = cells[0];
            car.length = n;
            car.label = ch;
            car.is_target = ch == 'T';
            if (cells[1] == Position{cells[0].row, cells[0].col + 1})
                car.orientation = Orientation::Horizontal;
            else if (cells[1] == Position{cells[0].row + 1, cells[0].col})
                car.orientation = Orientation::Vertical;
            else
                throw ParseError(first_row_line + r,
                                 std::string("car '") + ch + "' is not contiguous");
            for (int i = 0; i < n; ++i)
                if (cells[i] != car.segment(i))
                    throw ParseError(first_row_line + r, std::string("car '") + ch +
                                                             "' is ambiguous: cells are not one "
                                                             "contiguous collinear run");
            cars.push_back(car);
        }
    }

    layout.width = width;
    layout.height = height;
    layout.cars = std::move(cars);
    layout.walls = std::move(walls);
    return layout;
}

Board parse_board(std::string_view text, std::optional<ExitSpec> exit_override) {
    Layout layout = parse_layout(text);
    int targets = 0;
    int target_row = 0;
    for (const Car& c : layout.cars)
        if (c.is_target) {
            ++targets;
            target_row = c.anchor.row;
        }
    if (targets == 0) throw ParseError(0, "no target car ('=' or 'T')");
    if (targets > 1) throw ParseError(0, "more than one target car");

    ExitSpec spec = exit_override ? *exit_override
                                  : layout.exit.value_or(ExitSpec{target_row, ExitSide::Left});
    try {
        return Board(layout.width, layout.height, std::move(layout.cars), std::move(layout.walls), spec);
    } catch (const InvalidBoard& e) {
        throw ParseError(0, e.what());
    }
}

std::string render_board(const Board& b) {
    std::string out;
    const ExitSpec def{b.target().anchor.row, ExitSide::Left};
    if (b.exit() != def) {
        out += "% exit: row " + std::to_string(b.exit().row) +
               (b.exit().side == ExitSide::Left ? " left" : " right") + "\n";
    }
    out += b.key();
    out += '\n';
    return out;
}

namespace {

std::array<Direction, 2> move_directions(const Board& b, const Car& c) {
    if (c.orientation == Orientation::Vertical) return {Direction::Up, Direction::Down};
    if (b.exit().side == ExitSide::Left) return {Direction::Left, Direction::Right};
    return {Direction::Right, Direction::Left};
}

// The cell a car must enter to advance one step in direction d.
Position leading_cell(const Car& c, Direction d) {
    switch (d) {
    case Direction::Left:
    case Direction::Up: return step(c.anchor, d);
    case Direction::Right:
    case Direction::Down: return step(c.segment(c.length - 1), d);
    }
    return c.anchor;
}

bool can_move(const Board& b, const Car& c, Direction d) {
    if (axis_of(d) != c.orientation) return false;
    return b.is_empty(leading_cell(c, d));
}

} // namespace

std::vector<Move> legal_moves(const Board& b) {
    std::vector<Move> out;
    for (const Car& c : b.cars())
        for (Direction d : move_directions(b, c))
            if (can_move(b, c, d)) out.push_back({c.id, d});
    return out;
}

Board apply_move(const Board& b, Move m) {
    if (m.car < 0 || m.car >= static_cast<int>(b.cars().size()))
        throw IllegalMove("no car with id " + std::to_string(m.car));
    const Car& c = b.car(m.car);
    if (!can_move(b, c, m.direction))
        throw IllegalMove("car " + std::to_string(m.car) + " cannot move " + to_string(m.direction));
    Board next = b;
    Car& nc = next.cars_[static_cast<std::size_t>(m.car)];
    Position enter = leading_cell(c, m.direction);
    Position vacate = (m.direction == Direction::Left || m.direction == Direction::Up)
                          ? c.segment(c.length - 1)
                          : c.anchor;
    next.grid_[next.index(enter)] = c.id;
    next.grid_[next.index(vacate)] = Board::kEmpty;
    nc.anchor = step(c.anchor, m.direction);
    return next;
}

bool is_solved(const Board& b) {
    const Car& t = b.target();
    if (b.exit().side == ExitSide::Left) return t.anchor.col == 0;
    return t.anchor.col + t.length - 1 == b.width() - 1;
}

std::optional<Solution> shortest_solution(const Board& b, SolveOptions options) {
    if (is_solved(b)) return Solution{{}, 1};
    struct Node {
        int parent;
        Move move;
    };
    std::vector<Node> nodes{{-1, {}}};
    std::unordered_map<std::string, int> seen{{b.key(), 0}};
    std::deque<std::pair<Board, int>> queue;
    queue.emplace_back(b, 0);
    while (!queue.empty()) {
        auto [cur, idx] = std::move(queue.front());
        queue.pop_front();
        for (Move m : legal_moves(cur)) {
            Board next = apply_move(cur, m);
            auto [it, fresh] = seen.emplace(next.key(), static_cast<int>(nodes.size()));
            if (!fresh) continue;
            nodes.push_back({idx, m});
            if (is_solved(next)) {
                Solution sol;
                sol.explored = nodes.size();
                for (int i = static_cast<int>(nodes.size()) - 1; i > 0; i = nodes[i].parent)
                    sol.moves.push_back(nodes[i].move);
                std::reverse(sol.moves.begin(), sol.moves.end());
                return sol;
            }
            if (nodes.size() > options.max_states)
                throw LimitExceeded("state-space cap of " + std::to_string(options.max_states) +
                                        " states exceeded",
                                    options.max_states);
            queue.emplace_back(std::move(next), it->second);
        }
    }
    return std::nullopt;
}

std::vector<Board> replay(const Board& b, const std::vector<Move>& moves) {
    std::vector<Board> out{b};
    out.reserve(moves.size() + 1);
    for (Move m : moves) out.push_back(apply_move(out.back(), m));
    return out;
}

std::optional<std::size_t> distance_to_solve(const Board& b, SolveOptions options) {
    auto sol = shortest_solution(b, options);
    if (!sol) return std::nullopt;
    return sol->length();
}

} // namespace rushhour::core
