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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rushhour/common.hpp"

namespace rushhour::core {

enum class ExitSide : std::uint8_t { Left, Right };

struct ExitSpec {
    int row = 0;
    ExitSide side = ExitSide::Left;

    friend bool operator==(const ExitSpec&, const ExitSpec&) = default;
};

struct Car {
    int id = 0;
    Orientation orientation = Orientation::Horizontal;
    int length = 1;
    Position anchor;  // leftmost (horizontal) or topmost (vertical) segment
    bool is_target = false;
    char label = '-';  // '|', '-', '=' for unit cars, a letter otherwise

    Position segment(int i) const {
        return orientation == Orientation::Horizontal ? Position{anchor.row, anchor.col + i}
                                                      : Position{anchor.row + i, anchor.col};
    }
};

// A move advances one car by exactly one cell along its axis.
struct Move {
    int car = 0;
    Direction direction = Direction::Left;

    friend bool operator==(const Move&, const Move&) = default;
};

constexpr Move reverse(Move m) { return {m.car, opposite(m.direction)}; }

enum class CellKind : std::uint8_t { Empty, Wall, Car };

struct CellContent {
    CellKind kind = CellKind::Empty;
    int car = -1;
};

/// Rush Hour board: a w x h grid of empty cells, walls and cars of length 1-3.
///
/// Boards are immutable values. Car ids index cars() and are stable across
/// apply_move, so a move list recorded from one board replays on it exactly.
/// Equality is canonical: two boards are equal when they render identically,
/// which identifies unit cars of the same kind with each other.
class Board {
public:
    /// Validates every invariant; throws InvalidBoard on violation.
    Board(int width, int height, std::vector<Car> cars, std::vector<Position> walls,
          ExitSpec exit);

    int width() const { return width_; }
    int height() const { return height_; }
    int cell_count() const { return width_ * height_; }
    const std::vector<Car>& cars() const { return cars_; }
    const Car& car(int id) const { return cars_.at(static_cast<std::size_t>(id)); }
    const Car& target() const { return cars_[static_cast<std::size_t>(target_)]; }
    const ExitSpec& exit() const { return exit_; }

    bool in_bounds(Position p) const {
        return p.row >= 0 && p.row < height_ && p.col >= 0 && p.col < width_;
    }
    CellContent at(Position p) const;
    bool is_empty(Position p) const { return in_bounds(p) && grid_[index(p)] == kEmpty; }
    std::vector<Position> walls() const;
    std::vector<Position> empty_cells() const;

    /// One character per cell, rows joined by '\n'; the hashing key for searches.
    std::string key() const;

    friend bool operator==(const Board& a, const Board& b) {
        return a.width_ == b.width_ && a.height_ == b.height_ && a.exit_ == b.exit_ &&
               a.key() == b.key();
    }

private:
    friend Board apply_move(const Board&, Move);

    static constexpr int kEmpty = -1;
    static constexpr int kWall = -2;

    std::size_t index(Position p) const {
        return static_cast<std::size_t>(p.row * width_ + p.col);
    }

    int width_;
    int height_;
    std::vector<int> grid_;
    std::vector<Car> cars_;
    int target_ = -1;
    ExitSpec exit_;
};

/// Grid text before board validation: cars, walls and the '%' lines.
struct Layout {
    struct Meta {
        int line = 0;
        std::string text;  // after the '%', trimmed
    };

    int width = 0;
    int height = 0;
    std::vector<Car> cars;  // in row-major order of their anchors
    std::vector<Position> walls;
    std::optional<ExitSpec> exit;
    std::vector<Meta> metadata;
};

/// Reads the grid and metadata without the target and exit checks.
Layout parse_layout(std::string_view text);

/// Parses the line-oriented board grammar.
///
/// '.' empty, '#' wall, '|' '-' '=' unit cars ('=' is the target), 'A'-'Z'
/// cars of 2-3 cells ('T' is a multi-cell target). "% exit: row <e> [left|right]"
/// sets the exit; without it the exit is the target's row on the left.
/// `exit_override` replaces whatever the text says.
Board parse_board(std::string_view text, std::optional<ExitSpec> exit_override = std::nullopt);

/// Canonical text. The exit line is omitted when it equals the default.
std::string render_board(const Board& b);

/// Unit-step moves into empty cells, ordered by car id, then toward the exit
/// (horizontal) or up before down (vertical).
std::vector<Move> legal_moves(const Board& b);

/// Throws IllegalMove unless m is in legal_moves(b).
Board apply_move(const Board& b, Move m);

bool is_solved(const Board& b);

struct Solution {
    std::vector<Move> moves;
    std::size_t explored = 0;

    std::size_t length() const { return moves.size(); }
};

struct SolveOptions {
    std::size_t max_states = 20'000'000;
};

/// Breadth-first shortest solution. nullopt means the puzzle is unsolvable;
/// hitting options.max_states throws LimitExceeded instead.
std::optional<Solution> shortest_solution(const Board& b, SolveOptions options = {});

/// The sequence of boards visited by replaying `moves` from `b` (b included).
std::vector<Board> replay(const Board& b, const std::vector<Move>& moves);

/// Length of a shortest solution, nullopt if unsolvable.
std::optional<std::size_t> distance_to_solve(const Board& b, SolveOptions options = {});

} // namespace rushhour::core
