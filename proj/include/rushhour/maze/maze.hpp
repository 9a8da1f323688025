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
#include "rushhour/core/board.hpp"

namespace rushhour::maze {

/// Player position plus the orientation of every other cell. The entry under
/// the player is kept but meaningless; equality ignores it and `moves`.
struct PlayerState {
    int width = 0;
    Position player;
    std::vector<Orientation> cells;
    std::size_t moves = 0;

    Orientation at(Position p) const {
        return cells[static_cast<std::size_t>(p.row * width + p.col)];
    }
    /// One character per cell ('H', 'V', 'P'), rows joined by '\n'.
    std::string key() const;

    friend bool operator==(const PlayerState& a, const PlayerState& b) { return a.key() == b.key(); }
};

/// A cell may be entered only along the axis it was last left by; the exit
/// is crossed when the player steps from exit_from to exit_to.
struct Maze {
    int width = 0;
    int height = 0;
    PlayerState start;
    Position exit_from;
    Position exit_to;

    bool in_bounds(Position p) const {
        return p.row >= 0 && p.row < height && p.col >= 0 && p.col < width;
    }
};

/// Grid of 'H', 'V' and one 'P', plus "% exit: (r,c)-(r,c)".
Maze parse_maze(std::string_view text);
std::string render_maze(const Maze& m, const PlayerState& s);
inline std::string render_maze(const Maze& m) { return render_maze(m, m.start); }

/// Needs unit cars only, one empty cell, no walls, and the target as the
/// horizontal car nearest the exit on its row. A left exit on row e becomes
/// the pair (e,0)->(e,1); a right exit the pair (e,w-1)->(e,w-2).
Maze unit_to_maze(const core::Board& b);
/// Inverse of unit_to_maze; the exit pair must sit at one end of a row.
core::Board maze_to_unit(const Maze& m);

/// Directions the player may step, in the order left, right, up, down.
std::vector<Direction> player_moves(const Maze& m, const PlayerState& s);

/// Throws IllegalMove unless d is in player_moves(m, s).
PlayerState apply(const Maze& m, const PlayerState& s, Direction d);

bool crosses_exit(const Maze& m, const PlayerState& s, Direction d);

/// The exit-side end cell holds a car aligned with the exit pair, as after
/// a crossing.
bool is_solved(const Maze& m, const PlayerState& s);

/// Cells reachable by depth-first search over the edges p->q where q's
/// current orientation allows entry from p. Row-major order.
std::vector<Position> reachable_cells(const Maze& m, const PlayerState& s);
inline std::vector<Position> reachable_cells(const Maze& m) { return reachable_cells(m, m.start); }

/// Whether any sequence of moves can move car `car` of a single-empty unit board.
/// Throws std::out_of_range for an unknown car.
bool can_move_car(const core::Board& b, int car);

/// Breadth-first distance to a crossing, nullopt when the exit is unreachable.
/// Throws LimitExceeded past `max_states`.
std::optional<std::size_t> solve_maze(const Maze& m, std::size_t max_states = 20'000'000);

} // namespace rushhour::maze
