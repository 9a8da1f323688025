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

#include <bit>
#include <cstdint>
#include <vector>

#include "rushhour/common.hpp"
#include "rushhour/core/board.hpp"

namespace rushhour::unit {

struct Dims {
    int width = 0;
    int height = 0;

    int cells() const { return width * height; }
    Position position(int cell) const { return {cell / width, cell % width}; }
    int cell(Position p) const { return p.row * width + p.col; }

    friend bool operator==(const Dims&, const Dims&) = default;
};

// Packing between a full cell mask (bit per cell, empty cell's bit clear) and
// the wh-1 orientation bits that skip the empty cell.
inline std::uint64_t compress_mask(std::uint64_t mask, int empty) {
    const std::uint64_t low = mask & ((std::uint64_t{1} << empty) - 1);
    return low | ((mask >> (empty + 1)) << empty);
}

inline std::uint64_t expand_bits(std::uint64_t bits, int empty) {
    const std::uint64_t low = bits & ((std::uint64_t{1} << empty) - 1);
    return low | ((bits >> empty) << (empty + 1));
}

/// A single-empty-cell Unit Rush Hour state.
///
/// Every cell but `empty_index` holds a unit car. Orientation bit i belongs to
/// the i-th occupied cell in row-major order (0 = horizontal, 1 = vertical).
/// The packed code `empty_index * 2^(wh-1) + orientation_bits` enumerates the
/// wh * 2^(wh-1) states densely and is the tie-breaking order for witnesses.
struct UnitState {
    Dims dims;
    int empty_index = 0;
    std::uint64_t orientation_bits = 0;

    std::uint64_t code() const {
        return (static_cast<std::uint64_t>(empty_index) << (dims.cells() - 1)) | orientation_bits;
    }
    std::uint64_t cell_mask() const { return expand_bits(orientation_bits, empty_index); }

    bool is_empty(int cell) const { return cell == empty_index; }
    bool is_vertical(int cell) const { return cell != empty_index && ((cell_mask() >> cell) & 1); }
    bool is_horizontal(int cell) const { return cell != empty_index && !((cell_mask() >> cell) & 1); }

    static UnitState from_code(Dims d, std::uint64_t code);
    static UnitState from_mask(Dims d, int empty, std::uint64_t mask) {
        return {d, empty, compress_mask(mask, empty)};
    }

    friend bool operator==(const UnitState&, const UnitState&) = default;
};

/// Largest board the 64-bit packed code supports.
inline constexpr int kMaxUnitCells = 58;

/// Throws InvalidBoard unless b has only unit cars, no walls and one empty cell.
UnitState encode(const core::Board& b);

/// The Board for s with the exit on `exit_row`; the target is the leftmost
/// horizontal car there. Throws InvalidBoard when that row has none.
core::Board decode(const UnitState& s, int exit_row);

/// Grid text with '-' for every horizontal car (no target marking).
std::string grid_text(const UnitState& s);

/// wh * 2^(wh-1). Throws std::overflow_error beyond 64 bits.
std::uint64_t state_count(int width, int height);

enum class StateClass : std::uint8_t { Filtered, Unsolved, Solved, JustSolved };

const char* to_string(StateClass c);

/// Filtered: no horizontal car on the exit row. Otherwise the target is the
/// leftmost horizontal car on that row; Solved when it sits in column 0 and
/// JustSolved when, in addition, the empty cell is right next to it.
StateClass classify(const UnitState& s, int exit_row);

/// Index of a justsolved state among the 2^(wh-2) justsolved states of its
/// exit row: the orientation bits of every cell except (e,0) and (e,1).
std::uint64_t justsolved_bit_index(const UnitState& s, int exit_row);

/// Inverse of justsolved_bit_index.
UnitState justsolved_state(Dims d, int exit_row, std::uint64_t index);

/// Cells whose content (empty, horizontal or vertical) differs, row-major.
std::vector<Position> state_diff(const UnitState& a, const UnitState& b);

/// Precomputed neighbourhoods for fast move generation on packed states.
///
/// A move slides the car on a neighbour cell q into the empty cell p, which
/// requires the car to lie along the p-q axis; afterwards q is empty.
class UnitSpace {
public:
    UnitSpace(Dims d, int exit_row);

    Dims dims() const { return dims_; }
    int exit_row() const { return exit_row_; }
    int cells() const { return n_; }
    int target_cell() const { return target_cell_; }

    std::uint64_t code(int empty, std::uint64_t mask) const {
        return (static_cast<std::uint64_t>(empty) << (n_ - 1)) | compress_mask(mask, empty);
    }
    int empty_of(std::uint64_t code) const { return static_cast<int>(code >> (n_ - 1)); }
    std::uint64_t mask_of(std::uint64_t code) const {
        return expand_bits(code & bits_mask_, empty_of(code));
    }

    /// Solved means the car in column 0 of the exit row is horizontal.
    bool solved(int empty, std::uint64_t mask) const {
        return empty != target_cell_ && !((mask >> target_cell_) & 1);
    }
    bool justsolved(int empty, std::uint64_t mask) const {
        return empty == target_cell_ + 1 && !((mask >> target_cell_) & 1);
    }
    std::uint64_t justsolved_index(std::uint64_t mask) const {
        const std::uint64_t low = mask & ((std::uint64_t{1} << target_cell_) - 1);
        return low | ((mask >> (target_cell_ + 2)) << target_cell_);
    }

    /// Calls f(next_empty, next_mask) for every legal move, in the fixed order
    /// left, right, up, down of the empty cell.
    template <class F>
    void for_each_move(int empty, std::uint64_t mask, F&& f) const {
        const Neighbours& nb = neighbours_[static_cast<std::size_t>(empty)];
        for (int i = 0; i < nb.count; ++i) {
            const int q = nb.cell[i];
            const bool vertical = (mask >> q) & 1;
            if (nb.vertical[i] != vertical) continue;
            if (vertical)
                f(q, mask ^ (std::uint64_t{1} << q) ^ (std::uint64_t{1} << empty));
            else
                f(q, mask);
        }
    }

private:
    struct Neighbours {
        int count = 0;
        int cell[4] = {};
        bool vertical[4] = {};
    };

    Dims dims_;
    int exit_row_;
    int n_;
    int target_cell_;
    std::uint64_t bits_mask_;
    std::vector<Neighbours> neighbours_;
};

} // namespace rushhour::unit
