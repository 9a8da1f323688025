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

#include "rushhour/unit/unit_state.hpp"

#include <stdexcept>

namespace rushhour::unit {

UnitState UnitState::from_code(Dims d, std::uint64_t code) {
    const int n = d.cells();
    UnitState s;
    s.dims = d;
    s.empty_index = static_cast<int>(code >> (n - 1));
    s.orientation_bits = code & ((std::uint64_t{1} << (n - 1)) - 1);
    if (s.empty_index >= n) throw std::out_of_range("packed code out of range");
    return s;
}

UnitState encode(const core::Board& b) {
    const Dims d{b.width(), b.height()};
    const int n = d.cells();
    if (n > kMaxUnitCells) throw InvalidBoard("board too large for the packed unit encoding");
    int empty = -1;
    std::uint64_t mask = 0;
    for (int cell = 0; cell < n; ++cell) {
        const Position p = d.position(cell);
        const core::CellContent c = b.at(p);
        switch (c.kind) {
        case core::CellKind::Wall: throw InvalidBoard("unit encoding does not support walls");
        case core::CellKind::Empty:
            if (empty >= 0) throw InvalidBoard("unit encoding needs exactly one empty cell");
            empty = cell;
            break;
        case core::CellKind::Car: {
            const core::Car& car = b.car(c.car);
            if (car.length != 1) throw InvalidBoard("unit encoding needs unit cars only");
            if (car.orientation == Orientation::Vertical) mask |= std::uint64_t{1} << cell;
            break;
        }
        }
    }
    if (empty < 0) throw InvalidBoard("unit encoding needs exactly one empty cell");
    return UnitState::from_mask(d, empty, mask);
}

std::string grid_text(const UnitState& s) {
    std::string out;
    const std::uint64_t mask = s.cell_mask();
    for (int r = 0; r < s.dims.height; ++r) {
        if (r) out.push_back('\n');
        for (int c = 0; c < s.dims.width; ++c) {
            const int cell = s.dims.cell({r, c});
            out.push_back(cell == s.empty_index ? '.' : ((mask >> cell) & 1) ? '|' : '-');
        }
    }
    return out;
}

core::Board decode(const UnitState& s, int exit_row) {
    const Dims d = s.dims;
    if (exit_row < 0 || exit_row >= d.height) throw InvalidBoard("exit row out of range");
    const std::uint64_t mask = s.cell_mask();
    std::vector<core::Car> cars;
    bool have_target = false;
    for (int cell = 0; cell < d.cells(); ++cell) {
        if (cell == s.empty_index) continue;
        core::Car car;
        car.anchor = d.position(cell);
        car.length = 1;
        if ((mask >> cell) & 1) {
            car.orientation = Orientation::Vertical;
            car.label = '|';
        } else {
            car.orientation = Orientation::Horizontal;
            car.label = '-';
            if (!have_target && car.anchor.row == exit_row) {
                car.is_target = true;
                car.label = '=';
                have_target = true;
            }
        }
        cars.push_back(car);
    }
    if (!have_target) throw InvalidBoard("exit row has no horizontal car");
    return core::Board(d.width, d.height, std::move(cars), {}, {exit_row, core::ExitSide::Left});
}

std::uint64_t state_count(int width, int height) {
    if (width < 1 || height < 1) throw std::invalid_argument("dimensions must be positive");
    const std::uint64_t n = static_cast<std::uint64_t>(width) * static_cast<std::uint64_t>(height);
    if (n - 1 >= 64) throw std::overflow_error("state count exceeds 64 bits");
    const std::uint64_t pow = std::uint64_t{1} << (n - 1);
    if (pow > UINT64_MAX / n) throw std::overflow_error("state count exceeds 64 bits");
    return n * pow;
}

const char* to_string(StateClass c) {
    switch (c) {
    case StateClass::Filtered: return "filtered";
    case StateClass::Unsolved: return "unsolved";
    case StateClass::Solved: return "solved";
    case StateClass::JustSolved: return "justsolved";
    }
    return "?";
}

StateClass classify(const UnitState& s, int exit_row) {
    const Dims d = s.dims;
    if (exit_row < 0 || exit_row >= d.height) throw std::out_of_range("exit row out of range");
    int target_col = -1;
    for (int c = 0; c < d.width; ++c)
        if (s.is_horizontal(d.cell({exit_row, c}))) {
            target_col = c;
            break;
        }
    if (target_col < 0) return StateClass::Filtered;
    if (target_col != 0) return StateClass::Unsolved;
    if (d.width > 1 && s.empty_index == d.cell({exit_row, 1})) return StateClass::JustSolved;
    return StateClass::Solved;
}

std::uint64_t justsolved_bit_index(const UnitState& s, int exit_row) {
    if (classify(s, exit_row) != StateClass::JustSolved)
        throw std::invalid_argument("state is not justsolved");
    const int a = s.dims.cell({exit_row, 0});
    const std::uint64_t mask = s.cell_mask();
    const std::uint64_t low = mask & ((std::uint64_t{1} << a) - 1);
    return low | ((mask >> (a + 2)) << a);
}

UnitState justsolved_state(Dims d, int exit_row, std::uint64_t index) {
    const int n = d.cells();
    if (d.width < 2) throw std::invalid_argument("justsolved states need width >= 2");
    if (n - 2 < 64 && index >= (std::uint64_t{1} << (n - 2)))
        throw std::out_of_range("justsolved index out of range");
    const int a = d.cell({exit_row, 0});
    const std::uint64_t low = index & ((std::uint64_t{1} << a) - 1);
    const std::uint64_t mask = low | ((index >> a) << (a + 2));
    return UnitState::from_mask(d, a + 1, mask);
}

std::vector<Position> state_diff(const UnitState& a, const UnitState& b) {
    if (!(a.dims == b.dims)) throw std::invalid_argument("state_diff: dimension mismatch");
    std::vector<Position> out;
    const std::uint64_t ma = a.cell_mask();
    const std::uint64_t mb = b.cell_mask();
    for (int cell = 0; cell < a.dims.cells(); ++cell) {
        const int ca = cell == a.empty_index ? 2 : static_cast<int>((ma >> cell) & 1);
        const int cb = cell == b.empty_index ? 2 : static_cast<int>((mb >> cell) & 1);
        if (ca != cb) out.push_back(a.dims.position(cell));
    }
    return out;
}

UnitSpace::UnitSpace(Dims d, int exit_row)
    : dims_(d), exit_row_(exit_row), n_(d.cells()), target_cell_(d.cell({exit_row, 0})),
      bits_mask_((std::uint64_t{1} << (d.cells() - 1)) - 1) {
    if (d.width < 1 || d.height < 1) throw std::invalid_argument("dimensions must be positive");
    if (n_ > kMaxUnitCells) throw std::invalid_argument("board too large for packed unit states");
    if (exit_row < 0 || exit_row >= d.height) throw std::out_of_range("exit row out of range");
    neighbours_.resize(static_cast<std::size_t>(n_));
    for (int p = 0; p < n_; ++p) {
        const Position pos = d.position(p);
        Neighbours& nb = neighbours_[static_cast<std::size_t>(p)];
        for (Direction dir : {Direction::Left, Direction::Right, Direction::Up, Direction::Down}) {
            const Position q = step(pos, dir);
            if (q.row < 0 || q.row >= d.height || q.col < 0 || q.col >= d.width) continue;
            nb.cell[nb.count] = d.cell(q);
            nb.vertical[nb.count] = axis_of(dir) == Orientation::Vertical;
            ++nb.count;
        }
    }
}

} // namespace rushhour::unit
