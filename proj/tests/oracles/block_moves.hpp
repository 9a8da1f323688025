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

// Test-only oracle: one-step moves of a gadget block configuration, written
// against the grid directly rather than the enumerator's occupancy structure.

#include <vector>

#include "rushhour/gadgets/block.hpp"

namespace oracle {

inline std::vector<rushhour::gadgets::Configuration> block_neighbours(
    const rushhour::gadgets::Block& b, const rushhour::gadgets::Configuration& c) {
    using rushhour::Position;
    const rushhour::core::Layout& l = b.layout;
    std::vector<std::vector<char>> occ(static_cast<std::size_t>(l.height),
                                       std::vector<char>(static_cast<std::size_t>(l.width), 0));
    for (Position w : l.walls) occ[static_cast<std::size_t>(w.row)][static_cast<std::size_t>(w.col)] = 1;
    for (std::size_t i = 0; i < l.cars.size(); ++i) {
        rushhour::core::Car car = l.cars[i];
        car.anchor = c[i];
        for (int k = 0; k < car.length; ++k) {
            const Position p = car.segment(k);
            occ[static_cast<std::size_t>(p.row)][static_cast<std::size_t>(p.col)] = 1;
        }
    }
    std::vector<rushhour::gadgets::Configuration> out;
    for (std::size_t i = 0; i < l.cars.size(); ++i) {
        rushhour::core::Car car = l.cars[i];
        car.anchor = c[i];
        const bool h = car.orientation == rushhour::Orientation::Horizontal;
        for (int delta : {-1, 1}) {
            const Position lead = delta < 0 ? car.segment(0) : car.segment(car.length - 1);
            const Position into = h ? Position{lead.row, lead.col + delta} : Position{lead.row + delta, lead.col};
            if (into.row < 0 || into.col < 0 || into.row >= l.height || into.col >= l.width) continue;
            if (occ[static_cast<std::size_t>(into.row)][static_cast<std::size_t>(into.col)]) continue;
            const Position anchor = h ? Position{car.anchor.row, car.anchor.col + delta}
                                      : Position{car.anchor.row + delta, car.anchor.col};
            bool allowed = true;
            for (const rushhour::gadgets::Port& p : b.ports)
                if (p.car == static_cast<int>(i)) allowed = anchor == p.in_anchor || anchor == p.out_anchor;
            if (!allowed) continue;
            rushhour::gadgets::Configuration next = c;
            next[i] = anchor;
            out.push_back(next);
        }
    }
    return out;
}

} // namespace oracle
