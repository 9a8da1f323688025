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
#include <span>
#include <vector>

#include "rushhour/common.hpp"
#include "rushhour/core/board.hpp"

namespace rushhour::unit {

enum class SegmentKind : std::uint8_t { SimplePath, PathCircuitReverse, Raw };

const char* to_string(SegmentKind k);

/// A piece of an empty-cell trajectory covering positions [begin, end].
/// Consecutive segments share their boundary position.
struct TrajectorySegment {
    SegmentKind kind = SegmentKind::SimplePath;
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t path_length = 0;     // PathCircuitReverse: steps before the circuit
    std::size_t circuit_length = 0;  // PathCircuitReverse: steps around the circuit
    std::vector<Position> cells;     // trajectory[begin..end]
    std::vector<Position> corners;   // circuit cells where the empty cell turns
};

/// Positions of the (single) empty cell before and after each move.
std::vector<Position> empty_trajectory(const core::Board& start, const std::vector<core::Move>& moves);

/// Greedy decomposition: extend a simple path until the empty cell revisits a
/// cell; the closed loop is a circuit, grown outward while the trajectory
/// retraces the path leading into it. Loops shorter than 4 steps, and
/// trajectories with non-adjacent consecutive positions, yield Raw segments.
std::vector<TrajectorySegment> analyze_trajectory(std::span<const Position> trajectory);

} // namespace rushhour::unit
