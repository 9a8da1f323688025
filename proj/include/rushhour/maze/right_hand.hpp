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
#include <vector>

#include "rushhour/maze/maze.hpp"

namespace rushhour::maze {

enum class Heading : std::uint8_t { North, East, South, West };

const char* to_string(Heading h);
Direction direction_of(Heading h);
Heading heading_of(Direction d);
Heading turn_right(Heading h);
Heading turn_left(Heading h);
Heading turn_back(Heading h);

enum class RhrOutcome : std::uint8_t { ExitFound, CycleDetected, StepLimit };

const char* to_string(RhrOutcome o);

struct RhrStep {
    std::size_t step = 0;
    PlayerState state;
    Heading heading = Heading::North;
};

/// steps[k] is the position after k moves. A cycle ends the run at the first
/// step whose (state, heading) was seen before, at step `first_seen`.
struct RhrTrace {
    std::vector<RhrStep> steps;
    RhrOutcome outcome = RhrOutcome::StepLimit;
    std::size_t end_step = 0;
    std::optional<std::size_t> first_seen;
};

inline constexpr std::size_t kDefaultStepLimit = 100'000;

/// Wall follower: each step takes the first legal move among right turn,
/// straight on, left turn and reverse relative to the current heading.
/// A player with no legal move at all ends in a cycle at step 0.
RhrTrace right_hand_run(const Maze& m, Heading initial, std::size_t step_limit = kDefaultStepLimit);

} // namespace rushhour::maze
