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

#include "rushhour/maze/right_hand.hpp"

#include <string>

#include "absl/container/flat_hash_map.h"

namespace rushhour::maze {

const char* to_string(Heading h) {
    switch (h) {
    case Heading::North: return "north";
    case Heading::East: return "east";
    case Heading::South: return "south";
    case Heading::West: return "west";
    }
    return "?";
}

const char* to_string(RhrOutcome o) {
    switch (o) {
    case RhrOutcome::ExitFound: return "exit";
    case RhrOutcome::CycleDetected: return "cycle";
    case RhrOutcome::StepLimit: return "limit";
    }
    return "?";
}

Direction direction_of(Heading h) {
    switch (h) {
    case Heading::North: return Direction::Up;
    case Heading::East: return Direction::Right;
    case Heading::South: return Direction::Down;
    case Heading::West: return Direction::Left;
    }
    return Direction::Up;
}

Heading heading_of(Direction d) {
    switch (d) {
    case Direction::Up: return Heading::North;
    case Direction::Right: return Heading::East;
    case Direction::Down: return Heading::South;
    case Direction::Left: return Heading::West;
    }
    return Heading::North;
}

Heading turn_right(Heading h) { return static_cast<Heading>((static_cast<int>(h) + 1) % 4); }
Heading turn_left(Heading h) { return static_cast<Heading>((static_cast<int>(h) + 3) % 4); }
Heading turn_back(Heading h) { return static_cast<Heading>((static_cast<int>(h) + 2) % 4); }

RhrTrace right_hand_run(const Maze& m, Heading initial, std::size_t step_limit) {
    RhrTrace t;
    PlayerState s = m.start;
    s.moves = 0;
    Heading h = initial;
    absl::flat_hash_map<std::string, std::size_t> seen;
    auto key = [](const PlayerState& st, Heading hd) {
        return st.key() + static_cast<char>('0' + static_cast<int>(hd));
    };

    t.steps.push_back({0, s, h});
    seen.emplace(key(s, h), 0);
    if (is_solved(m, s)) {
        t.outcome = RhrOutcome::ExitFound;
        return t;
    }
    for (std::size_t k = 1;; ++k) {
        const auto legal = player_moves(m, s);
        if (legal.empty()) {
            t.outcome = RhrOutcome::CycleDetected;
            t.end_step = k - 1;
            t.first_seen = k - 1;
            return t;
        }
        if (k > step_limit) {
            t.outcome = RhrOutcome::StepLimit;
            t.end_step = k - 1;
            return t;
        }
        std::optional<Direction> chosen;
        for (Heading cand : {turn_right(h), h, turn_left(h), turn_back(h)}) {
            const Direction d = direction_of(cand);
            for (Direction l : legal)
                if (l == d) chosen = d;
            if (chosen) break;
        }
        const bool crossing = crosses_exit(m, s, *chosen);
        s = apply(m, s, *chosen);
        h = heading_of(*chosen);
        t.steps.push_back({k, s, h});
        t.end_step = k;
        if (crossing) {
            t.outcome = RhrOutcome::ExitFound;
            return t;
        }
        auto [it, inserted] = seen.emplace(key(s, h), k);
        if (!inserted) {
            t.outcome = RhrOutcome::CycleDetected;
            t.first_seen = it->second;
            return t;
        }
    }
}

} // namespace rushhour::maze
