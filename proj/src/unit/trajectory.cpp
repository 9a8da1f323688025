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

#include "rushhour/unit/trajectory.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>

namespace rushhour::unit {

const char* to_string(SegmentKind k) {
    switch (k) {
    case SegmentKind::SimplePath: return "path";
    case SegmentKind::PathCircuitReverse: return "path-circuit-reverse";
    case SegmentKind::Raw: return "raw";
    }
    return "?";
}

std::vector<Position> empty_trajectory(const core::Board& start, const std::vector<core::Move>& moves) {
    const auto empties = start.empty_cells();
    if (empties.size() != 1) throw InvalidBoard("empty-cell trajectory needs exactly one empty cell");
    std::vector<Position> out{empties[0]};
    core::Board b = start;
    for (core::Move m : moves) {
        const core::Car& c = b.car(m.car);
        // The empty cell jumps to the cell the car vacates.
        Position vacated = (m.direction == Direction::Left || m.direction == Direction::Up)
                               ? c.segment(c.length - 1)
                               : c.anchor;
        b = core::apply_move(b, m);
        out.push_back(vacated);
    }
    return out;
}

namespace {

bool adjacent(Position a, Position b) {
    return std::abs(a.row - b.row) + std::abs(a.col - b.col) == 1;
}

bool turns(Position before, Position at, Position after) {
    const bool in_horizontal = before.row == at.row;
    const bool out_horizontal = at.row == after.row;
    return in_horizontal != out_horizontal;
}

TrajectorySegment make_segment(SegmentKind kind, std::span<const Position> t, std::size_t begin,
                               std::size_t end) {
    TrajectorySegment s;
    s.kind = kind;
    s.begin = begin;
    s.end = end;
    s.cells.assign(t.begin() + static_cast<std::ptrdiff_t>(begin),
                   t.begin() + static_cast<std::ptrdiff_t>(end) + 1);
    return s;
}

} // namespace

std::vector<TrajectorySegment> analyze_trajectory(std::span<const Position> t) {
    std::vector<TrajectorySegment> out;
    if (t.size() <= 1) {
        if (!t.empty()) out.push_back(make_segment(SegmentKind::SimplePath, t, 0, 0));
        return out;
    }
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
        if (!adjacent(t[i], t[i + 1])) {
            out.push_back(make_segment(SegmentKind::Raw, t, 0, t.size() - 1));
            return out;
        }

    std::size_t start = 0;
    while (start + 1 < t.size()) {
        std::map<Position, std::size_t> first_seen{{t[start], start}};
        std::size_t j = start + 1;
        std::size_t k = 0;
        bool revisit = false;
        for (; j < t.size(); ++j) {
            auto [it, fresh] = first_seen.emplace(t[j], j);
            if (!fresh) {
                k = it->second;
                revisit = true;
                break;
            }
        }
        if (!revisit) {
            out.push_back(make_segment(SegmentKind::SimplePath, t, start, t.size() - 1));
            break;
        }
        // t[k..j] is a closed loop; grow while the trajectory retraces t[..k].
        std::size_t reach = 0;
        while (k - reach > start && j + reach + 1 < t.size() && t[j + reach + 1] == t[k - reach - 1])
            ++reach;
        const std::size_t seg_begin = k - reach;
        const std::size_t seg_end = j + reach;
        if (seg_begin > start)
            out.push_back(make_segment(SegmentKind::SimplePath, t, start, seg_begin));
        const std::size_t loop = j - k;
        TrajectorySegment s = make_segment(
            loop >= 4 ? SegmentKind::PathCircuitReverse : SegmentKind::Raw, t, seg_begin, seg_end);
        s.path_length = reach;
        s.circuit_length = loop;
        if (loop >= 4) {
            for (std::size_t m = k; m < j; ++m) {
                const Position before = m == k ? t[j - 1] : t[m - 1];
                if (turns(before, t[m], t[m + 1])) s.corners.push_back(t[m]);
            }
        }
        out.push_back(std::move(s));
        start = seg_end;
    }
    return out;
}

} // namespace rushhour::unit
