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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rushhour/core/board.hpp"

namespace rushhour::cli {

struct Frame {
    std::string label;
    core::Board board;
};

/// Trace text: optional '%' lines (an exit line applies to every frame), then
/// frames, each an "@ <label>" line followed by board rows. Other lines before
/// the first frame, such as "length: 12", are ignored.
std::vector<Frame> parse_trace(std::string_view text);

std::string format_trace(const std::vector<Frame>& frames);

/// Frames for a move sequence, labelled with the remaining move count.
std::vector<Frame> solution_frames(const core::Board& start, const std::vector<core::Move>& moves);

} // namespace rushhour::cli
