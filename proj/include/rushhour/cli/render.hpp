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
#include <string>
#include <vector>

#include "rushhour/cli/trace.hpp"
#include "rushhour/unit/trajectory.hpp"

namespace rushhour::cli {

enum class TextLayout { Row, Stacked };

/// Diagrams side by side with their labels right-aligned above, wrapped to
/// `width` columns, or one under the other.
std::string render_text(const std::vector<Frame>& frames, TextLayout layout = TextLayout::Row,
                        std::size_t width = 100);

/// Empty-cell positions of frames that have exactly one empty cell; empty
/// when any frame has another count.
std::vector<Position> frame_trajectory(const std::vector<Frame>& frames);

struct SvgOptions {
    int cell = 24;
    bool group_by_segments = false;
};

/// One panel per frame, or per trajectory segment when grouping. The empty
/// cell's path is a thick polyline: the whole path on the first panel, or the
/// segment's own path on each segment panel.
std::string render_svg(const std::vector<Frame>& frames, const SvgOptions& options = {});

std::string describe_segments(const std::vector<unit::TrajectorySegment>& segments);

} // namespace rushhour::cli
