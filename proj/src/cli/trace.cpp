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

#include "rushhour/cli/trace.hpp"

#include <sstream>

namespace rushhour::cli {

std::vector<Frame> parse_trace(std::string_view text) {
    std::string header;  // '%' lines shared by all frames
    std::vector<std::pair<std::string, std::string>> blocks;
    std::vector<int> first_line;
    std::istringstream in{std::string(text)};
    int line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        const std::string t = line.substr(start);
        if (t[0] == '@') {
            std::string label = t.substr(1);
            const auto b = label.find_first_not_of(" \t");
            label = b == std::string::npos ? "" : label.substr(b);
            while (!label.empty() && (label.back() == ' ' || label.back() == '\r')) label.pop_back();
            blocks.emplace_back(label, "");
            first_line.push_back(line_no);
        } else if (blocks.empty()) {
            if (t[0] == '%') header += t + "\n";
        } else {
            blocks.back().second += t + "\n";
        }
    }
    std::vector<Frame> frames;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        try {
            frames.push_back({blocks[i].first, core::parse_board(header + blocks[i].second)});
        } catch (const ParseError& e) {
            throw ParseError(first_line[i], "frame '" + blocks[i].first + "': " + e.what());
        }
    }
    if (frames.empty()) throw ParseError(0, "trace has no '@' frames");
    return frames;
}

std::string format_trace(const std::vector<Frame>& frames) {
    std::string out;
    if (!frames.empty()) {
        const core::Board& b = frames.front().board;
        if (b.exit() != core::ExitSpec{b.target().anchor.row, core::ExitSide::Left})
            out += "% exit: row " + std::to_string(b.exit().row) +
                   (b.exit().side == core::ExitSide::Left ? " left\n" : " right\n");
    }
    for (std::size_t i = 0; i < frames.size(); ++i) {
        if (i) out += "\n";
        out += "@ " + frames[i].label + "\n" + frames[i].board.key() + "\n";
    }
    return out;
}

std::vector<Frame> solution_frames(const core::Board& start, const std::vector<core::Move>& moves) {
    const auto boards = core::replay(start, moves);
    std::vector<Frame> frames;
    for (std::size_t i = 0; i < boards.size(); ++i)
        frames.push_back({std::to_string(moves.size() - i), boards[i]});
    return frames;
}

} // namespace rushhour::cli
