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

#include "rushhour/cli/render.hpp"

#include <algorithm>
#include <sstream>

namespace rushhour::cli {

namespace {

std::vector<std::string> rows_of(const core::Board& b) {
    std::vector<std::string> rows;
    std::istringstream in(b.key());
    for (std::string line; std::getline(in, line);) rows.push_back(line);
    return rows;
}

std::string pad_left(const std::string& s, std::size_t w) {
    return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

void strip_trailing(std::string& line) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
}

} // namespace

std::string render_text(const std::vector<Frame>& frames, TextLayout layout, std::size_t width) {
    std::string out;
    if (layout == TextLayout::Stacked) {
        for (std::size_t i = 0; i < frames.size(); ++i) {
            if (i) out += "\n";
            out += frames[i].label + "\n" + frames[i].board.key() + "\n";
        }
        return out;
    }
    std::size_t i = 0;
    while (i < frames.size()) {
        // Take as many frames as fit in `width`, at least one.
        std::size_t j = i, used = 0;
        while (j < frames.size()) {
            const std::size_t w = std::max<std::size_t>(frames[j].board.width(), frames[j].label.size());
            const std::size_t need = used ? used + 2 + w : w;
            if (used && need > width) break;
            used = need;
            ++j;
        }
        int height = 0;
        for (std::size_t k = i; k < j; ++k) height = std::max(height, frames[k].board.height());
        std::vector<std::string> lines(static_cast<std::size_t>(height) + 1);
        for (std::size_t k = i; k < j; ++k) {
            const std::size_t w = std::max<std::size_t>(frames[k].board.width(), frames[k].label.size());
            const std::string sep = k == i ? "" : "  ";
            lines[0] += sep + pad_left(frames[k].label, w);
            const auto rows = rows_of(frames[k].board);
            for (int r = 0; r < height; ++r) {
                std::string cell = r < static_cast<int>(rows.size()) ? rows[static_cast<std::size_t>(r)] : "";
                lines[static_cast<std::size_t>(r) + 1] += sep + cell + std::string(w - cell.size(), ' ');
            }
        }
        if (!out.empty()) out += "\n";
        for (std::string& l : lines) {
            strip_trailing(l);
            out += l + "\n";
        }
        i = j;
    }
    return out;
}

std::vector<Position> frame_trajectory(const std::vector<Frame>& frames) {
    std::vector<Position> t;
    for (const Frame& f : frames) {
        const auto empty = f.board.empty_cells();
        if (empty.size() != 1) return {};
        t.push_back(empty[0]);
    }
    return t;
}

namespace {

struct Panel {
    std::string label;
    const core::Board* board;
    std::vector<Position> path;
};

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

void draw_panel(std::ostringstream& svg, const Panel& p, double x, double y, int cell) {
    const core::Board& b = *p.board;
    svg << "<g class=\"frame\" transform=\"translate(" << x << "," << y << ")\">\n";
    svg << "<text x=\"0\" y=\"-6\" font-family=\"monospace\" font-size=\"" << cell / 2 << "\">"
        << xml_escape(p.label) << "</text>\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << b.width() * cell << "\" height=\"" << b.height() * cell
        << "\" fill=\"#ffffff\" stroke=\"#000000\"/>\n";
    for (Position w : b.walls())
        svg << "<rect class=\"wall\" x=\"" << w.col * cell << "\" y=\"" << w.row * cell << "\" width=\""
            << cell << "\" height=\"" << cell << "\" fill=\"#000000\"/>\n";
    const int inset = std::max(2, cell / 8);
    for (const core::Car& c : b.cars()) {
        const bool horizontal = c.orientation == Orientation::Horizontal;
        const int cw = horizontal ? c.length * cell : cell;
        const int ch = horizontal ? cell : c.length * cell;
        // Unit cars are drawn as bars along their axis.
        const int thin = c.length == 1 ? cell / 3 : inset;
        const int x0 = c.anchor.col * cell + (horizontal ? inset : thin);
        const int y0 = c.anchor.row * cell + (horizontal ? thin : inset);
        svg << "<rect class=\"" << (c.is_target ? "car target" : "car") << "\" x=\"" << x0 << "\" y=\""
            << y0 << "\" width=\"" << cw - 2 * (horizontal ? inset : thin) << "\" height=\""
            << ch - 2 * (horizontal ? thin : inset) << "\" rx=\"2\" fill=\""
            << (c.is_target ? "#c0392b" : "#7f8c8d") << "\"/>\n";
    }
    if (p.path.size() > 1) {
        svg << "<polyline class=\"empty-path\" fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\""
            << std::max(3, cell / 4) << "\" stroke-linejoin=\"round\" points=\"";
        for (std::size_t i = 0; i < p.path.size(); ++i)
            svg << (i ? " " : "") << p.path[i].col * cell + cell / 2 << "," << p.path[i].row * cell + cell / 2;
        svg << "\"/>\n";
    }
    svg << "</g>\n";
}

} // namespace

std::string render_svg(const std::vector<Frame>& frames, const SvgOptions& options) {
    const int cell = options.cell;
    const auto trajectory = frame_trajectory(frames);
    std::vector<Panel> panels;
    if (options.group_by_segments && !trajectory.empty() && frames.size() > 1) {
        for (const unit::TrajectorySegment& s : unit::analyze_trajectory(trajectory)) {
            panels.push_back({frames[s.begin].label + ".." + frames[s.end].label + " " + to_string(s.kind),
                              &frames[s.begin].board, s.cells});
        }
        panels.push_back({frames.back().label, &frames.back().board, {}});
    } else {
        for (std::size_t i = 0; i < frames.size(); ++i)
            panels.push_back({frames[i].label, &frames[i].board, i == 0 ? trajectory : std::vector<Position>{}});
    }

    int max_w = 1, max_h = 1;
    for (const Frame& f : frames) {
        max_w = std::max(max_w, f.board.width());
        max_h = std::max(max_h, f.board.height());
    }
    const int per_row = 8;
    const double pw = max_w * cell + cell, ph = max_h * cell + cell * 1.5;
    const std::size_t rows = (panels.size() + per_row - 1) / per_row;
    const std::size_t cols = std::min<std::size_t>(panels.size(), per_row);
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cols * pw + cell << "\" height=\""
        << rows * ph + cell << "\">\n";
    for (std::size_t i = 0; i < panels.size(); ++i)
        draw_panel(svg, panels[i], static_cast<double>(i % per_row) * pw + cell / 2.0,
                   static_cast<double>(i / per_row) * ph + cell, cell);
    svg << "</svg>\n";
    return svg.str();
}

std::string describe_segments(const std::vector<unit::TrajectorySegment>& segments) {
    std::ostringstream out;
    for (const unit::TrajectorySegment& s : segments) {
        out << s.begin << "-" << s.end << " " << to_string(s.kind);
        if (s.kind == unit::SegmentKind::PathCircuitReverse) {
            out << " path=" << s.path_length << " circuit=" << s.circuit_length << " corners=";
            for (std::size_t i = 0; i < s.corners.size(); ++i) out << (i ? " " : "") << to_string(s.corners[i]);
        }
        out << "\n";
    }
    return out.str();
}

} // namespace rushhour::cli
