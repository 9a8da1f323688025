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

// Test-only oracle: whole-graph BFS over explicitly materialized Unit Rush
// Hour states. States are plain grid strings ('|', '-', '.'); nothing here
// uses the packed encoding, the pruning or the component partitioning.

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace oracle {

struct NaiveUnitGraph {
    int width = 0;
    int height = 0;
    int exit_row = 0;
    // Distance to the nearest solved state, for every state that has a
    // horizontal car on the exit row and can reach a solved state.
    std::map<std::string, int> distance;
    int worst = 0;
};

inline std::vector<std::string> all_states(int w, int h) {
    const int n = w * h;
    std::vector<std::string> out;
    for (int empty = 0; empty < n; ++empty)
        for (long bits = 0; bits < (1L << (n - 1)); ++bits) {
            std::string s(static_cast<std::size_t>(n), '.');
            int k = 0;
            for (int c = 0; c < n; ++c) {
                if (c == empty) continue;
                s[static_cast<std::size_t>(c)] = ((bits >> k) & 1) ? '|' : '-';
                ++k;
            }
            out.push_back(s);
        }
    return out;
}

inline std::vector<std::string> neighbours(const std::string& s, int w, int h) {
    std::vector<std::string> out;
    const int e = static_cast<int>(s.find('.'));
    const int r = e / w, c = e % w;
    auto try_move = [&](int rr, int cc, char need) {
        if (rr < 0 || rr >= h || cc < 0 || cc >= w) return;
        const int q = rr * w + cc;
        if (s[static_cast<std::size_t>(q)] != need) return;
        std::string t = s;
        t[static_cast<std::size_t>(e)] = need;
        t[static_cast<std::size_t>(q)] = '.';
        out.push_back(t);
    };
    try_move(r, c - 1, '-');
    try_move(r, c + 1, '-');
    try_move(r - 1, c, '|');
    try_move(r + 1, c, '|');
    return out;
}

inline bool has_horizontal_on_row(const std::string& s, int w, int row) {
    for (int c = 0; c < w; ++c)
        if (s[static_cast<std::size_t>(row * w + c)] == '-') return true;
    return false;
}

// Solved: the car in column 0 of the exit row is horizontal.
inline bool solved(const std::string& s, int w, int row) {
    return s[static_cast<std::size_t>(row * w)] == '-';
}

inline NaiveUnitGraph naive_unit_bfs(int w, int h, int exit_row) {
    NaiveUnitGraph g{w, h, exit_row, {}, 0};
    std::deque<std::string> queue;
    for (const std::string& s : all_states(w, h))
        if (solved(s, w, exit_row)) {
            g.distance[s] = 0;
            queue.push_back(s);
        }
    while (!queue.empty()) {
        const std::string s = queue.front();
        queue.pop_front();
        const int d = g.distance[s];
        g.worst = std::max(g.worst, d);
        for (const std::string& t : neighbours(s, w, h))
            if (g.distance.emplace(t, d + 1).second) queue.push_back(t);
    }
    return g;
}

// Grid string of a state as text rows, for building boards.
inline std::string as_board_text(const std::string& s, int w, int exit_row) {
    std::string out;
    bool marked = false;
    for (int r = 0; r * w < static_cast<int>(s.size()); ++r) {
        for (int c = 0; c < w; ++c) {
            char ch = s[static_cast<std::size_t>(r * w + c)];
            if (r == exit_row && ch == '-' && !marked) {
                ch = '=';
                marked = true;
            }
            out.push_back(ch);
        }
        out.push_back('\n');
    }
    return out;
}

} // namespace oracle
