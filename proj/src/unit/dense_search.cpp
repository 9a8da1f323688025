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

#include "rushhour/unit/dense_search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace rushhour::unit {

namespace {

// Bits b of a word whose index bit c (c < 6) is clear.
constexpr std::array<std::uint64_t, 6> kClearPattern = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

std::size_t words_per_cell(int n) {
    return n >= 6 ? std::size_t{1} << (n - 6) : 1;
}

// Word-parallel image of one move family: empty cell p, car on q slides in.
struct Transition {
    std::uint64_t pattern;
    unsigned right;
    unsigned left;
    std::size_t select_bit;    // word-index bit that must equal select_value
    std::size_t select_value;
    std::size_t xor_words;     // destination word = source word ^ xor_words
};

Transition make_transition(int p, int q, bool vertical) {
    Transition t{};
    const std::size_t q_word = q >= 6 ? std::size_t{1} << (q - 6) : 0;
    const std::size_t p_word = p >= 6 ? std::size_t{1} << (p - 6) : 0;
    t.select_bit = q_word;
    if (!vertical) {
        // The car keeps orientation 0 and the empty cell's bit stays 0.
        t.pattern = q < 6 ? kClearPattern[static_cast<std::size_t>(q)] : ~std::uint64_t{0};
        t.select_value = 0;
        t.right = t.left = 0;
        t.xor_words = 0;
    } else {
        // Bit q set moves to bit p: index ^ (1<<q) ^ (1<<p).
        t.pattern = q < 6 ? ~kClearPattern[static_cast<std::size_t>(q)] : ~std::uint64_t{0};
        t.select_value = q_word;
        t.right = q < 6 ? 1u << q : 0;
        t.left = p < 6 ? 1u << p : 0;
        t.xor_words = q_word | p_word;
    }
    return t;
}

void apply(const simd::BitsetKernels& k, const Transition& t, std::span<const std::uint64_t> src,
           std::span<std::uint64_t> dst) {
    const std::size_t words = src.size();
    const std::size_t low = t.select_bit | t.xor_words;
    const std::size_t run = low ? (low & (~low + 1)) : words;
    for (std::size_t base = 0; base < words; base += run) {
        if ((base & t.select_bit) != t.select_value) continue;
        k.or_masked_shift(dst.subspan(base ^ t.xor_words, run), src.subspan(base, run), t.pattern,
                          t.right, t.left);
    }
}

} // namespace

std::uint64_t dense_memory_bytes(Dims d) {
    const int n = d.cells();
    if (n > 40) return std::numeric_limits<std::uint64_t>::max();
    return 3ULL * static_cast<std::uint64_t>(n) * words_per_cell(n) * sizeof(std::uint64_t);
}

DenseResult dense_search(Dims d, int exit_row, const simd::BitsetKernels& kernels,
                         std::uint64_t budget_bytes) {
    const int n = d.cells();
    if (d.width < 1 || d.height < 1) throw std::invalid_argument("dimensions must be positive");
    if (exit_row < 0 || exit_row >= d.height) throw std::out_of_range("exit row out of range");
    const std::uint64_t need = dense_memory_bytes(d);
    if (need > budget_bytes)
        throw BudgetExceeded("dense search needs " + std::to_string(need) + " bytes, budget is " +
                                 std::to_string(budget_bytes),
                             need, budget_bytes);

    const std::size_t W = words_per_cell(n);
    const std::uint64_t valid = n >= 6 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (1 << n)) - 1);
    std::vector<std::uint64_t> seen(static_cast<std::size_t>(n) * W, 0);
    std::vector<std::uint64_t> frontier(seen.size(), 0);
    std::vector<std::uint64_t> next(seen.size(), 0);
    auto slice = [W](std::vector<std::uint64_t>& v, int cell) {
        return std::span<std::uint64_t>(v).subspan(static_cast<std::size_t>(cell) * W, W);
    };

    const int target = d.cell({exit_row, 0});
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
    std::uint64_t level_total = 0;
    // Sources: empty cell p != target, bits p and target clear.
    for (int p = 0; p < n; ++p) {
        if (p == target) continue;
        auto f = slice(frontier, p);
        for (std::size_t w = 0; w < W; ++w) {
            std::uint64_t word = valid;
            bool drop = false;
            for (int c : {p, target}) {
                if (c < 6) word &= kClearPattern[static_cast<std::size_t>(c)];
                else if ((w >> (c - 6)) & 1) drop = true;
            }
            f[w] = drop ? 0 : word;
        }
        counts[static_cast<std::size_t>(p)] = kernels.absorb(f, slice(seen, p));
        level_total += counts[static_cast<std::size_t>(p)];
    }

    struct Edge {
        int q;
        Transition t;
    };
    std::vector<std::vector<Edge>> edges(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
        const Position pos = d.position(p);
        for (Direction dir : {Direction::Left, Direction::Right, Direction::Up, Direction::Down}) {
            const Position qp = step(pos, dir);
            if (qp.row < 0 || qp.row >= d.height || qp.col < 0 || qp.col >= d.width) continue;
            const int q = d.cell(qp);
            edges[static_cast<std::size_t>(p)].push_back(
                {q, make_transition(p, q, axis_of(dir) == Orientation::Vertical)});
        }
    }

    DenseResult result;
    result.dims = d;
    result.exit_row = exit_row;
    result.isa = kernels.isa;
    result.level_counts.push_back(level_total);
    result.reached = level_total;
    std::vector<std::uint64_t> last_counts = counts;

    while (true) {
        std::fill(next.begin(), next.end(), 0);
        for (int p = 0; p < n; ++p) {
            if (counts[static_cast<std::size_t>(p)] == 0) continue;
            const auto src = slice(frontier, p);
            for (const Edge& e : edges[static_cast<std::size_t>(p)])
                apply(kernels, e.t, src, slice(next, e.q));
        }
        level_total = 0;
        for (int q = 0; q < n; ++q) {
            counts[static_cast<std::size_t>(q)] = kernels.absorb(slice(next, q), slice(seen, q));
            level_total += counts[static_cast<std::size_t>(q)];
        }
        if (level_total == 0) break;
        result.level_counts.push_back(level_total);
        result.reached += level_total;
        frontier.swap(next);
        last_counts = counts;
    }

    result.worst = static_cast<std::uint32_t>(result.level_counts.size() - 1);
    // `frontier` still holds the deepest level.
    for (int p = 0; p < n; ++p) {
        if (last_counts[static_cast<std::size_t>(p)] == 0) continue;
        const auto f = slice(frontier, p);
        for (std::size_t w = 0; w < W; ++w)
            if (f[w]) {
                const std::uint64_t mask = w * 64 + static_cast<std::uint64_t>(std::countr_zero(f[w]));
                result.witness = UnitState::from_mask(d, p, mask);
                return result;
            }
    }
    return result;
}

} // namespace rushhour::unit
