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

#include "rushhour/unit/component_search.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "rushhour/simd/bitset_kernels.hpp"

namespace rushhour::unit {

JustSolvedBits::JustSolvedBits(std::uint64_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

std::uint64_t JustSolvedBits::count() const {
    return simd::best_kernels().popcount(words_);
}

std::uint64_t justsolved_bytes(Dims d) {
    const int n = d.cells();
    if (n < 2) return 0;
    if (n - 2 >= 64) return std::numeric_limits<std::uint64_t>::max();
    return ((std::uint64_t{1} << (n - 2)) + 63) / 64 * sizeof(std::uint64_t);
}

void check_config(const SearchConfig& cfg) {
    const Dims d = cfg.dims;
    if (d.width < 2 || d.height < 1)
        throw std::invalid_argument("component search needs width >= 2 and height >= 1");
    if (d.cells() > kMaxSearchCells)
        throw std::invalid_argument("component search supports at most " +
                                    std::to_string(kMaxSearchCells) + " cells");
    if (cfg.exit_row < 0 || cfg.exit_row >= d.height)
        throw std::out_of_range("exit row out of range");
    if (cfg.workers < 1) throw std::invalid_argument("worker count must be positive");
    const std::uint64_t need = justsolved_bytes(d);
    if (need > cfg.budget_bytes)
        throw BudgetExceeded("justsolved bit array needs 2^" + std::to_string(d.cells() - 2) +
                                 " bits = " + std::to_string(need) + " bytes, budget is " +
                                 std::to_string(cfg.budget_bytes) + " bytes",
                             need, cfg.budget_bytes);
}

ComponentExplorer::ComponentExplorer(Dims d, int exit_row, std::size_t cap)
    : space_(d, exit_row), cap_(std::max<std::size_t>(cap, 1)) {}

const ComponentField& ComponentExplorer::explore(const UnitState& start) {
    index_.clear();
    adjacency_.clear();
    field_.codes.clear();
    field_.distance.clear();
    field_.justsolved.clear();
    field_.partial = false;

    std::vector<std::uint32_t> sources;
    const std::uint64_t start_code = space_.code(start.empty_index, start.cell_mask());
    index_.emplace(start_code, 0);
    field_.codes.push_back(start_code);

    for (std::size_t i = 0; i < field_.codes.size(); ++i) {
        const std::uint64_t code = field_.codes[i];
        const int empty = space_.empty_of(code);
        const std::uint64_t mask = space_.mask_of(code);
        if (space_.justsolved(empty, mask)) {
            sources.push_back(static_cast<std::uint32_t>(i));
            field_.justsolved.push_back(space_.justsolved_index(mask));
        }
        adjacency_.insert(adjacency_.end(), 4, kNone);
        int slot = 0;
        space_.for_each_move(empty, mask, [&](int q, std::uint64_t next) {
            if (space_.solved(q, next) && !space_.justsolved(q, next)) return;
            const std::uint64_t c = space_.code(q, next);
            auto it = index_.find(c);
            std::uint32_t idx;
            if (it != index_.end()) {
                idx = it->second;
            } else {
                if (field_.codes.size() >= cap_) {
                    field_.partial = true;
                    return;
                }
                idx = static_cast<std::uint32_t>(field_.codes.size());
                index_.emplace(c, idx);
                field_.codes.push_back(c);
            }
            adjacency_[4 * i + static_cast<std::size_t>(slot++)] = idx;
        });
    }

    // Multi-source BFS from every justsolved member.
    field_.distance.assign(field_.codes.size(), kNone);
    queue_.clear();
    for (std::uint32_t s : sources) {
        field_.distance[s] = 0;
        queue_.push_back(s);
    }
    for (std::size_t head = 0; head < queue_.size(); ++head) {
        const std::uint32_t u = queue_[head];
        const std::uint32_t du = field_.distance[u];
        for (std::size_t k = 0; k < 4; ++k) {
            const std::uint32_t v = adjacency_[4 * u + k];
            if (v == kNone) break;
            if (field_.distance[v] == kNone) {
                field_.distance[v] = du + 1;
                queue_.push_back(v);
            }
        }
    }
    return field_;
}

namespace {

void merge(SearchSummary& into, const ComponentReport& r) {
    ++into.components;
    into.states += r.size;
    if (r.partial) ++into.partial_components;
    if (!into.witness || r.max_distance > into.worst ||
        (r.max_distance == into.worst && r.witness.code() < into.witness->code())) {
        into.worst = r.max_distance;
        into.witness = r.witness;
    }
}

ComponentReport summarize(const ComponentField& f, const UnitSpace& space, std::uint64_t seed_index) {
    ComponentReport r;
    const Dims d = space.dims();
    r.seed = justsolved_state(d, space.exit_row(), seed_index);
    r.size = f.codes.size();
    r.justsolved = f.justsolved.size();
    r.partial = f.partial;
    std::uint64_t best_code = 0;
    bool have = false;
    for (std::size_t i = 0; i < f.codes.size(); ++i) {
        const std::uint32_t dist = f.distance[i];
        if (dist == std::numeric_limits<std::uint32_t>::max()) continue;
        if (!have || dist > r.max_distance || (dist == r.max_distance && f.codes[i] < best_code)) {
            r.max_distance = dist;
            best_code = f.codes[i];
            have = true;
        }
    }
    r.witness = UnitState::from_code(d, best_code);
    return r;
}

} // namespace

SearchSummary search_components(const SearchConfig& cfg,
                                const std::function<void(const ComponentReport&)>& sink) {
    check_config(cfg);
    const Dims d = cfg.dims;
    const std::uint64_t total = std::uint64_t{1} << (d.cells() - 2);
    JustSolvedBits bits(total);
    std::atomic<std::uint64_t> next_chunk{0};
    constexpr std::uint64_t kChunk = 1024;
    std::mutex mu;
    SearchSummary summary;

    auto work = [&] {
        ComponentExplorer explorer(d, cfg.exit_row, cfg.component_cap);
        SearchSummary local;
        while (true) {
            const std::uint64_t begin = next_chunk.fetch_add(kChunk);
            if (begin >= total) break;
            const std::uint64_t end = std::min(total, begin + kChunk);
            for (std::uint64_t idx = begin; idx < end; ++idx) {
                if (bits.test(idx)) continue;
                const ComponentField& f = explorer.explore(justsolved_state(d, cfg.exit_row, idx));
                // The component belongs to whichever worker sets its least justsolved bit.
                const std::uint64_t least = *std::min_element(f.justsolved.begin(), f.justsolved.end());
                bool owner = false;
                for (std::uint64_t j : f.justsolved) {
                    const bool was = bits.test_and_set(j);
                    if (j == least) owner = !was;
                }
                if (!owner) continue;
                const ComponentReport r = summarize(f, explorer.space(), least);
                merge(local, r);
                if (sink) {
                    std::lock_guard lock(mu);
                    sink(r);
                }
            }
        }
        std::lock_guard lock(mu);
        summary.components += local.components;
        summary.states += local.states;
        summary.partial_components += local.partial_components;
        if (local.witness &&
            (!summary.witness || local.worst > summary.worst ||
             (local.worst == summary.worst && local.witness->code() < summary.witness->code()))) {
            summary.worst = local.worst;
            summary.witness = local.witness;
        }
    };

    if (cfg.workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (int i = 0; i < cfg.workers; ++i) pool.emplace_back(work);
    }
    summary.justsolved_marked = bits.count();
    return summary;
}

TableReport worst_case(Dims d, const WorstCaseOptions& options) {
    TableReport report;
    report.dims = d;
    std::vector<int> rows = options.exit_rows;
    if (rows.empty())
        for (int e = 0; e < d.height; ++e) rows.push_back(e);
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    for (int e : rows) {
        SearchConfig cfg{d, e, options.budget_bytes, options.component_cap, options.workers};
        ExitRowResult row{e, search_components(cfg)};
        if (row.summary.witness && (report.worst_exit_row < 0 || row.summary.worst > report.worst)) {
            report.worst = row.summary.worst;
            report.worst_exit_row = e;
            report.witness = row.summary.witness;
        }
        report.per_exit.push_back(std::move(row));
    }
    return report;
}

std::vector<UnitState> solution_path(const UnitState& from, int exit_row) {
    const UnitSpace space(from.dims, exit_row);
    const std::uint64_t start = from.code();
    {
        const std::uint64_t mask = from.cell_mask();
        if (space.solved(from.empty_index, mask)) return {from};
    }
    absl::flat_hash_map<std::uint64_t, std::uint64_t> parent;
    parent.emplace(start, start);
    std::deque<std::uint64_t> queue{start};
    while (!queue.empty()) {
        const std::uint64_t code = queue.front();
        queue.pop_front();
        const int empty = space.empty_of(code);
        const std::uint64_t mask = space.mask_of(code);
        std::optional<std::uint64_t> goal;
        space.for_each_move(empty, mask, [&](int q, std::uint64_t next) {
            if (goal) return;
            const std::uint64_t c = space.code(q, next);
            if (!parent.emplace(c, code).second) return;
            if (space.solved(q, next)) goal = c;
            else queue.push_back(c);
        });
        if (goal) {
            std::vector<UnitState> path;
            for (std::uint64_t c = *goal;; c = parent[c]) {
                path.push_back(UnitState::from_code(from.dims, c));
                if (c == start) break;
            }
            std::reverse(path.begin(), path.end());
            return path;
        }
    }
    return {};
}

} // namespace rushhour::unit
