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

#include <atomic>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "rushhour/unit/unit_state.hpp"

namespace rushhour::unit {

/// Visited set over the 2^(wh-2) justsolved states of one exit row.
/// test_and_set is an atomic fetch-or, so workers may share one array.
class JustSolvedBits {
public:
    explicit JustSolvedBits(std::uint64_t bits);

    std::uint64_t size() const { return bits_; }
    std::uint64_t bytes() const { return words_.size() * sizeof(std::uint64_t); }

    bool test(std::uint64_t i) const {
        return (std::atomic_ref<std::uint64_t>(words_[i >> 6]).load(std::memory_order_relaxed) >>
                (i & 63)) & 1;
    }
    /// Sets bit i; returns its previous value.
    bool test_and_set(std::uint64_t i) {
        const std::uint64_t bit = std::uint64_t{1} << (i & 63);
        return std::atomic_ref<std::uint64_t>(words_[i >> 6]).fetch_or(bit, std::memory_order_acq_rel) &
               bit;
    }
    std::uint64_t count() const;

private:
    std::uint64_t bits_;
    mutable std::vector<std::uint64_t> words_;
};

inline constexpr int kMaxSearchCells = 36;
inline constexpr std::uint64_t kDefaultBudgetBytes = std::uint64_t{4} << 30;

struct SearchConfig {
    Dims dims;
    int exit_row = 0;
    std::uint64_t budget_bytes = kDefaultBudgetBytes;
    std::size_t component_cap = std::numeric_limits<std::size_t>::max();
    int workers = 1;
};

/// Bytes of the justsolved bit array for `d`: 2^(wh-2) bits.
std::uint64_t justsolved_bytes(Dims d);

/// Throws BudgetExceeded / std::invalid_argument when `cfg` cannot run.
void check_config(const SearchConfig& cfg);

struct ComponentReport {
    UnitState seed;               // the component's justsolved state of least index
    std::uint64_t size = 0;       // unsolved + justsolved states
    std::uint64_t justsolved = 0;
    std::uint32_t max_distance = 0;
    UnitState witness;            // least packed code at max_distance
    bool partial = false;         // component_cap was hit
};

/// Distance field of one component, indexed like `codes`.
struct ComponentField {
    std::vector<std::uint64_t> codes;
    std::vector<std::uint32_t> distance;
    std::vector<std::uint64_t> justsolved;  // justsolved bit indices, unsorted
    bool partial = false;
};

/// Discovers one component of the pruned graph (solved-but-not-justsolved
/// states removed) and runs a multi-source BFS from all of its justsolved
/// states. Buffers are reused across calls; one explorer per worker.
class ComponentExplorer {
public:
    ComponentExplorer(Dims d, int exit_row,
                      std::size_t cap = std::numeric_limits<std::size_t>::max());

    const UnitSpace& space() const { return space_; }

    /// `start` may be any unfiltered, unsolved or justsolved state.
    const ComponentField& explore(const UnitState& start);

private:
    static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

    UnitSpace space_;
    std::size_t cap_;
    absl::flat_hash_map<std::uint64_t, std::uint32_t> index_;
    std::vector<std::uint32_t> adjacency_;  // four slots per state
    std::vector<std::uint32_t> queue_;
    ComponentField field_;
};

/// Reports every solvable component of cfg's exit row exactly once, in an
/// order that may depend on scheduling. Report contents do not.
struct SearchSummary {
    std::uint32_t worst = 0;
    std::optional<UnitState> witness;
    std::uint64_t components = 0;
    std::uint64_t states = 0;
    std::uint64_t justsolved_marked = 0;
    std::uint64_t partial_components = 0;
};

SearchSummary search_components(const SearchConfig& cfg,
                                const std::function<void(const ComponentReport&)>& sink = {});

struct ExitRowResult {
    int exit_row = 0;
    SearchSummary summary;
};

struct TableReport {
    Dims dims;
    std::uint32_t worst = 0;
    int worst_exit_row = -1;
    std::optional<UnitState> witness;
    std::vector<ExitRowResult> per_exit;
};

struct WorstCaseOptions {
    std::uint64_t budget_bytes = kDefaultBudgetBytes;
    std::size_t component_cap = std::numeric_limits<std::size_t>::max();
    int workers = 1;
    std::vector<int> exit_rows;  // empty: every row
};

/// Worst distance-to-solve over the chosen exit rows. Ties go to the lower
/// exit row, then the smaller packed code.
TableReport worst_case(Dims d, const WorstCaseOptions& options = {});

/// States along a shortest solution from `from`, ending in a justsolved state.
/// Empty when `from` cannot reach one.
std::vector<UnitState> solution_path(const UnitState& from, int exit_row);

} // namespace rushhour::unit
