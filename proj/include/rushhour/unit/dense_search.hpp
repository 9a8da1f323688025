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

#include <cstdint>
#include <limits>
#include <vector>

#include "rushhour/simd/bitset_kernels.hpp"
#include "rushhour/unit/unit_state.hpp"

namespace rushhour::unit {

/// Level-synchronous BFS over the whole state graph of one exit row, held as
/// one bitset of 2^(wh) cell masks per empty-cell position.
///
/// Every solved state (horizontal car in column 0 of the exit row) is a source.
/// This is a full-graph route that shares nothing with the component search
/// beyond the state definition, so the two cross-check each other.
struct DenseResult {
    Dims dims;
    int exit_row = 0;
    std::uint32_t worst = 0;
    UnitState witness;  // smallest packed code at the worst distance
    std::vector<std::uint64_t> level_counts;
    std::uint64_t reached = 0;
    simd::Isa isa = simd::Isa::Scalar;
};

/// Bytes held by the three bitsets (seen, frontier, next).
std::uint64_t dense_memory_bytes(Dims d);

/// Throws BudgetExceeded when dense_memory_bytes(d) > budget_bytes.
DenseResult dense_search(Dims d, int exit_row,
                         const simd::BitsetKernels& kernels = simd::best_kernels(),
                         std::uint64_t budget_bytes = std::numeric_limits<std::uint64_t>::max());

} // namespace rushhour::unit
