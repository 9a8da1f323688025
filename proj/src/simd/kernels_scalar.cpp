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

#include <bit>

#include "rushhour/simd/bitset_kernels.hpp"

namespace rushhour::simd {

namespace {

void or_masked_shift(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                     std::uint64_t pattern, unsigned right, unsigned left) {
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] |= ((src[i] & pattern) >> right) << left;
}

std::uint64_t absorb(std::span<std::uint64_t> next, std::span<std::uint64_t> seen) {
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < next.size(); ++i) {
        const std::uint64_t fresh = next[i] & ~seen[i];
        next[i] = fresh;
        seen[i] |= fresh;
        count += static_cast<std::uint64_t>(std::popcount(fresh));
    }
    return count;
}

std::uint64_t popcount(std::span<const std::uint64_t> words) {
    std::uint64_t count = 0;
    for (std::uint64_t w : words) count += static_cast<std::uint64_t>(std::popcount(w));
    return count;
}

} // namespace

const BitsetKernels& scalar_kernels() {
    static constexpr BitsetKernels k{Isa::Scalar, &or_masked_shift, &absorb, &popcount};
    return k;
}

} // namespace rushhour::simd
