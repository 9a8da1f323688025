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
#include <cstdint>
#include <span>

// Word-parallel bitset kernels behind the dense state-space search.
//
// Every kernel has a portable scalar reference; an AVX2 variant is compiled on
// x86-64 and chosen at runtime when the CPU supports it. The variants must
// produce bit-identical results, which the equivalence tests check.

namespace rushhour::simd {

enum class Isa { Scalar, Avx2 };

const char* to_string(Isa isa);

struct BitsetKernels {
    Isa isa;

    // dst[i] |= ((src[i] & pattern) >> right) << left, for i < src.size().
    // dst must be at least as long as src; shifts are below 64.
    void (*or_masked_shift)(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                            std::uint64_t pattern, unsigned right, unsigned left);

    // next[i] &= ~seen[i]; seen[i] |= next[i]. Returns the popcount of the new next.
    std::uint64_t (*absorb)(std::span<std::uint64_t> next, std::span<std::uint64_t> seen);

    std::uint64_t (*popcount)(std::span<const std::uint64_t> words);
};

const BitsetKernels& scalar_kernels();

// nullptr when the AVX2 variant is not compiled in or the CPU lacks AVX2.
const BitsetKernels* avx2_kernels();

// The fastest supported variant. RUSHHOUR_SIMD=scalar forces the reference.
const BitsetKernels& best_kernels();

} // namespace rushhour::simd
