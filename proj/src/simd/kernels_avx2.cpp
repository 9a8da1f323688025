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

#include <immintrin.h>

#include <bit>

#include "rushhour/simd/bitset_kernels.hpp"

namespace rushhour::simd {

namespace {

// Per-byte popcount via nibble lookup, summed into four 64-bit lanes.
inline __m256i popcount_lanes(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_shuffle_epi8(lut, _mm256_and_si256(v, low));
    const __m256i hi = _mm256_shuffle_epi8(lut, _mm256_and_si256(_mm256_srli_epi16(v, 4), low));
    return _mm256_sad_epu8(_mm256_add_epi8(lo, hi), _mm256_setzero_si256());
}

inline std::uint64_t horizontal_sum(__m256i acc) {
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

void or_masked_shift(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                     std::uint64_t pattern, unsigned right, unsigned left) {
    const std::size_t n = src.size();
    const __m256i pat = _mm256_set1_epi64x(static_cast<long long>(pattern));
    const __m128i rs = _mm_cvtsi32_si128(static_cast<int>(right));
    const __m128i ls = _mm_cvtsi32_si128(static_cast<int>(left));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
        const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
        const __m256i v = _mm256_sll_epi64(_mm256_srl_epi64(_mm256_and_si256(s, pat), rs), ls);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), _mm256_or_si256(d, v));
    }
    for (; i < n; ++i) dst[i] |= ((src[i] & pattern) >> right) << left;
}

std::uint64_t absorb(std::span<std::uint64_t> next, std::span<std::uint64_t> seen) {
    const std::size_t n = next.size();
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        auto* np = reinterpret_cast<__m256i*>(next.data() + i);
        auto* sp = reinterpret_cast<__m256i*>(seen.data() + i);
        const __m256i s = _mm256_loadu_si256(sp);
        const __m256i fresh = _mm256_andnot_si256(s, _mm256_loadu_si256(np));
        _mm256_storeu_si256(np, fresh);
        _mm256_storeu_si256(sp, _mm256_or_si256(s, fresh));
        acc = _mm256_add_epi64(acc, popcount_lanes(fresh));
    }
    std::uint64_t count = horizontal_sum(acc);
    for (; i < n; ++i) {
        const std::uint64_t fresh = next[i] & ~seen[i];
        next[i] = fresh;
        seen[i] |= fresh;
        count += static_cast<std::uint64_t>(std::popcount(fresh));
    }
    return count;
}

std::uint64_t popcount(std::span<const std::uint64_t> words) {
    const std::size_t n = words.size();
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_epi64(
            acc, popcount_lanes(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(words.data() + i))));
    std::uint64_t count = horizontal_sum(acc);
    for (; i < n; ++i) count += static_cast<std::uint64_t>(std::popcount(words[i]));
    return count;
}

} // namespace

const BitsetKernels& avx2_kernels_impl() {
    static constexpr BitsetKernels k{Isa::Avx2, &or_masked_shift, &absorb, &popcount};
    return k;
}

} // namespace rushhour::simd
