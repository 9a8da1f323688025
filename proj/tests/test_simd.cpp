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

#include <random>
#include <vector>

#include "doctest.h"
#include "rushhour/simd/bitset_kernels.hpp"
#include "rushhour/unit/dense_search.hpp"

using namespace rushhour;
using namespace rushhour::simd;

namespace {

std::vector<std::uint64_t> random_words(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::uint64_t> v(n);
    for (auto& x : v) x = rng();
    return v;
}

} // namespace

TEST_CASE("best kernels respect RUSHHOUR_SIMD") {
    const BitsetKernels& best = best_kernels();
    if (avx2_kernels() == nullptr) CHECK(best.isa == Isa::Scalar);
    CHECK(std::string(to_string(Isa::Scalar)) == "scalar");
}

TEST_CASE("AVX2 kernels are bit-identical to the scalar reference") {
    const BitsetKernels* avx = avx2_kernels();
    if (avx == nullptr) {
        MESSAGE("AVX2 kernels unavailable on this build or CPU; equivalence not exercised");
        return;
    }
    const BitsetKernels& ref = scalar_kernels();
    std::mt19937_64 rng(3);
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 9u, 31u, 64u, 100u, 1000u}) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto src = random_words(rng, n);
            const auto base = random_words(rng, n);
            const std::uint64_t pattern = rng();
            const unsigned right = static_cast<unsigned>(rng() % 64);
            const unsigned left = static_cast<unsigned>(rng() % 64);
            auto a = base, b = base;
            ref.or_masked_shift(a, src, pattern, right, left);
            avx->or_masked_shift(b, src, pattern, right, left);
            CHECK(a == b);

            auto na = random_words(rng, n), sa = random_words(rng, n);
            auto nb = na, sb = sa;
            const std::uint64_t ca = ref.absorb(na, sa);
            const std::uint64_t cb = avx->absorb(nb, sb);
            CHECK(ca == cb);
            CHECK(na == nb);
            CHECK(sa == sb);

            CHECK(ref.popcount(src) == avx->popcount(src));
        }
    }
}

TEST_CASE("scalar kernels follow their definitions") {
    const BitsetKernels& k = scalar_kernels();
    std::vector<std::uint64_t> dst{0, 1}, src{0xF0, 0xFF00};
    k.or_masked_shift(dst, src, 0xFFFF, 4, 1);
    CHECK(dst[0] == 0x1E);
    CHECK(dst[1] == (1u | 0x1FE0u));
    std::vector<std::uint64_t> next{0b1111, 0b1}, seen{0b0101, 0b1};
    CHECK(k.absorb(next, seen) == 2);
    CHECK(next[0] == 0b1010);
    CHECK(next[1] == 0);
    CHECK(seen[0] == 0b1111);
}

TEST_CASE("dense search is identical under both kernel sets") {
    const BitsetKernels* avx = avx2_kernels();
    if (avx == nullptr) return;
    for (auto [w, h] : {std::pair{3, 3}, std::pair{4, 4}, std::pair{5, 3}, std::pair{2, 7}})
        for (int e = 0; e < h; ++e) {
            const auto a = unit::dense_search({w, h}, e, scalar_kernels());
            const auto b = unit::dense_search({w, h}, e, *avx);
            CHECK(a.worst == b.worst);
            CHECK(a.witness == b.witness);
            CHECK(a.level_counts == b.level_counts);
            CHECK(b.isa == Isa::Avx2);
        }
}
