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

#include <cstdlib>
#include <string_view>

#include "rushhour/simd/bitset_kernels.hpp"

namespace rushhour::simd {

#ifdef RUSHHOUR_HAVE_AVX2
const BitsetKernels& avx2_kernels_impl();
#endif

const char* to_string(Isa isa) {
    switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    }
    return "?";
}

const BitsetKernels* avx2_kernels() {
#ifdef RUSHHOUR_HAVE_AVX2
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
    if (supported) return &avx2_kernels_impl();
#endif
    return nullptr;
}

const BitsetKernels& best_kernels() {
    static const BitsetKernels* chosen = [] {
        const char* env = std::getenv("RUSHHOUR_SIMD");
        if (env && std::string_view(env) == "scalar") return &scalar_kernels();
        if (const BitsetKernels* k = avx2_kernels()) return k;
        return &scalar_kernels();
    }();
    return *chosen;
}

} // namespace rushhour::simd
