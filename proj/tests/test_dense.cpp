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

#include "doctest.h"
#include "oracles/naive_unit_bfs.hpp"
#include "rushhour/unit/component_search.hpp"
#include "rushhour/unit/dense_search.hpp"

using namespace rushhour;
using namespace rushhour::unit;

TEST_CASE("dense search matches the naive oracle for wh <= 9") {
    for (int w = 2; w <= 9; ++w)
        for (int h = 1; w * h <= 9; ++h)
            for (int e = 0; e < h; ++e) {
                const auto g = oracle::naive_unit_bfs(w, h, e);
                const DenseResult r = dense_search({w, h}, e, simd::scalar_kernels());
                CHECK(r.worst == static_cast<std::uint32_t>(g.worst));
                CHECK(r.reached == g.distance.size());
                std::vector<std::uint64_t> levels(static_cast<std::size_t>(g.worst) + 1, 0);
                for (const auto& [s, d] : g.distance) ++levels[static_cast<std::size_t>(d)];
                CHECK(r.level_counts == levels);
            }
}

TEST_CASE("dense and component searches agree up to 16 cells") {
    for (int w = 2; w <= 8; ++w)
        for (int h = 1; w * h <= 16; ++h)
            for (int e = 0; e < h; ++e) {
                const Dims d{w, h};
                const DenseResult dense = dense_search(d, e);
                const SearchSummary comp = search_components({d, e});
                CAPTURE(w);
                CAPTURE(h);
                CAPTURE(e);
                CHECK(dense.worst == comp.worst);
                if (comp.worst > 0) {
                    REQUIRE(comp.witness);
                    CHECK(dense.witness.code() == comp.witness->code());
                }
            }
}

TEST_CASE("dense witness sits at the worst distance") {
    const DenseResult r = dense_search({4, 3}, 0);
    CHECK(r.worst == 21);
    CHECK(solution_path(r.witness, 0).size() == 22);
}

TEST_CASE("dense memory estimate and budget") {
    CHECK(dense_memory_bytes({4, 4}) == 3u * 16u * 1024u * 8u);
    CHECK_THROWS_AS(dense_search({4, 4}, 0, simd::best_kernels(), 1000), BudgetExceeded);
}
