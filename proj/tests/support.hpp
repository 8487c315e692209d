/*
 * Copyright 2026 The cc2d Authors
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

// Shared helpers for the unit and acceptance tests: fixed fields and small
// seeded generators for property checks.

#include <cstdint>
#include <random>
#include <vector>

#include "cc2d/code2d.hpp"
#include "cc2d/gf.hpp"
#include "cc2d/poly.hpp"

namespace cc2d::testing {

inline constexpr std::uint64_t kSeed = 20261016;

// Prime fields plus F_8 = F_2[t]/(t^3+t+1), F_9 = F_3[t]/(t^2+1),
// F_16 = F_2[t]/(t^4+t+1) and F_25 = F_5[t]/(t^2-2).
inline std::vector<Field> sample_fields() {
    return {FieldCtx::create(2),        FieldCtx::create(3),
            FieldCtx::create(5),        FieldCtx::create(7),
            FieldCtx::create(11),       FieldCtx::create(13),
            FieldCtx::create(2, 3, std::vector<std::int64_t>{1, 1, 0, 1}),
            FieldCtx::create(3, 2, std::vector<std::int64_t>{1, 0, 1}),
            FieldCtx::create(2, 4, std::vector<std::int64_t>{1, 1, 0, 0, 1}),
            FieldCtx::create(5, 2, std::vector<std::int64_t>{-2, 0, 1})};
}

inline Field f9() { return FieldCtx::create(3, 2, std::vector<std::int64_t>{1, 0, 1}); }

inline Elem random_elem(const Field& f, std::mt19937_64& rng) {
    return static_cast<Elem>(std::uniform_int_distribution<std::uint32_t>(0, f->q() - 1)(rng));
}

inline Elem random_nonzero(const Field& f, std::mt19937_64& rng) {
    return static_cast<Elem>(std::uniform_int_distribution<std::uint32_t>(1, f->q() - 1)(rng));
}

inline Poly random_poly(const Field& f, std::size_t max_degree, std::mt19937_64& rng) {
    const std::size_t deg = std::uniform_int_distribution<std::size_t>(0, max_degree)(rng);
    std::vector<Elem> c(deg + 1);
    for (auto& e : c) e = random_elem(f, rng);
    return Poly(f, std::move(c));
}

inline RingElement2D random_ring_element(const Ambient& a, std::mt19937_64& rng, double density = 1.0) {
    RingElement2D e(a);
    std::bernoulli_distribution keep(density);
    for (std::size_t i = 0; i < a.s; ++i)
        for (std::size_t j = 0; j < a.l; ++j)
            if (keep(rng)) e(i, j) = random_elem(a.field, rng);
    return e;
}

}  // namespace cc2d::testing
