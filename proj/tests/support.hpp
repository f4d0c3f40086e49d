// Copyright 2026 The qtrd authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QTRD_TESTS_SUPPORT_HPP
#define QTRD_TESTS_SUPPORT_HPP

#include <numeric>
#include <random>

#include "qtrd/graph.hpp"
#include "qtrd/labeling.hpp"

namespace qtrd::testing {

inline RomanLabeling random_labeling(int n, std::mt19937_64& rng) {
    std::vector<std::uint8_t> values(static_cast<std::size_t>(n));
    for (auto& v : values) v = static_cast<std::uint8_t>(rng() % 3);
    return RomanLabeling(std::move(values));
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

inline RomanLabeling permute_labeling(const RomanLabeling& f,
                                      const std::vector<Vertex>& perm) {
    RomanLabeling out = RomanLabeling::uniform(f.size(), 0);
    for (int v = 0; v < f.size(); ++v) out.values[perm[v]] = f.values[v];
    return out;
}

}  // namespace qtrd::testing

#endif  // QTRD_TESTS_SUPPORT_HPP
