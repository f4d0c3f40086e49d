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

#ifndef QTRD_RANDOM_GRAPHS_HPP
#define QTRD_RANDOM_GRAPHS_HPP

#include <cstdint>

#include "qtrd/graph.hpp"

namespace qtrd {

// G(n,p) with a pinned sampling procedure so that identical seeds give
// byte-identical graphs on every platform and release: the engine is
// std::mt19937_64 seeded with `seed`; vertex pairs are visited in
// lexicographic order (0,1),(0,2),...,(n-2,n-1); a pair becomes an edge iff
// (engine() >> 11) * 2^-53 < p. Do not change any of this.
Graph random_gnp(int n, double p, std::uint64_t seed);

/// Seed for the i-th graph of a corpus drawn from a base seed.
inline std::uint64_t corpus_seed(std::uint64_t base_seed, std::uint64_t index) {
    return base_seed + index;  // wraparound intended
}

}  // namespace qtrd

#endif  // QTRD_RANDOM_GRAPHS_HPP
