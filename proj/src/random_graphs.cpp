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

#include "qtrd/random_graphs.hpp"

#include <random>
#include <stdexcept>

namespace qtrd {

Graph random_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("negative order");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability outside [0,1]");
    std::mt19937_64 engine(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            double draw = static_cast<double>(engine() >> 11) * 0x1.0p-53;
            if (draw < p) edges.emplace_back(u, v);
        }
    return Graph(n, edges);
}

}  // namespace qtrd
