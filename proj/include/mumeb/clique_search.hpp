// Copyright 2026 The mumeb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mumeb/sl2.hpp"

namespace mumeb {

/// Undirected simple graph on vertices 0..n-1 with adjacency bitsets.
class BitGraph {
   public:
    explicit BitGraph(std::size_t n);

    std::size_t size() const {
        return n_;
    }
    std::size_t words() const {
        return words_;
    }
    void add_edge(std::size_t u, std::size_t v);
    bool adjacent(std::size_t u, std::size_t v) const {
        return (row(u)[v >> 6] >> (v & 63)) & 1;
    }
    const std::uint64_t *row(std::size_t u) const {
        return bits_.data() + u * words_;
    }
    std::size_t degree(std::size_t u) const;

    /// Vertices in degeneracy order: each vertex has minimum degree in the
    /// subgraph induced by itself and the vertices after it.
    std::vector<std::size_t> degeneracy_order() const;

   private:
    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

struct CliqueResult {
    /// Vertex ids, ascending.
    std::vector<std::size_t> clique;
    std::uint64_t nodes = 0;
    /// True when the search finished inside the node budget, so `clique` is a
    /// maximum clique and the lexicographically smallest one of that size.
    bool exact = false;
};

/// Branch-and-bound maximum clique with greedy-coloring bounds over a
/// degeneracy-ordered renumbering. `initial` (a clique) is the starting
/// incumbent; the result is never smaller. A second pass recovers the
/// lexicographically smallest maximum clique so results are reproducible.
CliqueResult max_clique(const BitGraph &graph, const std::vector<std::size_t> &initial, std::uint64_t budget);

/// Exhaustive enumeration of all cliques; for small test graphs only.
std::size_t max_clique_bruteforce(const BitGraph &graph);

struct SearchReport {
    std::size_t vertices = 0;  // candidate vertices after fixing I
    std::uint64_t nodes = 0;
    std::size_t seed_size = 0;
    std::size_t greedy_size = 0;
    std::size_t best_size = 0;
    bool exact = false;
};

struct SearchResult {
    ExcludedSubset best;
    SearchReport report;
};

/// Groups up to this order get a full compatibility graph.
inline constexpr std::size_t kMaxSearchQ = 32;

/// Largest trace-zero excluded subset found within `budget` search nodes.
///
/// The compatibility graph (edge iff trace(A^-1 B) != 0) is invariant under
/// left multiplication, so the search fixes I in the subset and runs over its
/// neighbours; a seed not containing I is translated by seed[0]^-1 first.
/// Budget 0 returns the seed untouched with exact = false. Without a seed the
/// search starts from {I}.
SearchResult search_excluded_subset(const Field &field, std::uint64_t budget,
                                    const std::optional<std::vector<Mat2F>> &seed = std::nullopt);

}  // namespace mumeb
