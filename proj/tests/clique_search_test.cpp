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

#include "mumeb/clique_search.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace mumeb;

namespace {

using Adj = std::vector<std::vector<bool>>;

// Plain Bron-Kerbosch over every maximal clique; tracks the lexicographically
// smallest clique of maximum size.
void bk(const Adj &adj, std::vector<std::size_t> &r, std::vector<std::size_t> p, std::vector<std::size_t> x,
        std::vector<std::size_t> &best) {
    if (p.empty() && x.empty()) {
        std::vector<std::size_t> sorted = r;
        std::sort(sorted.begin(), sorted.end());
        if (sorted.size() > best.size() || (sorted.size() == best.size() && sorted < best)) {
            best = sorted;
        }
        return;
    }
    while (!p.empty()) {
        const std::size_t v = p.back();
        p.pop_back();
        std::vector<std::size_t> np, nx;
        for (std::size_t u : p) {
            if (adj[v][u]) {
                np.push_back(u);
            }
        }
        for (std::size_t u : x) {
            if (adj[v][u]) {
                nx.push_back(u);
            }
        }
        r.push_back(v);
        bk(adj, r, np, nx, best);
        r.pop_back();
        x.push_back(v);
    }
}

std::vector<std::size_t> oracle_max_clique(const Adj &adj) {
    std::vector<std::size_t> r, p, best;
    for (std::size_t v = 0; v < adj.size(); ++v) {
        p.push_back(v);
    }
    bk(adj, r, p, {}, best);
    return best;
}

Adj random_graph(std::size_t n, double density, std::mt19937_64 &rng) {
    std::bernoulli_distribution edge(density);
    Adj adj(n, std::vector<bool>(n, false));
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            adj[u][v] = adj[v][u] = edge(rng);
        }
    }
    return adj;
}

BitGraph to_bitgraph(const Adj &adj) {
    BitGraph g(adj.size());
    for (std::size_t u = 0; u < adj.size(); ++u) {
        for (std::size_t v = u + 1; v < adj.size(); ++v) {
            if (adj[u][v]) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

bool is_clique(const BitGraph &g, const std::vector<std::size_t> &c) {
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = i + 1; j < c.size(); ++j) {
            if (!g.adjacent(c[i], c[j])) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

TEST(bit_graph, adjacency_and_degeneracy) {
    std::mt19937_64 rng(1);
    const Adj adj = random_graph(100, 0.3, rng);
    const BitGraph g = to_bitgraph(adj);
    for (std::size_t u = 0; u < 100; ++u) {
        std::size_t deg = 0;
        for (std::size_t v = 0; v < 100; ++v) {
            ASSERT_EQ(g.adjacent(u, v), static_cast<bool>(adj[u][v]));
            deg += adj[u][v] ? 1 : 0;
        }
        ASSERT_EQ(g.degree(u), deg);
    }
    const auto order = g.degeneracy_order();
    std::vector<std::size_t> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        ASSERT_EQ(sorted[i], i);
    }
    // Each vertex has minimum degree among itself and the vertices after it.
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto later_degree = [&](std::size_t v) {
            std::size_t d = 0;
            for (std::size_t j = i; j < order.size(); ++j) {
                d += g.adjacent(v, order[j]) ? 1 : 0;
            }
            return d;
        };
        const std::size_t mine = later_degree(order[i]);
        for (std::size_t j = i; j < order.size(); ++j) {
            ASSERT_LE(mine, later_degree(order[j]));
        }
    }
}

TEST(max_clique, matches_oracle_on_random_graphs) {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 8 + static_cast<std::size_t>(t % 40);
        const double density = 0.2 + 0.12 * (t % 6);
        const Adj adj = random_graph(n, density, rng);
        const BitGraph g = to_bitgraph(adj);
        const auto expected = oracle_max_clique(adj);
        const CliqueResult got = max_clique(g, {}, 100'000'000);
        ASSERT_TRUE(got.exact);
        ASSERT_TRUE(is_clique(g, got.clique));
        ASSERT_EQ(got.clique, expected) << "trial " << t;
        ASSERT_EQ(max_clique_bruteforce(g), expected.size());
    }
}

TEST(max_clique, respects_initial_and_budget) {
    std::mt19937_64 rng(3);
    const Adj adj = random_graph(40, 0.5, rng);
    const BitGraph g = to_bitgraph(adj);
    std::vector<std::size_t> seed{0};
    for (std::size_t v = 1; v < 40; ++v) {
        if (is_clique(g, [&] { auto c = seed; c.push_back(v); return c; }())) {
            seed.push_back(v);
        }
    }
    const CliqueResult none = max_clique(g, seed, 0);
    EXPECT_FALSE(none.exact);
    EXPECT_EQ(none.clique, seed);
    const CliqueResult some = max_clique(g, seed, 5);
    EXPECT_GE(some.clique.size(), seed.size());
    EXPECT_TRUE(is_clique(g, some.clique));
    const CliqueResult full = max_clique(g, seed, 100'000'000);
    EXPECT_TRUE(full.exact);
    EXPECT_EQ(full.clique.size(), oracle_max_clique(adj).size());
}

TEST(search, s2_is_exact_and_maximum) {
    const FieldPtr f = Field::create(2);
    const auto all = sl2_enumerate(*f);
    Adj adj(all.size(), std::vector<bool>(all.size(), false));
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = 0; j < all.size(); ++j) {
            adj[i][j] = i != j && !rel_trace_pair(all[i], all[j]).is_zero();
        }
    }
    const std::size_t oracle = oracle_max_clique(adj).size();
    const SearchResult r = search_excluded_subset(*f, 10'000'000, family_triple(*f).members());
    EXPECT_TRUE(r.report.exact);
    EXPECT_EQ(r.best.size(), oracle);
    EXPECT_GE(r.best.size(), 9u);
    EXPECT_EQ(r.report.best_size, r.best.size());
    EXPECT_EQ(r.report.seed_size, 9u);
    EXPECT_EQ(r.report.vertices, 44u);
    EXPECT_TRUE(is_trace_zero_excluded(r.best.members()).excluded);
    // Reproducible.
    const SearchResult again = search_excluded_subset(*f, 10'000'000, family_triple(*f).members());
    EXPECT_EQ(again.best.members(), r.best.members());
    // Unseeded search reaches the same size.
    EXPECT_EQ(search_excluded_subset(*f, 10'000'000).best.size(), oracle);
}

TEST(search, zero_budget_returns_seed) {
    const FieldPtr f = Field::create(2);
    const auto seed = family_triple(*f).members();
    const SearchResult r = search_excluded_subset(*f, 0, seed);
    EXPECT_FALSE(r.report.exact);
    EXPECT_EQ(r.best.members(), seed);
}

TEST(search, budget_limited_run_keeps_floor) {
    const FieldPtr f = Field::create(3);
    const SearchResult r = search_excluded_subset(*f, 2000, family_triple(*f).members());
    EXPECT_GE(r.best.size(), 21u);
    EXPECT_TRUE(is_trace_zero_excluded(r.best.members()).excluded);
    EXPECT_LE(r.report.nodes, 2000u + 1u);
}

TEST(search, rejects_bad_inputs) {
    const FieldPtr f = Field::create(2);
    const Mat2F id = Mat2F::identity(*f);
    EXPECT_THROW(search_excluded_subset(*f, 10, std::vector<Mat2F>{id, Mat2F::swap(*f)}), Error);
    try {
        search_excluded_subset(*Field::create(6), 10);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::EnumerationTooLarge);
    }
}
