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

#include <algorithm>
#include <bit>
#include <functional>

namespace mumeb {

namespace {

using Bits = std::vector<std::uint64_t>;

bool empty(const Bits &b) {
    return std::all_of(b.begin(), b.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t popcount(const Bits &b) {
    std::size_t c = 0;
    for (std::uint64_t w : b) {
        c += static_cast<std::size_t>(std::popcount(w));
    }
    return c;
}

void reset(Bits &b, std::size_t v) {
    b[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

template <typename Fn>
void for_each_bit(const Bits &b, Fn &&fn) {
    for (std::size_t w = 0; w < b.size(); ++w) {
        std::uint64_t word = b[w];
        while (word) {
            fn(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
            word &= word - 1;
        }
    }
}

Bits intersect(const Bits &p, const std::uint64_t *row) {
    Bits out(p.size());
    for (std::size_t w = 0; w < p.size(); ++w) {
        out[w] = p[w] & row[w];
    }
    return out;
}

// Greedy sequential coloring in vertex order; returns (vertex, color) with
// colors non-decreasing, so the last entries carry the largest bound.
void color_sort(const BitGraph &g, const Bits &p, std::vector<std::size_t> &verts, std::vector<std::size_t> &colors) {
    verts.clear();
    colors.clear();
    Bits uncolored = p;
    std::size_t color = 0;
    while (!empty(uncolored)) {
        ++color;
        Bits q = uncolored;
        for (std::size_t w = 0; w < q.size(); ++w) {
            while (q[w]) {
                const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(q[w]));
                reset(uncolored, v);
                reset(q, v);
                const std::uint64_t *row = g.row(v);
                for (std::size_t x = w; x < q.size(); ++x) {
                    q[x] &= ~row[x];
                }
                verts.push_back(v);
                colors.push_back(color);
            }
        }
    }
}

std::size_t color_count(const BitGraph &g, const Bits &p) {
    std::vector<std::size_t> verts, colors;
    color_sort(g, p, verts, colors);
    return colors.empty() ? 0 : colors.back();
}

class Solver {
   public:
    Solver(const BitGraph &g, std::uint64_t budget) : g_(g), budget_(budget) {
    }

    bool aborted() const {
        return aborted_;
    }
    std::uint64_t nodes() const {
        return nodes_;
    }

    void maximize(std::vector<std::size_t> &best) {
        best_ = &best;
        std::vector<std::size_t> r;
        expand(r, full());
    }

    std::optional<std::vector<std::size_t>> lex_smallest(std::size_t target, const std::vector<std::size_t> &rank) {
        rank_ = &rank;
        target_ = target;
        std::vector<std::size_t> r;
        if (find(r, full())) {
            return r;
        }
        return std::nullopt;
    }

   private:
    Bits full() const {
        Bits p(g_.words(), 0);
        for (std::size_t v = 0; v < g_.size(); ++v) {
            p[v >> 6] |= std::uint64_t{1} << (v & 63);
        }
        return p;
    }

    bool tick() {
        if (nodes_ >= budget_) {
            aborted_ = true;
            return false;
        }
        ++nodes_;
        return true;
    }

    void expand(std::vector<std::size_t> &r, Bits p) {
        if (!tick()) {
            return;
        }
        std::vector<std::size_t> verts, colors;
        color_sort(g_, p, verts, colors);
        for (std::size_t idx = verts.size(); idx-- > 0;) {
            if (aborted_ || r.size() + colors[idx] <= best_->size()) {
                return;
            }
            const std::size_t v = verts[idx];
            r.push_back(v);
            Bits np = intersect(p, g_.row(v));
            if (empty(np)) {
                if (r.size() > best_->size()) {
                    *best_ = r;
                }
            } else {
                expand(r, std::move(np));
            }
            r.pop_back();
            reset(p, v);
        }
    }

    bool find(std::vector<std::size_t> &r, Bits p) {
        if (!tick()) {
            return false;
        }
        if (r.size() == target_) {
            return true;
        }
        if (r.size() + popcount(p) < target_ || r.size() + color_count(g_, p) < target_) {
            return false;
        }
        std::vector<std::size_t> cand;
        for_each_bit(p, [&](std::size_t v) { cand.push_back(v); });
        std::sort(cand.begin(), cand.end(), [&](std::size_t a, std::size_t b) { return (*rank_)[a] < (*rank_)[b]; });
        for (std::size_t v : cand) {
            if (aborted_ || r.size() + popcount(p) < target_) {
                return false;
            }
            r.push_back(v);
            if (find(r, intersect(p, g_.row(v)))) {
                return true;
            }
            r.pop_back();
            reset(p, v);
        }
        return false;
    }

    const BitGraph &g_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::vector<std::size_t> *best_ = nullptr;
    const std::vector<std::size_t> *rank_ = nullptr;
    std::size_t target_ = 0;
};

}  // namespace

BitGraph::BitGraph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {
}

void BitGraph::add_edge(std::size_t u, std::size_t v) {
    if (u == v) {
        return;
    }
    bits_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

std::size_t BitGraph::degree(std::size_t u) const {
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) {
        d += static_cast<std::size_t>(std::popcount(row(u)[w]));
    }
    return d;
}

std::vector<std::size_t> BitGraph::degeneracy_order() const {
    std::vector<std::size_t> deg(n_);
    for (std::size_t v = 0; v < n_; ++v) {
        deg[v] = degree(v);
    }
    std::vector<char> removed(n_, 0);
    std::vector<std::size_t> order;
    order.reserve(n_);
    for (std::size_t step = 0; step < n_; ++step) {
        std::size_t pick = n_;
        for (std::size_t v = 0; v < n_; ++v) {
            if (!removed[v] && (pick == n_ || deg[v] < deg[pick])) {
                pick = v;
            }
        }
        removed[pick] = 1;
        order.push_back(pick);
        const std::uint64_t *r = row(pick);
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t word = r[w];
            while (word) {
                const std::size_t u = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
                if (!removed[u]) {
                    --deg[u];
                }
                word &= word - 1;
            }
        }
    }
    return order;
}

CliqueResult max_clique(const BitGraph &graph, const std::vector<std::size_t> &initial, std::uint64_t budget) {
    const std::size_t n = graph.size();
    // Highest-core vertices first: perm[new] = old.
    std::vector<std::size_t> perm = graph.degeneracy_order();
    std::reverse(perm.begin(), perm.end());
    std::vector<std::size_t> inv(n);
    for (std::size_t i = 0; i < n; ++i) {
        inv[perm[i]] = i;
    }
    BitGraph g(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (graph.adjacent(perm[u], perm[v])) {
                g.add_edge(u, v);
            }
        }
    }

    std::vector<std::size_t> best;
    for (std::size_t v : initial) {
        best.push_back(inv[v]);
    }
    Solver solver(g, budget);
    solver.maximize(best);

    CliqueResult out;
    auto to_old = [&](const std::vector<std::size_t> &c) {
        std::vector<std::size_t> o;
        for (std::size_t v : c) {
            o.push_back(perm[v]);
        }
        std::sort(o.begin(), o.end());
        return o;
    };
    out.clique = to_old(best);
    if (!solver.aborted()) {
        // perm itself maps new ids to the original (rank) order.
        const auto lex = solver.lex_smallest(best.size(), perm);
        if (lex) {
            out.clique = to_old(*lex);
        }
    }
    out.nodes = solver.nodes();
    out.exact = !solver.aborted();
    return out;
}

std::size_t max_clique_bruteforce(const BitGraph &graph) {
    // Bron-Kerbosch with pivoting over every maximal clique.
    std::size_t best = 0;
    std::function<void(std::size_t, std::vector<std::size_t>, std::vector<std::size_t>)> rec =
        [&](std::size_t r, std::vector<std::size_t> p, std::vector<std::size_t> x) {
            if (p.empty() && x.empty()) {
                best = std::max(best, r);
                return;
            }
            std::size_t pivot = p.empty() ? x.front() : p.front();
            std::size_t pivot_deg = 0;
            for (const auto *set : {&p, &x}) {
                for (std::size_t u : *set) {
                    std::size_t d = 0;
                    for (std::size_t v : p) {
                        d += graph.adjacent(u, v);
                    }
                    if (d >= pivot_deg) {
                        pivot_deg = d;
                        pivot = u;
                    }
                }
            }
            std::vector<std::size_t> cand;
            for (std::size_t v : p) {
                if (!graph.adjacent(pivot, v)) {
                    cand.push_back(v);
                }
            }
            for (std::size_t v : cand) {
                std::vector<std::size_t> np, nx;
                for (std::size_t u : p) {
                    if (graph.adjacent(u, v)) {
                        np.push_back(u);
                    }
                }
                for (std::size_t u : x) {
                    if (graph.adjacent(u, v)) {
                        nx.push_back(u);
                    }
                }
                rec(r + 1, std::move(np), std::move(nx));
                p.erase(std::find(p.begin(), p.end(), v));
                x.push_back(v);
            }
        };
    std::vector<std::size_t> all(graph.size());
    for (std::size_t v = 0; v < graph.size(); ++v) {
        all[v] = v;
    }
    rec(0, all, {});
    return best;
}

SearchResult search_excluded_subset(const Field &field, std::uint64_t budget,
                                    const std::optional<std::vector<Mat2F>> &seed) {
    if (field.size() > kMaxSearchQ) {
        throw Error(ErrorKind::EnumerationTooLarge, "compatibility graph search supports q <= 32");
    }
    std::vector<Mat2F> start = seed.value_or(std::vector<Mat2F>{Mat2F::identity(field)});
    const ExclusionCheck check = is_trace_zero_excluded(start);
    if (!check.excluded) {
        throw Error(ErrorKind::InvalidMatrix, "seed family is not trace-zero excluded");
    }
    SearchReport report;
    report.seed_size = start.size();
    if (budget == 0) {
        report.greedy_size = start.size();
        report.best_size = start.size();
        return {ExcludedSubset(std::move(start)), report};
    }

    // Translate so the seed contains I.
    const Mat2F shift = mat_inv(start.front());
    std::vector<Mat2F> anchored;
    for (const Mat2F &m : start) {
        anchored.push_back(mat_mul(shift, m));
    }

    const std::vector<Mat2F> group = sl2_enumerate(field);
    std::vector<Mat2F> cand;
    for (const Mat2F &m : group) {
        if (!m.trace().is_zero()) {
            cand.push_back(m);
        }
    }
    const std::size_t n = cand.size();
    report.vertices = n;

    // Raw log-table products for the O(n^2) adjacency build.
    const std::size_t order = field.size() - 1;
    std::vector<std::array<int, 4>> logs(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto idx = cand[i].indices();
        for (int k = 0; k < 4; ++k) {
            logs[i][k] = idx[k] == 0 ? -1 : static_cast<int>(idx[k]) - 1;
        }
    }
    auto mul = [&](int la, int lb) -> std::uint32_t {
        return (la < 0 || lb < 0) ? 0u : field.exp_bits((la + lb) % order);
    };
    BitGraph graph(n);
    for (std::size_t u = 0; u < n; ++u) {
        const auto &a = logs[u];
        for (std::size_t v = u + 1; v < n; ++v) {
            const auto &b = logs[v];
            const std::uint32_t tr = mul(a[1], b[2]) ^ mul(b[1], a[2]) ^ mul(b[0], a[3]) ^ mul(a[0], b[3]);
            if (tr != 0) {
                graph.add_edge(u, v);
            }
        }
    }

    std::vector<std::size_t> clique;
    for (const Mat2F &m : anchored) {
        if (m == Mat2F::identity(field)) {
            continue;
        }
        clique.push_back(static_cast<std::size_t>(std::lower_bound(cand.begin(), cand.end(), m) - cand.begin()));
    }

    // Greedy extension: highest degree inside the common neighbourhood.
    std::uint64_t greedy_nodes = 0;
    Bits p(graph.words(), 0);
    for (std::size_t v = 0; v < n; ++v) {
        p[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    for (std::size_t v : clique) {
        p = intersect(p, graph.row(v));
    }
    while (!empty(p) && greedy_nodes < budget) {
        ++greedy_nodes;
        std::size_t pick = n;
        std::size_t pick_deg = 0;
        for_each_bit(p, [&](std::size_t v) {
            const std::size_t d = popcount(intersect(p, graph.row(v)));
            if (pick == n || d > pick_deg) {
                pick = v;
                pick_deg = d;
            }
        });
        clique.push_back(pick);
        p = intersect(p, graph.row(pick));
    }
    report.greedy_size = clique.size() + 1;

    CliqueResult result = max_clique(graph, clique, budget - greedy_nodes);
    report.nodes = greedy_nodes + result.nodes;
    report.exact = result.exact;

    std::vector<Mat2F> members{Mat2F::identity(field)};
    for (std::size_t v : result.clique) {
        members.push_back(cand[v]);
    }
    std::sort(members.begin(), members.end());
    report.best_size = members.size();
    return {ExcludedSubset(std::move(members)), report};
}

}  // namespace mumeb
