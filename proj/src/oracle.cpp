#include "oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "errors.hpp"

namespace swapsmith {

std::string state_key(const LoopyMultigraph& g) {
    std::string key;
    key.reserve(4 + g.entries().size() * 12);
    auto push = [&key](std::uint32_t v) {
        for (int i = 0; i < 4; ++i)
            key += static_cast<char>((v >> (8 * i)) & 0xff);
    };
    push(static_cast<std::uint32_t>(g.vertex_count()));
    for (const auto& [p, m] : g.entries()) {
        push(p.a);
        push(p.b);
        push(m);
    }
    return key;
}

namespace {

void enumerate_rec(LoopyMultigraph& g, std::vector<std::uint64_t>& residual, GraphClass cls,
                   std::size_t u, std::size_t v, std::uint64_t result_cap,
                   std::vector<LoopyMultigraph>& out) {
    const std::size_t n = residual.size();
    if (u == n) {
        if (out.size() >= result_cap)
            throw limit_error("enumerate_graphs: result cap exceeded");
        out.push_back(g);
        return;
    }
    if (v == n) {
        if (residual[u] == 0)
            enumerate_rec(g, residual, cls, u + 1, u + 1, result_cap, out);
        return;
    }

    const bool loop_slot = (u == v);
    if (loop_slot && cls != GraphClass::Loopy) {
        enumerate_rec(g, residual, cls, u, v + 1, result_cap, out);
        return;
    }

    VertexPair p(static_cast<Vertex>(u), static_cast<Vertex>(v));
    std::uint64_t top;
    if (loop_slot)
        top = residual[u] / 2;
    else if (cls == GraphClass::Simple)
        top = std::min<std::uint64_t>({residual[u], residual[v], 1});
    else
        top = std::min<std::uint64_t>(residual[u], residual[v]);

    for (std::uint64_t m = 0; m <= top; ++m) {
        if (m > 0) {
            g.add_edges(p, 1);
            if (loop_slot) {
                residual[u] -= 2;
            } else {
                --residual[u];
                --residual[v];
            }
        }
        // u must be able to place its remaining stubs on the pairs still open
        std::uint64_t room = 0;
        for (std::size_t w = v + 1; w < n && room < residual[u]; ++w)
            room += (cls == GraphClass::Simple) ? (residual[w] > 0 ? 1 : 0) : residual[w];
        if (room >= residual[u])
            enumerate_rec(g, residual, cls, u, v + 1, result_cap, out);
    }
    if (top > 0) {
        g.add_edges(p, -static_cast<std::int64_t>(top));
        residual[u] += loop_slot ? 2 * top : top;
        if (!loop_slot)
            residual[v] += top;
    }
}

} // namespace

std::vector<LoopyMultigraph> enumerate_graphs(const std::vector<std::uint64_t>& degree_vector,
                                              GraphClass cls, std::uint64_t result_cap) {
    std::uint64_t total = std::accumulate(degree_vector.begin(), degree_vector.end(), std::uint64_t{0});
    if (total % 2 != 0)
        throw domain_error("enumerate_graphs: odd degree sum");
    std::vector<LoopyMultigraph> out;
    LoopyMultigraph g(degree_vector.size());
    std::vector<std::uint64_t> residual = degree_vector;
    if (degree_vector.empty()) {
        out.push_back(g);
        return out;
    }
    enumerate_rec(g, residual, cls, 0, 0, result_cap, out);
    return out;
}

namespace {

void collect_results(const LoopyMultigraph& g, const VertexPair& p, const VertexPair& q,
                     std::unordered_set<std::string>& seen,
                     std::vector<std::pair<Swap, LoopyMultigraph>>& out) {
    // orientations of the quadruple give at most two distinct results
    Swap candidates[2] = {Swap{p.a, p.b, q.a, q.b}, Swap{p.a, p.b, q.b, q.a}};
    int count = (p.is_loop() || q.is_loop()) ? 1 : 2;
    for (int i = 0; i < count; ++i) {
        LoopyMultigraph next = g;
        next.apply_swap(candidates[i]);
        std::string key = state_key(next);
        if (seen.insert(key).second)
            out.emplace_back(candidates[i], std::move(next));
    }
}

} // namespace

std::vector<std::pair<Swap, LoopyMultigraph>> admissible_neighbors(const LoopyMultigraph& g) {
    std::vector<std::pair<Swap, LoopyMultigraph>> out;
    std::unordered_set<std::string> seen;
    const auto& entries = g.entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            const VertexPair& p = entries[i].first;
            const VertexPair& q = entries[j].first;
            if (!g.is_admissible(p, q))
                continue;
            collect_results(g, p, q, seen, out);
        }
    }
    return out;
}

std::vector<std::pair<Swap, LoopyMultigraph>> all_swap_neighbors(const LoopyMultigraph& g) {
    std::vector<std::pair<Swap, LoopyMultigraph>> out;
    std::unordered_set<std::string> seen;
    const auto& entries = g.entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (std::size_t j = i; j < entries.size(); ++j) {
            const VertexPair& p = entries[i].first;
            const VertexPair& q = entries[j].first;
            if (i == j && entries[i].second < 2)
                continue;
            Swap candidates[4] = {Swap{p.a, p.b, q.a, q.b}, Swap{p.a, p.b, q.b, q.a},
                                  Swap{p.b, p.a, q.a, q.b}, Swap{p.b, p.a, q.b, q.a}};
            for (const Swap& s : candidates) {
                LoopyMultigraph next = g;
                next.apply_swap(s);
                std::string key = state_key(next);
                if (seen.insert(key).second)
                    out.emplace_back(s, std::move(next));
            }
        }
    }
    return out;
}

namespace {

std::optional<std::uint64_t> bfs_to_simple(
    const LoopyMultigraph& g, std::uint64_t state_cap,
    std::vector<std::pair<Swap, LoopyMultigraph>> (*neighbors)(const LoopyMultigraph&)) {
    if (g.is_simple())
        return 0;
    std::unordered_set<std::string> visited;
    std::deque<std::pair<LoopyMultigraph, std::uint64_t>> queue;
    visited.insert(state_key(g));
    queue.emplace_back(g, 0);
    while (!queue.empty()) {
        auto [cur, dist] = std::move(queue.front());
        queue.pop_front();
        for (auto& [swap, next] : neighbors(cur)) {
            std::string key = state_key(next);
            if (!visited.insert(key).second)
                continue;
            if (next.is_simple())
                return dist + 1;
            if (visited.size() > state_cap)
                throw limit_error("swap search: state cap exceeded");
            queue.emplace_back(std::move(next), dist + 1);
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<std::uint64_t> min_admissible_swaps(const LoopyMultigraph& g, std::uint64_t state_cap) {
    return bfs_to_simple(g, state_cap, &admissible_neighbors);
}

std::optional<std::uint64_t> min_swaps_unrestricted(const LoopyMultigraph& g, std::uint64_t state_cap) {
    return bfs_to_simple(g, state_cap, &all_swap_neighbors);
}

std::vector<std::uint64_t> min_swaps_table(const std::vector<LoopyMultigraph>& states) {
    constexpr std::uint64_t kUnreachable = ~std::uint64_t{0};
    std::unordered_map<std::string, std::size_t> index;
    index.reserve(states.size());
    for (std::size_t i = 0; i < states.size(); ++i)
        index.emplace(state_key(states[i]), i);

    std::vector<std::vector<std::size_t>> reverse_adj(states.size());
    std::vector<std::uint64_t> dist(states.size(), kUnreachable);
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i].is_simple()) {
            dist[i] = 0;
            queue.push_back(i);
        }
        for (const auto& [swap, next] : admissible_neighbors(states[i])) {
            auto it = index.find(state_key(next));
            if (it == index.end())
                throw internal_error("min_swaps_table: state set is not transition-closed");
            reverse_adj[it->second].push_back(i);
        }
    }
    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop_front();
        for (std::size_t prev : reverse_adj[cur]) {
            if (dist[prev] == kUnreachable) {
                dist[prev] = dist[cur] + 1;
                queue.push_back(prev);
            }
        }
    }
    return dist;
}

std::vector<std::vector<std::uint64_t>> weakly_decreasing_sequences(std::size_t n, std::uint64_t sum) {
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> cur(n, 0);
    // digits bounded above by the previous digit; fill left to right
    auto rec = [&](auto&& self, std::size_t i, std::uint64_t remaining, std::uint64_t bound) -> void {
        if (i == n) {
            if (remaining == 0)
                out.push_back(cur);
            return;
        }
        std::uint64_t top = std::min(bound, remaining);
        for (std::uint64_t v = 0; v <= top; ++v) {
            // remaining sum must fit under v in all later positions
            if (remaining - v > v * (n - i - 1))
                continue;
            cur[i] = v;
            self(self, i + 1, remaining - v, v);
        }
    };
    rec(rec, 0, sum, sum);
    return out;
}

} // namespace swapsmith
