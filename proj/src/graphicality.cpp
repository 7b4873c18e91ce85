#include "graphicality.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace swapsmith {

DegreeSequence DegreeSequence::from_sorted(std::vector<std::uint64_t> d) {
    for (std::size_t i = 1; i < d.size(); ++i)
        if (d[i] > d[i - 1])
            throw usage_error("degree sequence must be weakly decreasing");
    DegreeSequence s;
    s.d_ = std::move(d);
    return s;
}

DegreeSequence DegreeSequence::of_graph(const LoopyMultigraph& g) {
    DegreeSequence s;
    s.d_ = g.degree_sequence();
    return s;
}

std::uint64_t DegreeSequence::sum() const {
    return std::accumulate(d_.begin(), d_.end(), std::uint64_t{0});
}

std::string EgCheck::witness() const {
    if (graphical)
        return "";
    if (odd_sum)
        return "odd sum";
    return "violated at k=" + std::to_string(violated_k);
}

EgCheck erdos_gallai(const DegreeSequence& seq) {
    const auto& d = seq.values();
    const std::size_t n = d.size();
    EgCheck r;
    if (seq.sum() % 2 != 0) {
        r.odd_sum = true;
        return r;
    }
    std::uint64_t lhs = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        lhs += d[k - 1];
        std::uint64_t rhs = static_cast<std::uint64_t>(k) * (k - 1);
        for (std::size_t i = k; i < n; ++i)
            rhs += std::min<std::uint64_t>(d[i], k);
        if (lhs > rhs) {
            r.violated_k = k;
            return r;
        }
    }
    r.graphical = true;
    return r;
}

bool has_graphical_degrees(const LoopyMultigraph& g) {
    return erdos_gallai(DegreeSequence::of_graph(g)).graphical;
}

LoopyMultigraph realize_simple_for(const std::vector<std::uint64_t>& degree_vector) {
    auto sorted = degree_vector;
    std::sort(sorted.begin(), sorted.end(), std::greater<std::uint64_t>());
    EgCheck eg = erdos_gallai(DegreeSequence::from_sorted(sorted));
    if (!eg.graphical)
        throw NotGraphicalError("degree sequence is not graphical (" + eg.witness() + ")", eg.violated_k);

    const std::size_t n = degree_vector.size();
    LoopyMultigraph g(n);
    std::vector<std::uint64_t> residual = degree_vector;
    for (;;) {
        // highest remaining degree, ties broken by lowest index
        std::size_t u = 0;
        for (std::size_t v = 1; v < n; ++v)
            if (residual[v] > residual[u])
                u = v;
        if (residual[u] == 0)
            break;
        std::vector<std::size_t> others;
        for (std::size_t v = 0; v < n; ++v)
            if (v != u && residual[v] > 0)
                others.push_back(v);
        std::stable_sort(others.begin(), others.end(),
                         [&](std::size_t x, std::size_t y) { return residual[x] > residual[y]; });
        if (others.size() < residual[u])
            throw internal_error("realize_simple: greedy ran out of targets on a graphical sequence");
        std::uint64_t need = residual[u];
        residual[u] = 0;
        for (std::uint64_t i = 0; i < need; ++i) {
            std::size_t v = others[i];
            g.add_edges(VertexPair(static_cast<Vertex>(u), static_cast<Vertex>(v)), 1);
            --residual[v];
        }
    }
    return g;
}

LoopyMultigraph realize_simple(const DegreeSequence& d) {
    return realize_simple_for(d.values());
}

LoopyMultigraph realize_simple_like(const LoopyMultigraph& g) {
    return realize_simple_for(g.degree_vector());
}

namespace {

Multiplicity cap_for(const std::vector<PairCap>& caps, VertexPair p) {
    for (const auto& c : caps)
        if (c.pair == p)
            return c.cap;
    return ~Multiplicity{0};
}

// exhaustive assignment of pair multiplicities, ascending values first so low
// multiplicities are preferred; returns false when no realization matches
bool assign_pairs(LoopyMultigraph& g, std::vector<std::uint64_t>& residual,
                  const std::vector<PairCap>& caps, std::size_t u, std::size_t v) {
    const std::size_t n = residual.size();
    if (u == n)
        return true;
    if (v == n) {
        if (residual[u] != 0)
            return false;
        return assign_pairs(g, residual, caps, u + 1, u + 2);
    }
    VertexPair p(static_cast<Vertex>(u), static_cast<Vertex>(v));
    std::uint64_t top = std::min<std::uint64_t>({residual[u], residual[v], cap_for(caps, p)});
    for (std::uint64_t m = 0; m <= top; ++m) {
        if (m > 0) {
            g.add_edges(p, 1);
            --residual[u];
            --residual[v];
        }
        // u must still be able to place its remaining stubs on later pairs
        std::uint64_t room = 0;
        for (std::size_t w = v + 1; w < n; ++w)
            room += std::min<std::uint64_t>(residual[w], cap_for(caps, VertexPair(static_cast<Vertex>(u), static_cast<Vertex>(w))));
        if (room >= residual[u] && assign_pairs(g, residual, caps, u, v + 1))
            return true;
    }
    if (top > 0) {
        g.add_edges(p, -static_cast<std::int64_t>(top));
        residual[u] += top;
        residual[v] += top;
    }
    return false;
}

} // namespace

LoopyMultigraph realize_loopfree_for(const std::vector<std::uint64_t>& degree_vector,
                                     const std::vector<PairCap>& caps) {
    const std::size_t n = degree_vector.size();
    std::uint64_t total = std::accumulate(degree_vector.begin(), degree_vector.end(), std::uint64_t{0});
    std::uint64_t dmax = n ? *std::max_element(degree_vector.begin(), degree_vector.end()) : 0;
    if (total % 2 != 0)
        throw domain_error("loop-free realization: odd degree sum");
    if (dmax > total - dmax)
        throw domain_error("loop-free realization: max degree exceeds the sum of the others");

    LoopyMultigraph g(n);
    std::vector<std::uint64_t> residual = degree_vector;
    std::uint64_t remaining = total;
    while (remaining > 0) {
        std::size_t u = 0;
        for (std::size_t v = 1; v < n; ++v)
            if (residual[v] > residual[u])
                u = v;
        // spread: prefer the partner we are least connected to, then the
        // largest residual, then the lowest index
        bool found = false;
        std::size_t best = 0;
        Multiplicity best_mult = 0;
        for (std::size_t w = 0; w < n; ++w) {
            if (w == u || residual[w] == 0)
                continue;
            VertexPair p(static_cast<Vertex>(u), static_cast<Vertex>(w));
            Multiplicity cur = g.multiplicity(p);
            if (cur >= cap_for(caps, p))
                continue;
            if (!found || cur < best_mult ||
                (cur == best_mult && residual[w] > residual[best])) {
                found = true;
                best = w;
                best_mult = cur;
            }
        }
        if (!found)
            break; // a cap cornered the greedy; retry exhaustively below
        g.add_edges(VertexPair(static_cast<Vertex>(u), static_cast<Vertex>(best)), 1);
        --residual[u];
        --residual[best];
        remaining -= 2;
    }
    if (remaining == 0)
        return g;

    LoopyMultigraph exact(n);
    std::vector<std::uint64_t> fresh = degree_vector;
    if (n >= 2 && assign_pairs(exact, fresh, caps, 0, 1))
        return exact;
    throw domain_error("loop-free realization: caps are infeasible for these degrees");
}

LoopyMultigraph realize_loopfree_multigraph(const DegreeSequence& d, const std::vector<PairCap>& caps) {
    return realize_loopfree_for(d.values(), caps);
}

} // namespace swapsmith
