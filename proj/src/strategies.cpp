#include "strategies.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace swapsmith {

namespace {

void require_loopfree(const LoopyMultigraph& g, const char* who) {
    if (g.has_loops())
        throw domain_error(std::string(who) + ": graph must be loop-free");
}

void require_same_degrees(const LoopyMultigraph& g, const LoopyMultigraph& h, const char* who) {
    if (g.vertex_count() != h.vertex_count() || g.degree_vector() != h.degree_vector())
        throw domain_error(std::string(who) + ": degree mismatch between the two graphs");
}

std::vector<VertexPair> multi_edge_pairs(const LoopyMultigraph& g) {
    std::vector<VertexPair> out;
    for (const auto& [p, m] : g.entries())
        if (!p.is_loop() && m >= 2)
            out.push_back(p);
    return out;
}

} // namespace

Colouring Colouring::surplus(const LoopyMultigraph& g, const LoopyMultigraph& h, VertexPair e) {
    Colouring c;
    c.e_ = e;
    c.blue_ = LoopyMultigraph(g.vertex_count());
    c.red_ = LoopyMultigraph(g.vertex_count());
    for (const auto& [p, m] : g.entries()) {
        Multiplicity mh = h.multiplicity(p);
        if (m > mh)
            c.blue_.add_edges(p, static_cast<std::int64_t>(m - mh));
    }
    for (const auto& [p, m] : h.entries()) {
        Multiplicity mg = g.multiplicity(p);
        if (m > mg)
            c.red_.add_edges(p, static_cast<std::int64_t>(m - mg));
    }
    return c;
}

std::optional<Vertex> Colouring::pick_red_neighbor(Vertex v, Picker& picker) const {
    std::vector<Vertex> candidates;
    for (const auto& [p, m] : red_.entries())
        if (p.contains(v))
            candidates.push_back(p.a == v ? p.b : p.a);
    if (candidates.empty())
        return std::nullopt;
    return candidates[picker.pick(candidates.size())];
}

std::optional<Vertex> Colouring::pick_blue_neighbor(Vertex v, Picker& picker) const {
    std::vector<Vertex> candidates;
    for (const auto& [p, m] : blue_.entries())
        if (p.contains(v))
            candidates.push_back(p.a == v ? p.b : p.a);
    if (candidates.empty())
        return std::nullopt;
    return candidates[picker.pick(candidates.size())];
}

void Colouring::uncolour_cycle(Vertex v1, Vertex v2, Vertex u1, Vertex u2) {
    red_.add_edges(VertexPair(v1, v2), -1);
    blue_.add_edges(VertexPair(v2, u1), -1);
    red_.add_edges(VertexPair(u1, u2), -1);
    blue_.add_edges(VertexPair(u2, v1), -1);
}

bool Colouring::balanced() const {
    return blue_.degree_vector() == red_.degree_vector();
}

bool Colouring::bichromatic_pair_exists() const {
    for (const auto& [p, m] : blue_.entries())
        if (red_.multiplicity(p) >= 1)
            return true;
    return false;
}

std::uint64_t total_distance(const LoopyMultigraph& g, const LoopyMultigraph& h) {
    require_same_degrees(g, h, "total_distance");
    std::uint64_t dist = 0;
    for (const auto& [p, m] : g.entries()) {
        Multiplicity mh = h.multiplicity(p);
        dist += m > mh ? m - mh : mh - m;
    }
    for (const auto& [p, m] : h.entries())
        if (g.multiplicity(p) == 0)
            dist += m;
    return dist;
}

TargetStep angel_target_step(const LoopyMultigraph& g, const LoopyMultigraph& h, VertexPair devil_pick,
                             Picker picker) {
    require_loopfree(g, "angel_target_step");
    require_loopfree(h, "angel_target_step");
    require_same_degrees(g, h, "angel_target_step");
    if (g.multiplicity(devil_pick) <= h.multiplicity(devil_pick))
        throw domain_error("angel_target_step: devil pick is not over-represented relative to the target");

    Colouring col = Colouring::surplus(g, h, devil_pick);
    const Vertex u1 = devil_pick.a;
    const Vertex v1 = devil_pick.b;
    TargetStep step;
    for (;;) {
        auto v2 = col.pick_red_neighbor(v1, picker);
        if (!v2)
            throw internal_error("angel_target_step: no red edge at the devil pair");
        auto v3 = col.pick_blue_neighbor(*v2, picker);
        if (!v3)
            throw internal_error("angel_target_step: no blue edge after a red one");
        auto u2 = col.pick_red_neighbor(u1, picker);
        if (!u2)
            throw internal_error("angel_target_step: no red edge at the devil pair");
        auto u3 = col.pick_blue_neighbor(*u2, picker);
        if (!u3)
            throw internal_error("angel_target_step: no blue edge after a red one");

        if (u1 != *v3) {
            step.swap = Swap{u1, v1, *v2, *v3};
            return step;
        }
        if (v1 != *u3) {
            step.swap = Swap{v1, u1, *u2, *u3};
            return step;
        }
        // both candidate swaps are blocked: the four coloured edges close an
        // alternating cycle, which can be dropped entirely
        col.uncolour_cycle(v1, *v2, u1, *u2);
        ++step.uncoloured_cycles;
    }
}

std::pair<LoopyMultigraph, SwapTrace> eliminate_loops(const LoopyMultigraph& g, Picker picker) {
    EgCheck eg = erdos_gallai(DegreeSequence::of_graph(g));
    if (!eg.graphical)
        throw NotGraphicalError("eliminate_loops: degree sequence is not graphical (" + eg.witness() + ")",
                                eg.violated_k);
    LoopyMultigraph cur = g;
    SwapTrace trace = SwapTrace::starting_at(g);
    while (cur.has_loops()) {
        std::vector<Vertex> loop_vertices;
        for (const auto& [p, m] : cur.entries())
            if (p.is_loop())
                loop_vertices.push_back(p.a);
        Vertex v = loop_vertices[picker.pick(loop_vertices.size())];

        std::vector<VertexPair> partners;
        for (const auto& [p, m] : cur.entries())
            if (!p.contains(v))
                partners.push_back(p);
        if (partners.empty())
            throw internal_error("eliminate_loops: no edge avoids the loop vertex on a graphical sequence");
        VertexPair partner = partners[picker.pick(partners.size())];

        Swap s{v, v, partner.a, partner.b};
        trace.record(cur, s);
        cur.apply_swap(s);
    }
    return {std::move(cur), std::move(trace)};
}

SwapTrace simplify_via_target(const LoopyMultigraph& g, Picker picker) {
    require_loopfree(g, "simplify_via_target");
    EgCheck eg = erdos_gallai(DegreeSequence::of_graph(g));
    if (!eg.graphical)
        throw NotGraphicalError("simplify_via_target: degree sequence is not graphical (" + eg.witness() + ")",
                                eg.violated_k);
    LoopyMultigraph target = realize_simple_like(g);
    LoopyMultigraph cur = g;
    SwapTrace trace = SwapTrace::starting_at(g);
    for (;;) {
        auto multis = multi_edge_pairs(cur);
        if (multis.empty())
            break;
        VertexPair e = multis[picker.pick(multis.size())];
        TargetStep step = angel_target_step(cur, target, e, picker);
        trace.record(cur, step.swap);
        cur.apply_swap(step.swap);
    }
    return trace;
}

void CycleSequence::validate(const LoopyMultigraph& g) const {
    const auto& v = vertices;
    if (v.size() < 4 || v.size() % 2 != 0)
        throw domain_error("cycle_swap: sequence length must be even and at least 4");
    for (Vertex x : v)
        if (x >= g.vertex_count())
            throw domain_error("cycle_swap: vertex out of range");
    const std::size_t len = v.size();
    for (std::size_t i = 1; i < len; ++i)
        if (v[i] == v[0])
            throw domain_error("cycle_swap: v1 must be distinct from every later vertex");
    std::vector<VertexPair> consecutive;
    for (std::size_t i = 0; i + 1 < len; ++i) {
        if (v[i] == v[i + 1])
            throw domain_error("cycle_swap: consecutive vertices must differ");
        consecutive.emplace_back(v[i], v[i + 1]);
    }
    VertexPair closing(v[0], v[len - 1]);
    for (std::size_t i = 0; i < consecutive.size(); ++i) {
        if (consecutive[i] == closing)
            throw domain_error("cycle_swap: a consecutive pair equals the closing pair");
        for (std::size_t j = i + 1; j < consecutive.size(); ++j)
            if (consecutive[i] == consecutive[j])
                throw domain_error("cycle_swap: consecutive pairs must be pairwise distinct");
    }
    for (std::size_t j = 1; j + 1 <= m() - 1 + 1; ++j) {
        if (j > m() - 1)
            break;
        if (g.multiplicity(VertexPair(v[2 * j - 1], v[2 * j])) == 0)
            throw domain_error("cycle_swap: required edge {v_" + std::to_string(2 * j) + ",v_" +
                               std::to_string(2 * j + 1) + "} is absent");
    }
    if (g.multiplicity(closing) < 2)
        throw domain_error("cycle_swap: {v_1, v_2m} must be a multiple edge");
}

std::pair<SwapTrace, LoopyMultigraph> cycle_swap(const LoopyMultigraph& g, const CycleSequence& seq) {
    require_loopfree(g, "cycle_swap");
    seq.validate(g);
    const auto& v = seq.vertices;
    LoopyMultigraph cur = g;
    SwapTrace trace = SwapTrace::starting_at(g);
    std::size_t k = seq.m();
    for (;;) {
        // swap the multiple end pair against the last interior edge
        Swap s{v[0], v[2 * k - 1], v[2 * k - 2], v[2 * k - 3]};
        trace.record(cur, s);
        cur.apply_swap(s);
        if (k == 2)
            break;
        VertexPair carry(v[0], v[2 * k - 3]);
        // recurse on the prefix only if the carried pair turned non-simple
        // and is not the allowed odd pair {v1,v2}
        if (cur.multiplicity(carry) >= 2 && v[2 * k - 3] != v[1])
            --k;
        else
            break;
    }
    return {std::move(trace), std::move(cur)};
}

bool DescentContext::pair_less(VertexPair p, VertexPair q) const {
    std::uint32_t p_hi = std::max(vertex_rank[p.a], vertex_rank[p.b]);
    std::uint32_t p_lo = std::min(vertex_rank[p.a], vertex_rank[p.b]);
    std::uint32_t q_hi = std::max(vertex_rank[q.a], vertex_rank[q.b]);
    std::uint32_t q_lo = std::min(vertex_rank[q.a], vertex_rank[q.b]);
    return p_hi != q_hi ? p_hi < q_hi : p_lo < q_lo;
}

DescentContext DescentContext::build(const LoopyMultigraph& g) {
    require_loopfree(g, "descent");
    if (g.is_simple())
        throw domain_error("descent: graph is already simple");
    const std::size_t n = g.vertex_count();
    DescentContext ctx;
    auto degrees = g.degree_vector();
    std::vector<Vertex> by_rank(n);
    std::iota(by_rank.begin(), by_rank.end(), 0);
    std::stable_sort(by_rank.begin(), by_rank.end(),
                     [&](Vertex a, Vertex b) { return degrees[a] < degrees[b]; });
    ctx.vertex_rank.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        ctx.vertex_rank[by_rank[i]] = static_cast<std::uint32_t>(i);

    std::optional<VertexPair> max_pair;
    for (const auto& [p, m] : g.entries())
        if (m >= 2 && (!max_pair || ctx.pair_less(*max_pair, p)))
            max_pair = p;
    if (!max_pair)
        throw internal_error("descent: non-simple graph without a multiple edge");
    ctx.u1 = ctx.rank_less(max_pair->a, max_pair->b) ? max_pair->b : max_pair->a;
    ctx.u2 = ctx.rank_less(max_pair->a, max_pair->b) ? max_pair->a : max_pair->b;

    ctx.ordinary.assign(n, false);
    ctx.in_v1.assign(n, false);
    ctx.in_v2.assign(n, false);
    ctx.small_vertex.assign(n, false);
    ctx.large_vertex.assign(n, false);
    for (Vertex v = 0; v < n; ++v) {
        if (v == ctx.u1 || v == ctx.u2)
            continue;
        ctx.ordinary[v] = true;
        ctx.in_v1[v] = g.multiplicity(VertexPair(v, ctx.u1)) >= 1;
        ctx.in_v2[v] = g.multiplicity(VertexPair(v, ctx.u2)) >= 1;
        if (ctx.rank_less(v, ctx.u1))
            ctx.small_vertex[v] = true;
        else
            ctx.large_vertex[v] = true;
        if (ctx.large_vertex[v])
            ctx.large_list.push_back(v);
    }
    return ctx;
}

bool graph_order_less(const LoopyMultigraph& a, const LoopyMultigraph& b) {
    require_loopfree(a, "graph_order_less");
    require_loopfree(b, "graph_order_less");
    require_same_degrees(a, b, "graph_order_less");
    if (b.is_simple())
        return false;
    if (a.is_simple())
        return true;
    // both non-simple: compare the maximal non-simple pairs under the shared order
    DescentContext ca = DescentContext::build(a);
    VertexPair max_a{0, 0}, max_b{0, 0};
    bool seen_a = false, seen_b = false;
    for (const auto& [p, m] : a.entries())
        if (m >= 2 && (!seen_a || ca.pair_less(max_a, p))) {
            max_a = p;
            seen_a = true;
        }
    for (const auto& [p, m] : b.entries())
        if (m >= 2 && (!seen_b || ca.pair_less(max_b, p))) {
            max_b = p;
            seen_b = true;
        }
    if (ca.pair_less(max_a, max_b))
        return true;
    if (ca.pair_less(max_b, max_a))
        return false;
    return a.multiplicity(max_a) < b.multiplicity(max_b);
}

namespace {

struct PatternOne {
    Vertex x; // in the complement of V1
    Vertex y; // small or in the complement of V2
};

std::vector<PatternOne> find_pattern_one(const LoopyMultigraph& g, const DescentContext& ctx) {
    std::vector<PatternOne> out;
    for (const auto& [p, m] : g.entries()) {
        Vertex cand[2][2] = {{p.a, p.b}, {p.b, p.a}};
        for (const auto& c : cand) {
            Vertex x = c[0], y = c[1];
            if (!ctx.ordinary[x] || !ctx.ordinary[y])
                continue;
            if (!ctx.in_v1[x] && (ctx.small_vertex[y] || !ctx.in_v2[y]))
                out.push_back(PatternOne{x, y});
        }
    }
    return out;
}

struct PatternThree {
    Vertex v1, v2, v3, v4;
};

std::vector<PatternThree> find_pattern_three(const LoopyMultigraph& g, const DescentContext& ctx) {
    std::vector<PatternThree> out;
    const std::size_t n = g.vertex_count();
    for (Vertex a = 0; a < n; ++a) {
        if (!ctx.ordinary[a])
            continue;
        bool adj_small = false;
        Vertex witness_small = 0;
        for (Vertex s = 0; s < n; ++s)
            if (ctx.small_vertex[s] && s != a && g.multiplicity(VertexPair(a, s)) >= 1) {
                adj_small = true;
                witness_small = s;
                break;
            }
        if (!adj_small)
            continue;
        for (Vertex big : ctx.large_list) {
            if (big == a || g.multiplicity(VertexPair(a, big)) >= 1)
                continue;
            for (Vertex w = 0; w < n; ++w) {
                if (ctx.ordinary[w] && !ctx.in_v1[w] && g.multiplicity(VertexPair(big, w)) >= 1)
                    out.push_back(PatternThree{a, witness_small, big, w});
            }
        }
    }
    return out;
}

struct PatternFive {
    Vertex x;      // small, attached to u2, with no small neighbour
    Vertex w1, w2; // an adjacent small pair
};

std::vector<PatternFive> find_pattern_five(const LoopyMultigraph& g, const DescentContext& ctx) {
    std::vector<PatternFive> out;
    const std::size_t n = g.vertex_count();
    std::vector<std::pair<Vertex, Vertex>> small_edges;
    for (const auto& [p, m] : g.entries())
        if (ctx.ordinary[p.a] && ctx.ordinary[p.b] && ctx.small_vertex[p.a] && ctx.small_vertex[p.b])
            small_edges.emplace_back(p.a, p.b);
    if (small_edges.empty())
        return out;
    for (Vertex x = 0; x < n; ++x) {
        if (!ctx.small_vertex[x] || !ctx.in_v2[x] || !ctx.rank_less(x, ctx.u2))
            continue;
        bool has_small_neighbor = false;
        for (Vertex s = 0; s < n; ++s)
            if (ctx.small_vertex[s] && s != x && g.multiplicity(VertexPair(x, s)) >= 1) {
                has_small_neighbor = true;
                break;
            }
        if (has_small_neighbor)
            continue;
        for (const auto& [w1, w2] : small_edges)
            out.push_back(PatternFive{x, w1, w2});
    }
    return out;
}

} // namespace

std::pair<SwapTrace, LoopyMultigraph> descent_step(const LoopyMultigraph& g, Picker picker) {
    DescentContext ctx = DescentContext::build(g);

    auto ones = find_pattern_one(g, ctx);
    if (!ones.empty()) {
        const PatternOne& w = ones[picker.pick(ones.size())];
        Swap s{ctx.u1, ctx.u2, w.y, w.x};
        SwapTrace trace = SwapTrace::starting_at(g);
        trace.record(g, s);
        LoopyMultigraph next = g;
        next.apply_swap(s);
        return {std::move(trace), std::move(next)};
    }

    auto threes = find_pattern_three(g, ctx);
    if (!threes.empty()) {
        const PatternThree& w = threes[picker.pick(threes.size())];
        CycleSequence seq;
        seq.vertices = {ctx.u1, w.v4, w.v3, w.v1, w.v2, ctx.u2};
        return cycle_swap(g, seq);
    }

    auto fives = find_pattern_five(g, ctx);
    if (!fives.empty()) {
        const PatternFive& w = fives[picker.pick(fives.size())];
        CycleSequence seq;
        seq.vertices = {ctx.u1, w.x, ctx.u2, w.w1, w.w2, ctx.u2};
        return cycle_swap(g, seq);
    }

    EgCheck eg = erdos_gallai(DegreeSequence::of_graph(g));
    if (eg.graphical)
        throw internal_error("descent_step: no pattern found although the degree sequence is graphical");
    throw NotGraphicalError("descent_step: no pattern exists; degree sequence is not graphical (" + eg.witness() + ")",
                            eg.violated_k);
}

SwapTrace simplify_via_descent(const LoopyMultigraph& g, Picker picker) {
    auto [cur, trace] = eliminate_loops(g, picker);
    while (!cur.is_simple()) {
        auto [step_trace, next] = descent_step(cur, picker);
        for (const TraceStep& st : step_trace.steps) {
            trace.record(cur, st.swap);
            cur.apply_swap(st.swap);
        }
        if (!(cur == next))
            throw internal_error("simplify_via_descent: replayed descent step diverged");
    }
    return trace;
}

} // namespace swapsmith
