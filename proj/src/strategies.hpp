#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "graphicality.hpp"
#include "multigraph.hpp"
#include "rng.hpp"

namespace swapsmith {

// Resolves the strategies' nondeterministic picks: deterministic mode takes
// the lowest candidate (by index or pair order), seeded mode draws uniformly.
class Picker {
public:
    Picker() = default;
    explicit Picker(Rng& rng) : rng_(&rng) {}

    std::size_t pick(std::size_t candidate_count) {
        return rng_ ? static_cast<std::size_t>(rng_->below(candidate_count)) : 0;
    }
    bool seeded() const { return rng_ != nullptr; }

private:
    Rng* rng_ = nullptr;
};

// Blue multiset of G-edge copies and red multiset of H-edge copies with the
// Devil's pair kept blue and every vertex balanced (same blue as red degree).
// Built from the per-pair surplus, so no pair carries both colours; retries
// only ever uncolour, which preserves all three properties.
class Colouring {
public:
    static Colouring surplus(const LoopyMultigraph& g, const LoopyMultigraph& h, VertexPair e);

    Multiplicity blue(VertexPair p) const { return blue_.multiplicity(p); }
    Multiplicity red(VertexPair p) const { return red_.multiplicity(p); }
    VertexPair devil_pair() const { return e_; }

    std::optional<Vertex> pick_red_neighbor(Vertex v, Picker& picker) const;
    std::optional<Vertex> pick_blue_neighbor(Vertex v, Picker& picker) const;

    // removes one colour copy from each edge of the alternating cycle
    // v1 -red- v2 -blue- u1 -red- u2 -blue- v1
    void uncolour_cycle(Vertex v1, Vertex v2, Vertex u1, Vertex u2);

    std::uint64_t coloured_count() const { return blue_.edge_count() + red_.edge_count(); }
    bool devil_pair_blue() const { return blue_.multiplicity(e_) >= 1; }
    bool balanced() const;
    bool bichromatic_pair_exists() const;

private:
    LoopyMultigraph blue_;
    LoopyMultigraph red_;
    VertexPair e_;
};

// sum over unordered pairs of |mult_G - mult_H|; requires equal degrees
std::uint64_t total_distance(const LoopyMultigraph& g, const LoopyMultigraph& h);

struct TargetStep {
    Swap swap;
    std::uint32_t uncoloured_cycles = 0; // retries taken before a swap was found
};

// One Angel move in the game with target h: removes a copy of the Devil's
// pair and a non-incident edge so that the total distance to h drops by at
// least two. Requires loop-free g, h with equal degrees and
// mult_g(devil_pick) > mult_h(devil_pick).
TargetStep angel_target_step(const LoopyMultigraph& g, const LoopyMultigraph& h, VertexPair devil_pick,
                             Picker picker = {});

// swaps every loop against a non-incident edge until none remain; requires a
// graphical degree sequence (which guarantees a partner always exists)
std::pair<LoopyMultigraph, SwapTrace> eliminate_loops(const LoopyMultigraph& g, Picker picker = {});

// repeatedly self-picks the lowest multi-edge and answers with
// angel_target_step against a fixed simple graph with the same degrees
SwapTrace simplify_via_target(const LoopyMultigraph& g, Picker picker = {});

// sequence v_1..v_2m used by cycle_swap; see validate() for the side
// conditions (distinctness, edges at even positions, multi-edge at the ends)
struct CycleSequence {
    std::vector<Vertex> vertices;

    std::size_t m() const { return vertices.size() / 2; }
    void validate(const LoopyMultigraph& g) const; // throws on any violated condition
};

// Reduces the multiplicity of {v_1, v_2m} by one through admissible swaps.
// The only pairs that may turn non-simple are the odd pairs
// {v_{2j-1}, v_{2j}} that already carried an edge.
std::pair<SwapTrace, LoopyMultigraph> cycle_swap(const LoopyMultigraph& g, const CycleSequence& seq);

// The ordered-descent vocabulary, recomputed per step: a degree-respecting
// total vertex order, the maximal non-simple pair {u1,u2}, and the
// classification of the remaining (ordinary) vertices around it.
struct DescentContext {
    std::vector<std::uint32_t> vertex_rank; // rank[v]: position in the order (degree asc, index asc)
    Vertex u1 = 0;                          // higher endpoint of the maximal non-simple pair
    Vertex u2 = 0;
    std::vector<bool> ordinary;
    std::vector<bool> in_v1; // ordinary vertices with an edge to u1
    std::vector<bool> in_v2;
    std::vector<bool> small_vertex; // ordinary, below u1 in the order
    std::vector<bool> large_vertex; // ordinary, above u1
    std::vector<Vertex> large_list;

    std::size_t large_count() const { return large_list.size(); }
    bool rank_less(Vertex a, Vertex b) const { return vertex_rank[a] < vertex_rank[b]; }
    bool pair_less(VertexPair p, VertexPair q) const;

    // requires a loop-free, non-simple graph
    static DescentContext build(const LoopyMultigraph& g);
};

// strict order on loop-free multigraphs with the same degrees: smaller means
// the worst non-simple pair moved down (or its multiplicity dropped)
bool graph_order_less(const LoopyMultigraph& a, const LoopyMultigraph& b);

// One descent move: finds a pattern that lowers the graph order and plays it.
// Throws NotGraphicalError when no pattern exists (after checking that the
// degree sequence indeed fails the graphicality test).
std::pair<SwapTrace, LoopyMultigraph> descent_step(const LoopyMultigraph& g, Picker picker = {});

// eliminate_loops followed by descent steps until the graph is simple
SwapTrace simplify_via_descent(const LoopyMultigraph& g, Picker picker = {});

} // namespace swapsmith
