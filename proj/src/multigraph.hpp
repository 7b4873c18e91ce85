#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace swapsmith {

using Vertex = std::uint32_t;
using Multiplicity = std::uint32_t;

// unordered pair of vertices, stored with a <= b; a == b is a loop
struct VertexPair {
    Vertex a = 0;
    Vertex b = 0;

    VertexPair() = default;
    VertexPair(Vertex u, Vertex v) : a(u < v ? u : v), b(u < v ? v : u) {}

    bool is_loop() const { return a == b; }
    bool contains(Vertex v) const { return a == v || b == v; }
    bool incident_to(const VertexPair& o) const { return contains(o.a) || contains(o.b); }

    friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

enum class EdgeClass { Loop, MultipleNonLoop, Simple };

// the double edge swap (v1,v2)(v3,v4): removes one edge of type {v1,v2} and
// one of type {v3,v4}, adds one of type {v2,v3} and one of type {v4,v1};
// the ordering of the quadruple selects between the two swap variants
struct Swap {
    Vertex v1 = 0;
    Vertex v2 = 0;
    Vertex v3 = 0;
    Vertex v4 = 0;

    VertexPair removed_first() const { return {v1, v2}; }
    VertexPair removed_second() const { return {v3, v4}; }
    VertexPair added_first() const { return {v2, v3}; }
    VertexPair added_second() const { return {v4, v1}; }

    friend bool operator==(const Swap&, const Swap&) = default;
};

// Undirected multigraph on dense vertex indices 0..n-1 with loops allowed.
// Multiplicities live in a sorted association list that only holds nonzero
// entries, so equal graphs compare equal and fingerprints are cheap.
class LoopyMultigraph {
public:
    using Entry = std::pair<VertexPair, Multiplicity>;

    LoopyMultigraph() = default;
    explicit LoopyMultigraph(std::size_t n) : n_(n) {}

    std::size_t vertex_count() const { return n_; }
    const std::vector<Entry>& entries() const { return mult_; }

    Multiplicity multiplicity(VertexPair p) const;
    Multiplicity multiplicity(Vertex u, Vertex v) const { return multiplicity(VertexPair(u, v)); }

    // adjusts the multiplicity of p by delta, keeping canonical form
    void add_edges(VertexPair p, std::int64_t delta);

    // stub count: a loop contributes two
    std::uint64_t degree(Vertex v) const;
    std::vector<std::uint64_t> degree_vector() const;
    // degrees sorted weakly decreasing
    std::vector<std::uint64_t> degree_sequence() const;

    std::uint64_t edge_count() const;
    std::uint64_t loop_count() const;
    bool has_loops() const;
    bool is_simple() const;

    std::optional<EdgeClass> classify(VertexPair p) const;

    // true iff the two edges share no vertex and at least one is non-simple;
    // both pairs must be present (throws otherwise)
    bool is_admissible(VertexPair e, VertexPair e2) const;

    bool can_apply(const Swap& s) const;
    void apply_swap(const Swap& s);

    // copy of this graph with all loops removed (degrees drop accordingly)
    LoopyMultigraph without_loops() const;

    std::uint64_t fingerprint() const;
    std::string fingerprint_hex() const;

    friend bool operator==(const LoopyMultigraph&, const LoopyMultigraph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Entry> mult_; // sorted by pair, multiplicities > 0

    void check_vertex(Vertex v) const;
};

// value-style convenience used all over the tests
LoopyMultigraph apply_swap(LoopyMultigraph g, const Swap& s);

// replayable swap sequence pinned to its starting graph
struct TraceStep {
    Swap swap;
    bool admissible = false;
};

struct SwapTrace {
    std::size_t n = 0;
    std::uint64_t fingerprint = 0;
    std::vector<TraceStep> steps;

    static SwapTrace starting_at(const LoopyMultigraph& g);
    void record(const LoopyMultigraph& g_before, const Swap& s);
    std::size_t size() const { return steps.size(); }
};

// folds apply_swap over the trace; throws ReplayError on a fingerprint
// mismatch or on the first illegal swap
LoopyMultigraph replay(const SwapTrace& trace, const LoopyMultigraph& g);

// replay that additionally reports whether every swap was admissible at its turn
LoopyMultigraph replay_checked(const SwapTrace& trace, const LoopyMultigraph& g, bool& all_admissible);

} // namespace swapsmith
