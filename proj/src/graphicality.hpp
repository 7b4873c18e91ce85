#pragma once

#include <cstdint>
#include <vector>

#include "multigraph.hpp"

namespace swapsmith {

// weakly decreasing list of nonnegative integers
class DegreeSequence {
public:
    DegreeSequence() = default;

    // validates sortedness; throws usage error on out-of-order input
    static DegreeSequence from_sorted(std::vector<std::uint64_t> d);
    static DegreeSequence of_graph(const LoopyMultigraph& g);

    const std::vector<std::uint64_t>& values() const { return d_; }
    std::size_t size() const { return d_.size(); }
    std::uint64_t sum() const;

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

private:
    std::vector<std::uint64_t> d_;
};

struct EgCheck {
    bool graphical = false;
    bool odd_sum = false;
    std::size_t violated_k = 0; // 1-based index of the first violated inequality, 0 if none

    std::string witness() const;
};

// graphical iff the degree sum is even and, for each 1 <= k <= n,
//   sum_{i<=k} d_i  <=  k(k-1) + sum_{i>k} min(d_i, k)
EgCheck erdos_gallai(const DegreeSequence& d);

// convenience for callers that already hold a graph
bool has_graphical_degrees(const LoopyMultigraph& g);

// simple graph realizing d exactly (vertex i gets degree d_i), built by the
// Havel-Hakimi greedy reduction; deterministic. Throws NotGraphicalError.
LoopyMultigraph realize_simple(const DegreeSequence& d);

// same construction for an arbitrary (unsorted) per-vertex degree vector
LoopyMultigraph realize_simple_for(const std::vector<std::uint64_t>& degree_vector);

// simple graph with the same per-vertex degrees as g
LoopyMultigraph realize_simple_like(const LoopyMultigraph& g);

struct PairCap {
    VertexPair pair;
    Multiplicity cap = 0;
};

// loop-free multigraph with degrees d, greedily spreading multiplicity so the
// maximum stays low, honouring per-pair caps when satisfiable (a bounded
// exact search backs the greedy up when a cap corners it).
// Requires an even sum and max degree <= sum of the others.
LoopyMultigraph realize_loopfree_multigraph(const DegreeSequence& d, const std::vector<PairCap>& caps = {});
LoopyMultigraph realize_loopfree_for(const std::vector<std::uint64_t>& degree_vector,
                                     const std::vector<PairCap>& caps = {});

} // namespace swapsmith
