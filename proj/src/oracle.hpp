#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "multigraph.hpp"

namespace swapsmith {

// canonical labelled-state key: n plus the sorted nonzero pair-multiplicity list
std::string state_key(const LoopyMultigraph& g);

enum class GraphClass { Simple, LoopFree, Loopy };

inline constexpr std::uint64_t kDefaultStateCap = 1'000'000;

// complete duplicate-free list of labelled graphs of the class whose degree
// vector is exactly degree_vector (vertex i has degree degree_vector[i])
std::vector<LoopyMultigraph> enumerate_graphs(const std::vector<std::uint64_t>& degree_vector,
                                              GraphClass cls,
                                              std::uint64_t result_cap = kDefaultStateCap);

// all distinct admissible-swap successors, one witness swap per state
std::vector<std::pair<Swap, LoopyMultigraph>> admissible_neighbors(const LoopyMultigraph& g);

// successors under arbitrary double edge swaps (incident pairs allowed, so
// loops can appear); lets the admissible and unrestricted walks be compared
std::vector<std::pair<Swap, LoopyMultigraph>> all_swap_neighbors(const LoopyMultigraph& g);

// breadth-first search over admissible swaps; length of the shortest path to
// any simple graph, or nullopt when no simple graph is reachable
std::optional<std::uint64_t> min_admissible_swaps(const LoopyMultigraph& g,
                                                  std::uint64_t state_cap = kDefaultStateCap);

// same search over the unrestricted swap relation
std::optional<std::uint64_t> min_swaps_unrestricted(const LoopyMultigraph& g,
                                                    std::uint64_t state_cap = kDefaultStateCap);

// admissible-swap distance to a simple graph for every state in `states`
// (which must be transition-closed, e.g. a full enumerate_graphs(d, Loopy)
// universe); UINT64_MAX marks unreachable states
std::vector<std::uint64_t> min_swaps_table(const std::vector<LoopyMultigraph>& states);

// every weakly decreasing sequence of the given length with the given sum
std::vector<std::vector<std::uint64_t>> weakly_decreasing_sequences(std::size_t n, std::uint64_t sum);

} // namespace swapsmith
