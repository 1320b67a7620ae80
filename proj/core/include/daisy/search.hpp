#ifndef DAISY_SEARCH_HPP
#define DAISY_SEARCH_HPP

#include "daisy/daisy.hpp"

namespace daisy {

struct SearchBudget {
    std::uint64_t max_nodes = UINT64_C(20'000'000);
    std::uint64_t max_millis = 0; // 0 = no wall-clock limit
    std::uint64_t exact_cap = 40; // proved-optimal mode while binom(n,r) <= cap
};

struct SearchResult {
    std::uint64_t best_size = 0;
    UniformFamily best_family;
    bool proved_optimal = false;
    std::uint64_t nodes_explored = 0;
};

/// Largest daisy-free family on [n]. Below the exact cap this is a branch
/// and bound over edges in colex order with lazy per-stem constraints and
/// unit propagation (all but one edge of a daisy in forces the last out);
/// above it, greedy colex insertion with daisy-completion rejection. The
/// initial bound is seeded from the independence construction when the
/// shape matches one.
SearchResult max_daisy_free(int n, DaisyShape shape, const SearchBudget& budget = {});

// True iff f contains a daisy copy of this shape using the given member edge.
bool daisy_through_edge(const UniformFamily& f, const DaisyShape& shape,
                        std::span<const int> edge);

} // namespace daisy

#endif
