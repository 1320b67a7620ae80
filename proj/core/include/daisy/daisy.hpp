#ifndef DAISY_DAISY_HPP
#define DAISY_DAISY_HPP

#include "daisy/family.hpp"

#include <optional>
#include <vector>

namespace daisy {

/// Daisy pattern: edges are stem + X over all s-subsets X of a t-element
/// petal pool disjoint from the stem.
struct DaisyShape {
    int r;
    int s;
    int t;

    // Throws unless 1 <= s <= t and s <= r.
    void validate() const;
    // True when a copy fits on [n]: r - s + t <= n.
    bool fits(int n) const { return r - s + t <= n; }
};

struct DaisyWitness {
    std::vector<int> stem;   // r - s vertices
    std::vector<int> petals; // t vertices, disjoint from stem
};

// True iff w certifies a daisy of this shape inside f (all edges present).
bool witness_valid(const UniformFamily& f, const DaisyShape& shape,
                   const DaisyWitness& w);

/// Exhaustive daisy detection. Builds the per-stem petal links from the
/// member edges, then searches each link for a t-set whose s-subsets are all
/// present (clique search with a greedy colouring bound when s = 2,
/// backtracking in increasing vertex order otherwise). With workers == 1 the
/// returned witness is the first in scan order: stems by colex rank, petals
/// extended smallest vertex first. Parallel runs split the stems but still
/// reduce to the minimal stem rank, so the result does not depend on
/// scheduling.
std::optional<DaisyWitness> find_daisy(const UniformFamily& f, DaisyShape shape,
                                       int workers = 1);

} // namespace daisy

#endif
