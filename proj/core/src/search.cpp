#include "daisy/search.hpp"

#include "daisy/construct.hpp"

#include <algorithm>
#include <chrono>

namespace daisy {

namespace {

// Enumerates daisy petal pools through one fixed edge with at most one edge
// of the pool's copies not set IN. Used for both violation detection
// (missing == 0) and unit propagation (missing == 1, edge undecided).
struct ThroughEdgeScan {
    int n = 0;
    DaisyShape shape{};
    const std::uint64_t* in_mask = nullptr;   // exact solver masks, or
    const std::uint64_t* out_mask = nullptr;  // null when scanning a family
    const UniformFamily* family = nullptr;

    std::vector<int> stem;
    std::vector<int> pool;       // petal pool under construction, sorted
    std::vector<int> candidates; // vertices outside stem and X
    bool violated = false;
    std::vector<std::uint64_t> units;

    bool edge_in(std::uint64_t rank) const {
        if (family) return family->contains_rank(rank);
        return (*in_mask >> rank) & 1;
    }
    bool edge_out(std::uint64_t rank) const {
        if (family) return !family->contains_rank(rank);
        return (*out_mask >> rank) & 1;
    }

    // status of the s-subsets of pool that contain pool[last]: returns false
    // to prune (an OUT edge kills every extension; so does missing > 1).
    bool absorb_new_subsets(int added, int& missing, std::uint64_t& missing_rank) {
        const int s = shape.s;
        const int have = static_cast<int>(pool.size());
        std::vector<int> idx(static_cast<std::size_t>(s) - 1);
        for (int i = 0; i < s - 1; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
        std::vector<int> sub(static_cast<std::size_t>(s));
        std::vector<int> edge(static_cast<std::size_t>(shape.r));
        // positions within pool excluding `added`'s position
        std::vector<int> others;
        others.reserve(static_cast<std::size_t>(have) - 1);
        for (int v : pool)
            if (v != added) others.push_back(v);
        if (static_cast<int>(others.size()) < s - 1) return true;
        do {
            for (int i = 0; i < s - 1; ++i)
                sub[static_cast<std::size_t>(i)] =
                    others[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)]) - 1];
            sub[static_cast<std::size_t>(s) - 1] = added;
            std::sort(sub.begin(), sub.end());
            std::merge(stem.begin(), stem.end(), sub.begin(), sub.end(), edge.begin());
            std::uint64_t rank = colex_rank(edge);
            if (edge_in(rank)) continue;
            if (edge_out(rank)) return false;
            if (missing == 1 && rank != missing_rank) return false;
            missing = 1;
            missing_rank = rank;
        } while (next_subset_colex(idx, static_cast<int>(others.size())));
        return true;
    }

    void extend(std::size_t from, int missing, std::uint64_t missing_rank) {
        if (violated) return;
        if (static_cast<int>(pool.size()) == shape.t) {
            if (missing == 0)
                violated = true;
            else
                units.push_back(missing_rank);
            return;
        }
        const int need = shape.t - static_cast<int>(pool.size());
        for (std::size_t i = from;
             i + static_cast<std::size_t>(need) <= candidates.size() && !violated; ++i) {
            int v = candidates[i];
            pool.insert(std::upper_bound(pool.begin(), pool.end(), v), v);
            int miss = missing;
            std::uint64_t miss_rank = missing_rank;
            if (absorb_new_subsets(v, miss, miss_rank)) extend(i + 1, miss, miss_rank);
            pool.erase(std::find(pool.begin(), pool.end(), v));
        }
    }

    // Scans all daisies through `edge`; fills `violated` and `units`.
    void run(std::span<const int> edge) {
        violated = false;
        units.clear();
        const int r = shape.r;
        const int s = shape.s;
        std::vector<int> idx(static_cast<std::size_t>(s));
        for (int i = 0; i < s; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
        do {
            stem.clear();
            pool.clear();
            std::size_t xi = 0;
            for (int i = 1; i <= r; ++i) {
                if (xi < idx.size() && idx[xi] == i) {
                    pool.push_back(edge[static_cast<std::size_t>(i) - 1]);
                    ++xi;
                } else {
                    stem.push_back(edge[static_cast<std::size_t>(i) - 1]);
                }
            }
            candidates.clear();
            for (int v = 1; v <= n; ++v) {
                if (std::binary_search(stem.begin(), stem.end(), v)) continue;
                if (std::binary_search(pool.begin(), pool.end(), v)) continue;
                candidates.push_back(v);
            }
            extend(0, 0, 0);
            if (violated) return;
        } while (next_subset_colex(idx, r));
    }
};

struct ExactSolver {
    int n;
    int edge_count;
    DaisyShape shape;
    std::uint64_t in_mask = 0;
    std::uint64_t out_mask = 0;
    int in_count = 0;
    std::uint64_t best_mask = 0;
    int best_count = -1;
    std::uint64_t nodes = 0;
    std::uint64_t max_nodes;
    std::chrono::steady_clock::time_point deadline{};
    bool use_deadline = false;
    bool aborted = false;
    std::vector<std::vector<int>> edge_of_rank;
    ThroughEdgeScan scan;

    bool budget_ok() {
        if (nodes > max_nodes) return false;
        if (use_deadline && (nodes & 0xfff) == 0 &&
            std::chrono::steady_clock::now() > deadline)
            return false;
        return true;
    }

    void dfs(int idx) {
        if (aborted) return;
        ++nodes;
        if (!budget_ok()) {
            aborted = true;
            return;
        }
        while (idx < edge_count && (((in_mask | out_mask) >> idx) & 1)) ++idx;
        int remaining = 0;
        for (int i = idx; i < edge_count; ++i)
            remaining += static_cast<int>(~(out_mask >> i) & 1);
        if (in_count + remaining <= best_count) return;
        if (idx == edge_count) {
            best_count = in_count;
            best_mask = in_mask;
            return;
        }

        // IN branch
        const std::uint64_t bit = UINT64_C(1) << idx;
        in_mask |= bit;
        ++in_count;
        scan.in_mask = &in_mask;
        scan.out_mask = &out_mask;
        scan.run(edge_of_rank[static_cast<std::size_t>(idx)]);
        if (!scan.violated) {
            std::uint64_t forced = 0;
            for (std::uint64_t rank : scan.units) forced |= UINT64_C(1) << rank;
            forced &= ~(in_mask | out_mask);
            out_mask |= forced;
            if (in_count > best_count) {
                best_count = in_count;
                best_mask = in_mask;
            }
            dfs(idx + 1);
            out_mask &= ~forced;
        }
        in_mask &= ~bit;
        --in_count;
        if (aborted) return;

        // OUT branch
        out_mask |= bit;
        dfs(idx + 1);
        out_mask &= ~bit;
    }
};

UniformFamily family_from_mask(int n, int r, std::uint64_t mask) {
    UniformFamily f(n, r);
    for (std::uint64_t i = 0; i < f.rank_count(); ++i)
        if ((mask >> i) & 1) f.insert_rank(i);
    return f;
}

UniformFamily greedy_daisy_free(int n, const DaisyShape& shape) {
    UniformFamily f(n, shape.r);
    std::vector<int> edge;
    for (std::uint64_t rank = 0; rank < f.rank_count(); ++rank) {
        colex_unrank_into(rank, shape.r, edge);
        f.insert_rank(rank);
        if (daisy_through_edge(f, shape, edge)) f.erase_rank(rank);
    }
    return f;
}

// Construction-based lower bound when the shape matches an instance of the
// independence family: s = 2, t - 2 a prime power q, n = q^r - 1.
std::optional<UniformFamily> construction_seed(int n, const DaisyShape& shape) {
    if (shape.s != 2 || shape.t < 4) return std::nullopt;
    std::uint64_t q = static_cast<std::uint64_t>(shape.t) - 2;
    std::uint32_t p = 0;
    int k = 0;
    try {
        factor_prime_power(q, p, k);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    std::uint64_t power = 1;
    for (int i = 0; i < shape.r; ++i) {
        power *= q;
        if (power > static_cast<std::uint64_t>(n) + 1) return std::nullopt;
    }
    if (power != static_cast<std::uint64_t>(n) + 1) return std::nullopt;
    return construct_independent_family({q, shape.r, 0});
}

} // namespace

bool daisy_through_edge(const UniformFamily& f, const DaisyShape& shape,
                        std::span<const int> edge) {
    if (!shape.fits(f.n())) return false;
    ThroughEdgeScan scan;
    scan.n = f.n();
    scan.shape = shape;
    scan.family = &f;
    // Family scan: only full copies matter, so record units but ignore them.
    std::vector<int> e(edge.begin(), edge.end());
    scan.run(e);
    return scan.violated;
}

SearchResult max_daisy_free(int n, DaisyShape shape, const SearchBudget& budget) {
    shape.validate();
    if (n < shape.r) throw std::invalid_argument("n must be at least r");

    if (!shape.fits(n)) {
        // No copy fits, so the full layer is daisy-free.
        SearchResult out{0, UniformFamily::complete(n, shape.r), true, 0};
        out.best_size = out.best_family.size();
        return out;
    }

    UniformFamily seed = greedy_daisy_free(n, shape);
    if (auto constructed = construction_seed(n, shape)) {
        if (constructed->size() > seed.size() &&
            !find_daisy(*constructed, shape).has_value())
            seed = *constructed;
    }

    const std::uint64_t edge_count = binom(n, shape.r);
    if (edge_count > budget.exact_cap || edge_count > 63) {
        SearchResult out{seed.size(), seed, false, 0};
        return out;
    }

    ExactSolver solver;
    solver.n = n;
    solver.edge_count = static_cast<int>(edge_count);
    solver.shape = shape;
    solver.max_nodes = budget.max_nodes;
    if (budget.max_millis > 0) {
        solver.use_deadline = true;
        solver.deadline = std::chrono::steady_clock::now() +
                          std::chrono::milliseconds(budget.max_millis);
    }
    solver.scan.n = n;
    solver.scan.shape = shape;
    solver.edge_of_rank.resize(edge_count);
    for (std::uint64_t rank = 0; rank < edge_count; ++rank)
        solver.edge_of_rank[rank] = colex_unrank(rank, shape.r);

    // Seed the bound; the seed family is kept unless the search beats it.
    solver.best_count = static_cast<int>(seed.size());
    solver.dfs(0);

    SearchResult out{0, seed, !solver.aborted, solver.nodes};
    if (solver.best_count > static_cast<int>(seed.size())) {
        out.best_family = family_from_mask(n, shape.r, solver.best_mask);
        out.best_size = solver.best_count;
    } else {
        out.best_size = seed.size();
    }
    return out;
}

} // namespace daisy
