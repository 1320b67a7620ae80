#include "daisy/search.hpp"

#include "daisy/construct.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace daisy;

namespace {

// 2^binom(n,r) enumeration using the detector as the daisy check.
std::uint64_t tiny_oracle(int n, DaisyShape shape) {
    UniformFamily base(n, shape.r);
    const std::uint64_t count = base.rank_count();
    REQUIRE(count <= 12);
    std::uint64_t best = 0;
    for (std::uint64_t mask = 0; mask < (UINT64_C(1) << count); ++mask) {
        UniformFamily f(n, shape.r);
        for (std::uint64_t i = 0; i < count; ++i)
            if ((mask >> i) & 1) f.insert_rank(i);
        if (!find_daisy(f, shape).has_value()) best = std::max(best, f.size());
    }
    return best;
}

} // namespace

TEST_CASE("exact solver matches full enumeration at n = 5") {
    DaisyShape shape{3, 2, 4};
    std::uint64_t oracle = tiny_oracle(5, shape);
    CHECK(oracle == 8);
    SearchResult res = max_daisy_free(5, shape);
    CHECK(res.proved_optimal);
    CHECK(res.best_size == oracle);
    CHECK_FALSE(find_daisy(res.best_family, shape).has_value());
}

TEST_CASE("exact solver value at n = 6 and density monotonicity") {
    DaisyShape shape{3, 2, 4};
    SearchResult r5 = max_daisy_free(5, shape);
    SearchResult r6 = max_daisy_free(6, shape);
    CHECK(r6.proved_optimal);
    CHECK(r6.best_size == 16);
    CHECK_FALSE(find_daisy(r6.best_family, shape).has_value());
    // best(n+1)/C(n+1,r) <= best(n)/C(n,r) on solved instances
    CHECK(Rational(BigInt(r6.best_size), binom_big(6, 3)) <=
          Rational(BigInt(r5.best_size), binom_big(5, 3)));
}

TEST_CASE("n = 7 is seeded by the independence construction") {
    DaisyShape shape{3, 2, 4};
    SearchBudget budget;
    budget.max_nodes = 200'000; // enough to finish; seed guarantees >= 28 regardless
    SearchResult res = max_daisy_free(7, shape, budget);
    CHECK(res.best_size >= 28);
    CHECK_FALSE(find_daisy(res.best_family, shape).has_value());
}

TEST_CASE("s = t forces the empty family") {
    SearchResult res = max_daisy_free(5, {3, 2, 2});
    CHECK(res.proved_optimal);
    CHECK(res.best_size == 0);
}

TEST_CASE("non-fitting shapes admit the complete layer") {
    SearchResult res = max_daisy_free(5, {3, 2, 5}); // needs 6 vertices
    CHECK(res.proved_optimal);
    CHECK(res.best_size == binom(5, 3));
}

TEST_CASE("budget exhaustion reports best-so-far without proof") {
    SearchBudget tiny;
    tiny.max_nodes = 10;
    SearchResult res = max_daisy_free(6, {3, 2, 4}, tiny);
    CHECK_FALSE(res.proved_optimal);
    CHECK(res.best_size >= 1); // greedy seed still stands
    CHECK_FALSE(find_daisy(res.best_family, {3, 2, 4}).has_value());
}

TEST_CASE("heuristic mode above the exact cap is deterministic and daisy-free") {
    DaisyShape shape{3, 2, 4};
    SearchResult a = max_daisy_free(9, shape); // binom(9,3) = 84 > 40
    SearchResult b = max_daisy_free(9, shape);
    CHECK_FALSE(a.proved_optimal);
    CHECK(a.best_size == b.best_size);
    CHECK(a.best_family == b.best_family);
    CHECK_FALSE(find_daisy(a.best_family, shape).has_value());
    CHECK(a.best_size >= 28); // no worse than the greedy baseline at n = 9
}

TEST_CASE("daisy_through_edge is consistent with the detector") {
    UniformFamily f = UniformFamily::complete(6, 3);
    std::vector<int> edge{1, 2, 3};
    CHECK(daisy_through_edge(f, {3, 2, 4}, edge));
    UniformFamily bases = construct_independent_family({2, 3, 0});
    bool any = false;
    bases.for_each_rank([&](std::uint64_t rank) {
        any = any || daisy_through_edge(bases, {3, 2, 4}, colex_unrank(rank, 3));
    });
    CHECK_FALSE(any);
}
