#include "daisy/daisy.hpp"

#include "daisy/certificate.hpp"
#include "daisy/construct.hpp"

#include <doctest.h>

#include <random>

using namespace daisy;

namespace {

// Independent oracle: scan every (stem, pool) pair outright.
std::optional<DaisyWitness> oracle_find_daisy(const UniformFamily& f, DaisyShape shape) {
    shape.validate();
    if (!shape.fits(f.n()) || f.size() == 0) return std::nullopt;
    const int stem_size = shape.r - shape.s;
    std::vector<int> stem(static_cast<std::size_t>(stem_size));
    for (int i = 0; i < stem_size; ++i) stem[static_cast<std::size_t>(i)] = i + 1;
    do {
        std::vector<int> rest;
        for (int v = 1; v <= f.n(); ++v)
            if (!std::binary_search(stem.begin(), stem.end(), v)) rest.push_back(v);
        std::vector<int> tidx(static_cast<std::size_t>(shape.t));
        for (int i = 0; i < shape.t; ++i) tidx[static_cast<std::size_t>(i)] = i + 1;
        do {
            DaisyWitness w;
            w.stem = stem;
            for (int i : tidx) w.petals.push_back(rest[static_cast<std::size_t>(i) - 1]);
            if (witness_valid(f, shape, w)) return w;
        } while (next_subset_colex(tidx, static_cast<int>(rest.size())));
    } while (stem_size > 0 && next_subset_colex(stem, f.n()));
    return std::nullopt;
}

UniformFamily random_family(int n, int r, double p, std::mt19937_64& rng) {
    UniformFamily f(n, r);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (std::uint64_t rank = 0; rank < f.rank_count(); ++rank)
        if (coin(rng) < p) f.insert_rank(rank);
    return f;
}

} // namespace

TEST_CASE("complete family contains every daisy, first witness is scan-first") {
    UniformFamily all = UniformFamily::complete(5, 3);
    auto w = find_daisy(all, {3, 2, 4});
    REQUIRE(w.has_value());
    CHECK(w->stem == std::vector<int>{1});
    CHECK(w->petals == std::vector<int>{2, 3, 4, 5});
    CHECK(witness_valid(all, {3, 2, 4}, *w));
}

TEST_CASE("the independence family on [7] is (3,2,4)-daisy-free") {
    UniformFamily bases = construct_independent_family({2, 3, 0});
    CHECK_FALSE(find_daisy(bases, {3, 2, 4}).has_value());
    CHECK_FALSE(oracle_find_daisy(bases, {3, 2, 4}).has_value());
}

TEST_CASE("single missing edge: detector routes around the hole like the oracle") {
    for (int n : {6, 7, 8, 9}) {
        UniformFamily f = UniformFamily::complete(n, 3);
        f.erase_rank(0); // drop {1,2,3}
        DaisyShape shape{3, 2, 4};
        auto fast = find_daisy(f, shape);
        auto slow = oracle_find_daisy(f, shape);
        CHECK(fast.has_value() == slow.has_value());
        if (fast) CHECK(witness_valid(f, shape, *fast));
    }
}

TEST_CASE("detector agrees with the oracle on seeded random families") {
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> density_pick(0.2, 0.95);
    int agreements = 0;
    for (int trial = 0; trial < 1200; ++trial) {
        int r = 2 + static_cast<int>(rng() % 3);           // 2..4
        int n = std::max(r + 1, 5 + static_cast<int>(rng() % 5)); // 5..9
        int s = 1 + static_cast<int>(rng() % r);           // 1..r
        int max_t = n - (r - s);
        if (max_t < s) continue;
        int t = s + static_cast<int>(rng() % std::min(4, max_t - s + 1));
        UniformFamily f = random_family(n, r, density_pick(rng), rng);
        DaisyShape shape{r, s, t};
        auto fast = find_daisy(f, shape);
        auto slow = oracle_find_daisy(f, shape);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast) REQUIRE(witness_valid(f, shape, *fast));
        ++agreements;
    }
    CHECK(agreements >= 1000);
}

TEST_CASE("degenerate shapes") {
    SUBCASE("s = t makes any single edge a daisy") {
        UniformFamily f(6, 3);
        std::vector<int> e{2, 4, 6};
        f.insert(e);
        auto w = find_daisy(f, {3, 2, 2});
        REQUIRE(w.has_value());
        CHECK(witness_valid(f, {3, 2, 2}, *w));
    }
    SUBCASE("empty stem (r = s)") {
        UniformFamily f = UniformFamily::complete(6, 2);
        auto w = find_daisy(f, {2, 2, 4});
        REQUIRE(w.has_value());
        CHECK(w->stem.empty());
        CHECK(witness_valid(f, {2, 2, 4}, *w));
    }
    SUBCASE("singleton petals (s = 1)") {
        UniformFamily f = UniformFamily::complete(6, 3);
        auto w = find_daisy(f, {3, 1, 3});
        REQUIRE(w.has_value());
        CHECK(witness_valid(f, {3, 1, 3}, *w));
    }
    SUBCASE("shape that cannot fit reports no witness") {
        UniformFamily f = UniformFamily::complete(5, 3);
        CHECK_FALSE(find_daisy(f, {3, 2, 5}).has_value()); // needs 6 vertices
    }
    SUBCASE("empty family is daisy-free") {
        UniformFamily f(7, 3);
        CHECK_FALSE(find_daisy(f, {3, 2, 4}).has_value());
    }
}

TEST_CASE("shape validation") {
    UniformFamily f = UniformFamily::complete(6, 3);
    CHECK_THROWS_AS(find_daisy(f, {4, 2, 4}), std::invalid_argument); // r mismatch
    CHECK_THROWS_AS(find_daisy(f, {3, 0, 4}), std::invalid_argument);
    CHECK_THROWS_AS(find_daisy(f, {3, 4, 5}), std::invalid_argument); // s > r
    CHECK_THROWS_AS(find_daisy(f, {3, 2, 1}), std::invalid_argument); // t < s
}

TEST_CASE("parallel detection matches sequential outcome") {
    std::mt19937_64 rng(90210);
    for (int trial = 0; trial < 40; ++trial) {
        UniformFamily f = random_family(8, 3, 0.7, rng);
        DaisyShape shape{3, 2, 4};
        auto seq = find_daisy(f, shape, 1);
        auto par = find_daisy(f, shape, 4);
        REQUIRE(seq.has_value() == par.has_value());
        if (par) {
            CHECK(witness_valid(f, shape, *par));
            // min-stem reduction keeps parallel runs deterministic
            CHECK(par->stem == seq->stem);
        }
    }
}

TEST_CASE("assert_daisy_free certificates") {
    UniformFamily bases = construct_independent_family({2, 3, 0});
    Certificate pass = assert_daisy_free(bases, {3, 2, 4});
    CHECK(pass.pass);
    CHECK(pass.mode == "exhaustive");
    CHECK(pass.size == 28);
    CHECK(pass.density == "4/5");
    CHECK_FALSE(pass.witness.has_value());
    CHECK(pass.to_json().find("\"pass\": true") != std::string::npos);

    Certificate fail = assert_daisy_free(UniformFamily::complete(7, 3), {3, 2, 4});
    CHECK_FALSE(fail.pass);
    REQUIRE(fail.witness.has_value());
    CHECK(witness_valid(UniformFamily::complete(7, 3), {3, 2, 4}, *fail.witness));

    Certificate empty = assert_daisy_free(UniformFamily(7, 3), {3, 2, 4});
    CHECK(empty.pass);
}

TEST_CASE("the r=4 instance on [15] is (4,2,4)-daisy-free") {
    UniformFamily f = construct_independent_family({2, 4, 0});
    CHECK(f.size() == 840);
    CHECK_FALSE(find_daisy(f, {4, 2, 4}).has_value());
}

TEST_CASE("blow-ups of daisy-free families stay daisy-free") {
    std::mt19937_64 rng(13579);
    DaisyShape shape{3, 2, 4};
    for (int trial = 0; trial < 25; ++trial) {
        int n = 5 + static_cast<int>(rng() % 3); // 5..7
        UniformFamily f = random_family(n, 3, 0.6, rng);
        while (auto w = find_daisy(f, shape)) { // strip daisies
            std::vector<int> edge(3);
            std::merge(w->stem.begin(), w->stem.end(), w->petals.begin(),
                       w->petals.begin() + 2, edge.begin());
            std::sort(edge.begin(), edge.end());
            f.erase_rank(colex_rank(edge));
        }
        for (int factor = 1; factor <= 3; ++factor) {
            if (n * factor > 14) continue;
            CHECK_FALSE(find_daisy(blow_up(f, factor), shape).has_value());
        }
    }
}
