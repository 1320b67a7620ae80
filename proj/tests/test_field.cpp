#include "daisy/field.hpp"

#include <doctest.h>

#include <array>
#include <stdexcept>

#include <random>

using namespace daisy;

TEST_CASE("modulus selection is the lex-smallest monic irreducible") {
    CHECK(FieldContext::make(2, 1).modulus_poly() == std::vector<std::uint32_t>{0, 1});
    CHECK(FieldContext::make(2, 2).modulus_poly() ==
          std::vector<std::uint32_t>{1, 1, 1}); // x^2 + x + 1
    CHECK(FieldContext::make(2, 3).modulus_poly() ==
          std::vector<std::uint32_t>{1, 0, 1, 1}); // x^3 + x^2 + 1
    CHECK(FieldContext::make(3, 2).modulus_poly() ==
          std::vector<std::uint32_t>{1, 0, 1}); // x^2 + 1
}

TEST_CASE("element arithmetic on the named examples") {
    FieldContext gf2 = FieldContext::make(2, 1);
    CHECK(gf2.add(1, 1) == 0);
    FieldContext gf3 = FieldContext::make(3, 1);
    CHECK(gf3.mul(2, 2) == 1);
    FieldContext gf4 = FieldContext::make(2, 2);
    CHECK(gf4.mul(2, 2) == 3); // x * x = x + 1 under x^2 + x + 1
}

TEST_CASE("field axioms hold exhaustively for q <= 9") {
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, int>>{
             {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
        FieldContext ctx = FieldContext::make(p, k);
        const std::uint32_t q = ctx.q();
        for (std::uint32_t a = 0; a < q; ++a) {
            if (a != 0) CHECK(ctx.mul(a, ctx.inv(a)) == 1);
            for (std::uint32_t b = 0; b < q; ++b) {
                CHECK(ctx.add(a, b) == ctx.add(b, a));
                CHECK(ctx.mul(a, b) == ctx.mul(b, a));
                for (std::uint32_t c = 0; c < q; ++c) {
                    CHECK(ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c)));
                    CHECK(ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c)));
                    CHECK(ctx.mul(a, ctx.add(b, c)) ==
                          ctx.add(ctx.mul(a, b), ctx.mul(a, c)));
                }
            }
        }
        CHECK_THROWS_AS(ctx.inv(0), std::domain_error);
    }
}

TEST_CASE("rank_of on the standard examples") {
    FieldContext gf2 = FieldContext::make(2, 1);
    FieldVec e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1}, e12{1, 1, 0};
    std::vector<FieldVec> basis{e1, e2, e3};
    CHECK(rank_of(gf2, basis) == 3);
    std::vector<FieldVec> dependent{e1, e2, e12};
    CHECK(rank_of(gf2, dependent) == 2);
    std::vector<FieldVec> all_nonzero;
    for (std::uint64_t label = 1; label < 8; ++label)
        all_nonzero.push_back(label_vec(gf2, label, 3));
    CHECK(rank_of(gf2, all_nonzero) == 3);
    std::vector<FieldVec> mixed{e1, {1, 0}};
    CHECK_THROWS_AS(rank_of(gf2, mixed), std::invalid_argument);
}

TEST_CASE("rank is invariant under permutation and nonzero scaling") {
    std::mt19937_64 rng(20240901);
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, int>>{{2, 1}, {3, 1}, {2, 2}}) {
        FieldContext ctx = FieldContext::make(p, k);
        for (int trial = 0; trial < 50; ++trial) {
            int dim = 2 + static_cast<int>(rng() % 4);
            int count = 1 + static_cast<int>(rng() % 5);
            std::vector<FieldVec> vecs;
            for (int i = 0; i < count; ++i) {
                FieldVec v(static_cast<std::size_t>(dim));
                for (auto& c : v) c = static_cast<std::uint32_t>(rng() % ctx.q());
                vecs.push_back(v);
            }
            int base = rank_of(ctx, vecs);

            std::vector<FieldVec> shuffled = vecs;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            CHECK(rank_of(ctx, shuffled) == base);

            std::vector<FieldVec> scaled = vecs;
            for (auto& v : scaled) {
                std::uint32_t lambda = 1 + static_cast<std::uint32_t>(rng() % (ctx.q() - 1));
                for (auto& c : v) c = ctx.mul(lambda, c);
            }
            CHECK(rank_of(ctx, scaled) == base);
        }
    }
}

TEST_CASE("vector labels on the named examples") {
    FieldContext gf2 = FieldContext::make(2, 1);
    CHECK(vec_label(gf2, {1, 0, 0}) == 1);
    CHECK(vec_label(gf2, {1, 1, 0}) == 3);
    FieldContext gf3 = FieldContext::make(3, 1);
    CHECK(vec_label(gf3, {2, 1}) == 5);
    CHECK_THROWS_AS(vec_label(gf2, {0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(label_vec(gf2, 8, 3), std::invalid_argument);
    CHECK_THROWS_AS(label_vec(gf2, 0, 3), std::invalid_argument);
}

TEST_CASE("label bijection is exhaustive up to q^d = 2^16") {
    for (auto [p, k, d] : std::vector<std::array<int, 3>>{
             {2, 1, 8}, {3, 1, 5}, {2, 2, 4}, {5, 1, 3}, {3, 2, 2}}) {
        FieldContext ctx = FieldContext::make(p, k);
        std::uint64_t total = 1;
        for (int i = 0; i < d; ++i) total *= ctx.q();
        for (std::uint64_t label = 1; label < total; ++label)
            CHECK(vec_label(ctx, label_vec(ctx, label, d)) == label);
    }
}

TEST_CASE("context construction rejects bad parameters") {
    CHECK_THROWS_AS(FieldContext::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldContext::make(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(FieldContext::make(2, 40), std::overflow_error);
    std::uint32_t p = 0;
    int k = 0;
    factor_prime_power(8, p, k);
    CHECK(p == 2);
    CHECK(k == 3);
    CHECK_THROWS_AS(factor_prime_power(12, p, k), std::invalid_argument);
    CHECK_THROWS_AS(factor_prime_power(1, p, k), std::invalid_argument);
}

TEST_CASE("echelon basis tracks incremental independence") {
    FieldContext gf3 = FieldContext::make(3, 1);
    EchelonBasis basis(gf3, 3);
    CHECK(basis.push({1, 0, 0}));
    CHECK(basis.push({1, 1, 0}));
    CHECK_FALSE(basis.push({2, 1, 0})); // 2*(1,0,0) + (1,1,0) spans it
    CHECK(basis.size() == 2);
    CHECK(basis.in_span({1, 2, 0}));
    CHECK_FALSE(basis.in_span({0, 0, 1}));
    basis.pop();
    CHECK(basis.size() == 1);
    CHECK_FALSE(basis.in_span({1, 1, 0}));
}
