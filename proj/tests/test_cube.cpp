#include "daisy/cube.hpp"

#include "daisy/construct.hpp"

#include <doctest.h>

#include <stdexcept>

#include <bit>
#include <random>
#include <sstream>

using namespace daisy;

TEST_CASE("subcube enumeration counts and order") {
    CHECK(subcube_count(3, 2) == 6);
    CHECK(subcube_count(4, 0) == 16);
    for (int n = 1; n <= 10; ++n) {
        for (int d = 0; d <= n; ++d) {
            std::uint64_t seen = 0;
            for_each_subcube(n, d, [&](const Subcube& sc) {
                CHECK(sc.dim() == d);
                ++seen;
                return true;
            });
            CHECK(seen == binom(n, d) * (UINT64_C(1) << (n - d)));
        }
    }
    // fixed sets by colex, then values by binary counter
    std::vector<std::pair<std::uint32_t, std::uint32_t>> first;
    for_each_subcube(3, 2, [&](const Subcube& sc) {
        first.emplace_back(sc.fixed_mask, sc.fixed_values);
        return true;
    });
    REQUIRE(first.size() == 6);
    CHECK(first[0] == std::pair<std::uint32_t, std::uint32_t>{1, 0});
    CHECK(first[1] == std::pair<std::uint32_t, std::uint32_t>{1, 1});
    CHECK(first[2] == std::pair<std::uint32_t, std::uint32_t>{2, 0});
    CHECK(first[5] == std::pair<std::uint32_t, std::uint32_t>{4, 4});
}

TEST_CASE("layer constructions") {
    CubeFamily full = layers_mod_construction(4, 1, 0);
    CHECK(full.size() == 16);
    CubeFamily zero = layers_mod_construction(4, 5, 0);
    CHECK(zero.size() == 1);
    CHECK(zero.contains(0));
    CHECK_THROWS_AS(layers_mod_construction(4, 6, 0), std::invalid_argument);

    // density approaches 1/period at n = 20
    for (int period = 2; period <= 5; ++period) {
        for (int offset = 0; offset < period; ++offset) {
            CubeFamily f = layers_mod_construction(20, period, offset);
            long double dens = cube_density(f).convert_to<long double>();
            CHECK(fabsl(dens - 1.0L / period) <= 0.01L);
        }
    }
}

TEST_CASE("hits_every_subcube on the periodic layers") {
    CubeCheckOptions opts;
    opts.mode = CheckMode::kExhaustive;
    CubeFamily nine = layers_mod_construction(9, 3, 0);
    CHECK(hits_every_subcube(nine, 2, opts).pass);

    CubeFamily point(5);
    point.insert(0);
    Certificate miss = hits_every_subcube(point, 2, opts);
    CHECK_FALSE(miss.pass);
    REQUIRE(miss.subcube_witness.has_value());
    // first missed subcube in scan order: fix {1,2,3} to the first values
    // whose subcube avoids the all-zero point
    CHECK(miss.subcube_witness->first == std::vector<int>{1, 2, 3});
    CHECK(miss.subcube_witness->second == std::vector<int>{1, 0, 0});

    CubeFamily whole = layers_mod_construction(5, 1, 0);
    CHECK(hits_every_subcube(whole, 3, opts).pass);
    CHECK(hits_every_subcube(point, 6, opts).pass); // no 6-subcube in {0,1}^5
}

TEST_CASE("parallel hit checks agree with sequential ones") {
    CubeCheckOptions seq;
    seq.mode = CheckMode::kExhaustive;
    CubeCheckOptions par = seq;
    par.workers = 4;
    CubeFamily family = layers_mod_construction(10, 4, 1);
    Certificate a = hits_every_subcube(family, 3, seq);
    Certificate b = hits_every_subcube(family, 3, par);
    CHECK(a.pass == b.pass);

    CubeFamily point(10);
    point.insert(777);
    Certificate am = hits_every_subcube(point, 3, seq);
    Certificate bm = hits_every_subcube(point, 3, par);
    REQUIRE_FALSE(am.pass);
    REQUIRE_FALSE(bm.pass);
    CHECK(am.subcube_witness == bm.subcube_witness);
}

TEST_CASE("sampled mode is seeded and recorded") {
    CubeFamily f = layers_mod_construction(22, 3, 0);
    CubeCheckOptions opts;
    opts.mode = CheckMode::kSampled;
    opts.seed = 20240817;
    opts.samples = 2000;
    Certificate cert = hits_every_subcube(f, 2, opts);
    CHECK(cert.pass);
    CHECK(cert.mode == "sampled");
    REQUIRE(cert.seed.has_value());
    CHECK(*cert.seed == 20240817);

    // auto mode must fall back to sampling above the exhaustive cap
    CubeCheckOptions auto_opts;
    auto_opts.seed = 99;
    auto_opts.samples = 500;
    CHECK(subcube_count(22, 2) > auto_opts.exhaustive_cap);
    Certificate picked = hits_every_subcube(f, 2, auto_opts);
    CHECK(picked.mode == "sampled");
}

TEST_CASE("five-point family: every 4-subcube holds at most five points") {
    CubeCheckOptions opts;
    opts.mode = CheckMode::kExhaustive;
    for (int n : {7, 10, 12}) {
        CubeFamily f = five_point_family(n);
        Certificate cert = count_per_subcube(f, 4, 6, opts);
        CAPTURE(n);
        CHECK(cert.pass);
    }
    CubeFamily seven = five_point_family(7);
    CHECK(seven.size() == 29); // {0} at layer 0 plus the 28 triples
    Certificate cert = count_per_subcube(seven, 4, 6, opts);
    for (const auto& [k, v] : cert.notes) {
        if (k == "subcubes") CHECK(v == "280");
        if (k == "max_count") CHECK(v == "5");
    }
}

TEST_CASE("five-point family density is recorded at n = 20") {
    CubeFamily f = five_point_family(20);
    CHECK(f.size() == 649); // frozen: padding starves layers >= 6 at this n
    long double dens = cube_density(f).convert_to<long double>();
    CHECK(dens < 1.0L / 3); // the mod-3 layer mass is the hard ceiling
}

TEST_CASE("sqrt-spaced family keeps subcube counts under the middle binomial") {
    CubeCheckOptions opts;
    opts.mode = CheckMode::kExhaustive;
    CubeFamily f = sqrt_spaced_family(10, 4, 2.0);
    Certificate cert = count_per_subcube(f, 4, 0, opts); // default C(4,2) = 6
    CHECK(cert.pass);

    CubeFamily sparse = sqrt_spaced_family(8, 4, 100.0);
    CHECK(sparse.size() == 1); // only layer 0 remains
}

TEST_CASE("layered hitting family for d = 6 on {0,1}^8") {
    CubeFamily f = layered_hitting_family(8, 6);
    CHECK(f.size() == 44);
    CubeCheckOptions opts;
    opts.mode = CheckMode::kExhaustive;
    CHECK(hits_every_subcube(f, 6, opts).pass);
    CHECK_THROWS_AS(layered_hitting_family(8, 5), std::invalid_argument);
}

TEST_CASE("layers hit subcubes across the desk-scale sweep") {
    CubeCheckOptions opts;
    opts.mode = CheckMode::kExhaustive;
    for (int d = 1; d <= 3; ++d)
        for (int n = d; n <= 9; ++n)
            for (int c = 0; c <= d; ++c)
                CHECK(hits_every_subcube(layers_mod_construction(n, d + 1, c), d, opts)
                          .pass);
}

TEST_CASE("edge hitting sets") {
    CubeFamily full = layers_mod_construction(4, 1, 0);
    CubeEdgeSet all_edges = derive_edge_hitting_set(full);
    CHECK(all_edges.count == 4 * (UINT64_C(1) << 3)); // n * 2^(n-1)

    CubeFamily point(4);
    point.insert(0b1010);
    CHECK(derive_edge_hitting_set(point).count == 4);

    for (int n : {6, 8, 10}) {
        for (int d = 1; d <= 3; ++d) {
            CubeFamily f = layers_mod_construction(n, d + 1, 0);
            CubeCheckOptions opts;
            opts.mode = CheckMode::kExhaustive;
            REQUIRE(hits_every_subcube(f, d, opts).pass);
            CHECK(edge_set_meets_every_subcube(derive_edge_hitting_set(f), d));
        }
    }
}

TEST_CASE("gamma report numbers") {
    CubeBoundReport nine = gamma_report(9);
    CHECK(nine.master_available);
    CHECK(nine.q_of_d == 3);
    CHECK(nine.beta_q == doctest::Approx(0.5601).epsilon(1e-3));
    CHECK(nine.gamma_upper_master == doctest::Approx(0.0880).epsilon(1e-2));
    CHECK(nine.passes_suff);
    CHECK(nine.gamma_lower_aks < nine.gamma_upper_aks.convert_to<long double>());
    CHECK(nine.rho_upper == doctest::Approx(2 * 0.08797).epsilon(1e-3));
    CHECK(nine.exp_upper_exponent == doctest::Approx(9.0 / 8));

    CubeBoundReport five = gamma_report(5);
    CHECK_FALSE(five.master_available);
    CHECK_FALSE(five.note.empty());
    CHECK(five.to_json().find("gamma_upper_aks") != std::string::npos);
    CHECK_THROWS_AS(gamma_report(1), std::invalid_argument);
}

TEST_CASE("cube family files round-trip and reject mutations") {
    CubeFamily f = five_point_family(7);
    std::ostringstream out;
    write_cube_family(out, f);
    std::istringstream in(out.str());
    CHECK(read_cube_family(in) == f);

    auto parse = [](const std::string& text) {
        std::istringstream s(text);
        return read_cube_family(s);
    };
    CHECK_THROWS_AS(parse("cube-family v2\nn=3\n"), FormatError);
    CHECK_THROWS_AS(parse("cube-family v1\nn=3\n01\n"), FormatError);
    CHECK_THROWS_AS(parse("cube-family v1\nn=3\n012\n"), FormatError);
    CHECK_THROWS_AS(parse("cube-family v1\nn=3\n010\n010\n"), FormatError);
    CHECK_THROWS_AS(parse("cube-family v1\nn=3\n010\n100\n"), FormatError); // order

    std::mt19937_64 rng(31337);
    const std::string canon = out.str();
    int rejected = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::string mutated = canon;
        mutated[rng() % mutated.size()] = static_cast<char>(rng() % 128);
        try {
            parse(mutated);
        } catch (const FormatError&) {
            ++rejected;
        }
    }
    CHECK(rejected > 120);
}

TEST_CASE("count certificate carries a witness subcube on failure") {
    CubeFamily f = layers_mod_construction(6, 1, 0); // full cube
    CubeCheckOptions opts;
    opts.mode = CheckMode::kExhaustive;
    Certificate cert = count_per_subcube(f, 3, 8, opts); // every 3-subcube has 8
    CHECK_FALSE(cert.pass);
    REQUIRE(cert.subcube_witness.has_value());
}
