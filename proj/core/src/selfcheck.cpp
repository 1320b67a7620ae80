#include "daisy/selfcheck.hpp"

#include "daisy/bounds.hpp"
#include "daisy/construct.hpp"
#include "daisy/cube.hpp"
#include "daisy/search.hpp"
#include "daisy/swise.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <sstream>

namespace daisy {

namespace {

struct Checker {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << "FAILED: " << what;
        }
    }
    void note(const std::string& what) {
        if (detail.tellp() > 0) detail << "; ";
        detail << what;
    }
};

using Clock = std::chrono::steady_clock;

CriterionResult run_one(int index, const std::string& name, double budget_seconds,
                        const std::function<void(Checker&)>& body) {
    Checker check;
    auto start = Clock::now();
    try {
        body(check);
    } catch (const std::exception& e) {
        check.expect(false, std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (budget_seconds > 0 && seconds >= budget_seconds) {
        check.expect(false, "runtime " + std::to_string(seconds) + "s exceeds budget " +
                                std::to_string(budget_seconds) + "s");
    }
    return {index, name, check.ok, seconds, check.detail.str()};
}

// Exhaustive maximum daisy-free size by scanning all 2^binom(n,r) subfamilies.
std::uint64_t enumeration_oracle(int n, DaisyShape shape) {
    const int edge_count = static_cast<int>(binom(n, shape.r));
    if (edge_count > 24) throw std::invalid_argument("oracle cap exceeded");

    // materialize every daisy copy as an edge mask
    std::vector<std::uint32_t> daisies;
    const int stem_size = shape.r - shape.s;
    std::vector<int> stem(static_cast<std::size_t>(stem_size));
    for (int i = 0; i < stem_size; ++i) stem[static_cast<std::size_t>(i)] = i + 1;
    do {
        std::vector<int> rest;
        for (int v = 1; v <= n; ++v)
            if (!std::binary_search(stem.begin(), stem.end(), v)) rest.push_back(v);
        if (static_cast<int>(rest.size()) < shape.t) continue;
        std::vector<int> tidx(static_cast<std::size_t>(shape.t));
        for (int i = 0; i < shape.t; ++i) tidx[static_cast<std::size_t>(i)] = i + 1;
        do {
            std::vector<int> pool;
            for (int i : tidx) pool.push_back(rest[static_cast<std::size_t>(i) - 1]);
            std::uint32_t mask = 0;
            std::vector<int> xidx(static_cast<std::size_t>(shape.s));
            for (int i = 0; i < shape.s; ++i) xidx[static_cast<std::size_t>(i)] = i + 1;
            std::vector<int> edge(static_cast<std::size_t>(shape.r));
            do {
                std::vector<int> x;
                for (int i : xidx) x.push_back(pool[static_cast<std::size_t>(i) - 1]);
                std::merge(stem.begin(), stem.end(), x.begin(), x.end(), edge.begin());
                mask |= UINT32_C(1) << colex_rank(edge);
            } while (next_subset_colex(xidx, shape.t));
            daisies.push_back(mask);
        } while (next_subset_colex(tidx, static_cast<int>(rest.size())));
    } while (stem_size > 0 && next_subset_colex(stem, n));

    std::uint64_t best = 0;
    const std::uint32_t limit = UINT32_C(1) << edge_count;
    for (std::uint32_t m = 0; m < limit; ++m) {
        bool free = true;
        for (std::uint32_t dmask : daisies) {
            if ((m & dmask) == dmask) {
                free = false;
                break;
            }
        }
        if (free) best = std::max<std::uint64_t>(best, std::popcount(m));
    }
    return best;
}

} // namespace

std::vector<CriterionResult> run_selfcheck() {
    std::vector<CriterionResult> out;

    out.push_back(run_one(1, "fano-coincidence", 1.0, [](Checker& c) {
        UniformFamily bases = construct_independent_family({2, 3, 0});
        c.expect(bases.n() == 7, "ground set is [7]");
        c.expect(bases.size() == 28, "28 members");
        c.expect(bases == fano_complement(), "equals the Fano complement member-for-member");
        Certificate cert = assert_daisy_free(bases, {3, 2, 4});
        c.expect(cert.pass && cert.mode == "exhaustive", "daisy-free (3,2,4), exhaustive");
        c.note("size 28, density " + rational_str(density(bases)));
    }));

    out.push_back(run_one(2, "r4-instance", 30.0, [](Checker& c) {
        UniformFamily f = construct_independent_family({2, 4, 0});
        c.expect(f.n() == 15 && f.size() == 840, "840 members on [15]");
        Rational dens = density(f);
        c.expect(dens == Rational(840, 1365), "density 840/1365");
        c.expect(assert_daisy_free(f, {4, 2, 4}).pass, "daisy-free (4,2,4)");
        Rational product(315, 1024); // prod_{k<=4}(1 - 2^-k)
        c.expect(dens > product, "840/1365 > 315/1024 exactly");
        c.note("density " + rational_str(dens) + " > " + rational_str(product));
    }));

    out.push_back(run_one(3, "q3-instance", 120.0, [](Checker& c) {
        UniformFamily f = construct_independent_family({3, 3, 0});
        c.expect(f.n() == 26 && f.size() == 1872, "1872 members on [26]");
        c.expect(assert_daisy_free(f, {3, 2, 5}).pass, "daisy-free (3,2,5)");
        c.note("size 1872, density " + rational_str(density(f)));
    }));

    out.push_back(run_one(4, "blow-up-preservation", 30.0, [](Checker& c) {
        UniformFamily doubled = blow_up(fano_complement(), 2);
        c.expect(doubled.n() == 14 && doubled.size() == 224, "224 members on [14]");
        c.expect(assert_daisy_free(doubled, {3, 2, 4}).pass, "daisy-free (3,2,4)");
        Rational bound = blowup_density_bound(2, 3);
        c.expect(bound == Rational(3, 16), "bound is exactly 3/16");
        c.expect(density(doubled) >= bound, "blow-up density >= 3/16");
        c.note("density " + rational_str(density(doubled)));
    }));

    out.push_back(run_one(5, "swise-counting", 60.0, [](Checker& c) {
        for (std::uint64_t q : {2, 3}) {
            for (int d : {2, 3, 4}) {
                std::uint64_t qd = 1;
                for (int i = 0; i < d; ++i) qd *= q;
                if (qd > 256) continue;
                for (int s : {2, 4}) {
                    SwiseResult res = max_swise_independent(q, d, s);
                    std::string tag = "(" + std::to_string(q) + "," + std::to_string(d) +
                                      "," + std::to_string(s) + ")";
                    c.expect(res.proved_optimal, tag + " proved optimal");
                    SwiseBound bound = earnest_bound(q, s, d);
                    c.expect(BigInt(res.max_found) <= bound.ceiling,
                             tag + " max within the counting bound");
                    Certificate cert = verify_counting_inequality(q, s, res);
                    c.expect(cert.pass, tag + " counting + distinct sums");
                }
            }
        }
    }));

    out.push_back(run_one(6, "euler-products", 10.0, [](Checker& c) {
        EulerProduct b2 = euler_product(2, 0, 1e-9L);
        c.expect(b2.value >= 0.2887880L && b2.value <= 0.2887882L,
                 "beta_2 in [0.2887880, 0.2887882]");
        EulerProduct b3 = euler_product(3, 0, 1e-9L);
        c.expect(b3.value >= 0.5601L && b3.value <= 0.5602L,
                 "beta_3 in [0.5601, 0.5602]");
        long double prev = 0;
        for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
            long double beta = euler_product(q, 0, 1e-9L).value;
            c.expect(beta > prev, "beta_q increasing at q=" + std::to_string(q));
            prev = beta;
        }
        c.note("beta_2 = " + format_real(b2.value) + ", beta_3 = " + format_real(b3.value));
    }));

    out.push_back(run_one(7, "gamma-master-sweep", 1.0, [](Checker& c) {
        for (int d = 8; d <= 200; ++d) {
            MasterBound b = gamma_master_bound(d);
            c.expect(b.available && b.passes_suff,
                     "master bound beats 1/(d+1) at d=" + std::to_string(d));
            if (!b.available || !b.passes_suff) break;
        }
        MasterBound b8 = gamma_master_bound(8);
        MasterBound b9 = gamma_master_bound(9);
        c.expect(b8.q_of_d == 3 && b9.q_of_d == 3, "q(8) = q(9) = 3");
        c.expect(b8.beta_q > 5.0L / 9.0L, "beta_3 > 5/9");
        c.expect(b9.beta_q > 0.5L, "beta_3 > 1/2");
        c.note("master(9) = " + format_real(gamma_master_bound(9).value));
    }));

    out.push_back(run_one(8, "hypercube-hitting", 60.0, [](Checker& c) {
        for (int d = 1; d <= 4; ++d) {
            for (int n = d; n <= 12; ++n) {
                for (int offset = 0; offset <= d; ++offset) {
                    CubeFamily f = layers_mod_construction(n, d + 1, offset);
                    CubeCheckOptions opts;
                    opts.mode = CheckMode::kExhaustive;
                    if (!hits_every_subcube(f, d, opts).pass) {
                        c.expect(false, "layers mod " + std::to_string(d + 1) +
                                            " offset " + std::to_string(offset) +
                                            " misses a subcube at n=" + std::to_string(n));
                        return;
                    }
                }
            }
        }
        CubeFamily five = five_point_family(7);
        CubeCheckOptions opts;
        opts.mode = CheckMode::kExhaustive;
        Certificate cnt = count_per_subcube(five, 4, 6, opts);
        c.expect(cnt.pass, "five-point family: every 4-subcube holds <= 5 points");
        bool saw_280 = false;
        for (const auto& [k, v] : cnt.notes)
            if (k == "subcubes" && v == "280") saw_280 = true;
        c.expect(saw_280, "280 subcubes scanned");
        CubeFamily hitting = layered_hitting_family(8, 6);
        c.expect(hits_every_subcube(hitting, 6, opts).pass,
                 "layered hitting family meets every 6-subcube of {0,1}^8");
        c.note("five_point_family(7) size " + std::to_string(five.size()) +
               ", layered_hitting_family(8,6) size " + std::to_string(hitting.size()));
    }));

    out.push_back(run_one(9, "solver-oracle", 300.0, [](Checker& c) {
        const DaisyShape shape{3, 2, 4};
        for (int n : {5, 6}) {
            std::uint64_t oracle = enumeration_oracle(n, shape);
            SearchResult res = max_daisy_free(n, shape);
            std::string tag = "n=" + std::to_string(n);
            c.expect(res.proved_optimal, tag + " proved optimal");
            c.expect(res.best_size == oracle,
                     tag + " solver (" + std::to_string(res.best_size) +
                         ") matches enumeration (" + std::to_string(oracle) + ")");
            c.expect(!find_daisy(res.best_family, shape).has_value(),
                     tag + " winner family daisy-free");
        }
        SearchBudget budget;
        budget.max_nodes = 3'000'000;
        SearchResult res7 = max_daisy_free(7, shape, budget);
        c.expect(res7.best_size >= 28, "n=7 lower bound >= 28");
        c.note("n=7 best " + std::to_string(res7.best_size) +
               (res7.proved_optimal ? " (proved)" : " (budgeted)"));
    }));

    out.push_back(run_one(10, "bound-tables", 30.0, [](Checker& c) {
        std::vector<BoundReport> master = theorem_bound_table("gamma-master", 8, 20);
        c.expect(master.size() == 13, "gamma-master table over d in [8,20] has 13 rows");
        for (const BoundReport& row : master)
            for (const auto& [k, v] : row.params)
                if (k == "passes_suff")
                    c.expect(v == "1", "row passes at " + row.params.front().second);
        std::vector<BoundReport> euler = theorem_bound_table("euler", 2, 9);
        c.expect(euler.size() == 7, "7 prime powers up to 9");
        for (std::size_t i = 1; i < euler.size(); ++i)
            c.expect(euler[i].value > euler[i - 1].value, "beta_q increasing");
        c.expect(turan_upper(4) == Rational(2, 3), "turan(4) = 2/3");
        c.expect(decaen_upper(5) == Rational(5, 6), "decaen(5) = 5/6");
        c.expect(aks_bounds(6).upper == Rational(1, 7), "aks upper(6) = 1/7");
        c.expect(blowup_density_bound(2, 2) == Rational(1, 4), "blowup(2,2) = 1/4");
        c.expect(largest_prime_power_leq(10) == 9, "largest prime power <= 10 is 9");
        std::ostringstream csv;
        write_bounds_csv(csv, master);
        c.expect(csv.str().rfind("name,params,value,rational,citation\n", 0) == 0,
                 "CSV header fixed");
    }));

    return out;
}

std::string format_criterion(const CriterionResult& c) {
    std::ostringstream out;
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.index << ". " << c.name << " (";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2fs", c.seconds);
    out << buf << ")";
    if (!c.detail.empty()) out << ": " << c.detail;
    return out.str();
}

} // namespace daisy
