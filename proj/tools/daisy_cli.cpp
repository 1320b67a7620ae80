// daisy: constructions, verifiers, exact searches and bound tables for
// daisy-free hypergraphs and hypercube transversals.

#include "daisy/bounds.hpp"
#include "daisy/certificate.hpp"
#include "daisy/construct.hpp"
#include "daisy/cube.hpp"
#include "daisy/search.hpp"
#include "daisy/selfcheck.hpp"
#include "daisy/swise.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <thread>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFail = 2;      // verification failed, witness attached
constexpr int kExitUnproved = 3;  // budget exhausted without proof

std::string g_config; // full command line, echoed into certificates

void emit(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        if (payload.empty() || payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << payload;
    if (payload.empty() || payload.back() != '\n') out << '\n';
}

// Paths are checked up front so long runs cannot fail at write time.
void validate_out_path(const std::string& path) {
    if (path.empty()) return;
    std::ofstream probe(path, std::ios::app);
    if (!probe) throw std::runtime_error("output path not writable: " + path);
}

int auto_workers(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

daisy::CheckMode parse_mode(const std::string& mode) {
    if (mode == "auto") return daisy::CheckMode::kAuto;
    if (mode == "exhaustive") return daisy::CheckMode::kExhaustive;
    if (mode == "sampled") return daisy::CheckMode::kSampled;
    throw CLI::ValidationError("--mode must be auto, exhaustive or sampled");
}

struct ConstructArgs {
    bool independent = false;
    bool fano = false;
    bool blowup = false;
    std::string cube_kind;
    std::uint64_t q = 2;
    int r = 3;
    int m = 0;
    int n = 0;
    int d = 0;
    int period = 0;
    int offset = 0;
    double spacing_c = 2.0;
    int factor = 1;
    std::string input;
    std::string out;
};

int run_construct(const ConstructArgs& a) {
    const int picked = (a.independent ? 1 : 0) + (a.fano ? 1 : 0) + (a.blowup ? 1 : 0) +
                       (a.cube_kind.empty() ? 0 : 1);
    if (picked != 1)
        throw CLI::ValidationError(
            "pick exactly one of --independent, --fano, --blowup, --cube");

    validate_out_path(a.out);

    std::ostringstream payload;
    if (a.independent) {
        daisy::write_family(payload,
                            daisy::construct_independent_family({a.q, a.r, a.m}));
    } else if (a.fano) {
        daisy::write_family(payload, daisy::fano_complement());
    } else if (a.blowup) {
        if (a.input.empty()) throw CLI::ValidationError("--blowup needs --input");
        daisy::UniformFamily base = daisy::read_family_file(a.input);
        daisy::write_family(payload, daisy::blow_up(base, a.factor));
    } else {
        if (a.n <= 0) throw CLI::ValidationError("cube constructions need -n");
        daisy::CubeFamily f(0);
        if (a.cube_kind == "layers") {
            const int period = a.period > 0 ? a.period : a.d + 1;
            f = daisy::layers_mod_construction(a.n, period, a.offset);
        } else if (a.cube_kind == "hitting") {
            f = daisy::layered_hitting_family(a.n, a.d);
        } else if (a.cube_kind == "five-point") {
            f = daisy::five_point_family(a.n);
        } else if (a.cube_kind == "sqrt") {
            f = daisy::sqrt_spaced_family(a.n, a.d, a.spacing_c);
        } else {
            throw CLI::ValidationError(
                "--cube must be layers, hitting, five-point or sqrt");
        }
        daisy::write_cube_family(payload, f);
    }
    emit(a.out, payload.str());
    return kExitOk;
}

struct VerifyArgs {
    bool daisy_free = false;
    bool hits = false;
    bool count = false;
    int s = 2;
    int t = 4;
    int d = 0;
    std::uint64_t max_count = 0;
    std::string input;
    std::string out;
    std::string mode = "auto";
    std::uint64_t seed = 0;
    int workers = 0;
};

int run_verify(const VerifyArgs& a) {
    const int picked = (a.daisy_free ? 1 : 0) + (a.hits ? 1 : 0) + (a.count ? 1 : 0);
    if (picked != 1)
        throw CLI::ValidationError("pick exactly one of --daisy-free, --hits, --count");
    if (a.input.empty()) throw CLI::ValidationError("verify needs --input");
    validate_out_path(a.out);

    daisy::Certificate cert;
    if (a.daisy_free) {
        daisy::UniformFamily f = daisy::read_family_file(a.input);
        // single worker keeps the reported witness scan-order first
        int workers = a.workers > 0 ? a.workers : 1;
        cert = daisy::assert_daisy_free(f, {f.r(), a.s, a.t}, workers);
    } else {
        daisy::CubeFamily f = daisy::read_cube_family_file(a.input);
        daisy::CubeCheckOptions opts;
        opts.mode = parse_mode(a.mode);
        opts.seed = a.seed;
        opts.workers = auto_workers(a.workers);
        if (opts.mode == daisy::CheckMode::kAuto) {
            bool exhaustive =
                daisy::subcube_count(f.n(), a.d) <= opts.exhaustive_cap;
            std::cerr << "mode auto: picking "
                      << (exhaustive ? "exhaustive" : "sampled") << " for "
                      << daisy::subcube_count(f.n(), a.d) << " subcubes\n";
        }
        cert = a.hits ? daisy::hits_every_subcube(f, a.d, opts)
                      : daisy::count_per_subcube(f, a.d, a.max_count, opts);
    }
    cert.config = g_config;
    emit(a.out, cert.to_json());
    return cert.pass ? kExitOk : kExitFail;
}

struct SearchArgs {
    bool max_daisy = false;
    bool max_swise = false;
    int n = 0;
    int r = 3;
    int s = 2;
    int t = 4;
    std::uint64_t q = 2;
    int d = 0;
    std::uint64_t budget_nodes = 20'000'000;
    std::uint64_t budget_ms = 0;
    std::string out;
    std::string family_out;
};

int run_search(const SearchArgs& a) {
    if (a.max_daisy == a.max_swise)
        throw CLI::ValidationError("pick exactly one of --max-daisy-free, --max-swise");
    validate_out_path(a.out);
    validate_out_path(a.family_out);
    daisy::SearchBudget budget;
    budget.max_nodes = a.budget_nodes;
    budget.max_millis = a.budget_ms;

    nlohmann::ordered_json j;
    bool proved = false;
    if (a.max_daisy) {
        if (a.n <= 0) throw CLI::ValidationError("--max-daisy-free needs -n");
        daisy::SearchResult res = daisy::max_daisy_free(a.n, {a.r, a.s, a.t}, budget);
        proved = res.proved_optimal;
        j["kind"] = "max-daisy-free";
        j["version"] = daisy::kToolVersion;
        j["n"] = a.n;
        j["r"] = a.r;
        j["s"] = a.s;
        j["t"] = a.t;
        j["best_size"] = res.best_size;
        j["density"] = daisy::rational_str(daisy::density(res.best_family));
        j["proved_optimal"] = res.proved_optimal;
        j["nodes_explored"] = res.nodes_explored;
        if (!a.family_out.empty()) daisy::write_family_file(a.family_out, res.best_family);
    } else {
        if (a.d <= 0) throw CLI::ValidationError("--max-swise needs --d");
        daisy::SwiseResult res = daisy::max_swise_independent(a.q, a.d, a.s, budget);
        proved = res.proved_optimal;
        j["kind"] = "max-swise";
        j["version"] = daisy::kToolVersion;
        j["q"] = a.q;
        j["d"] = a.d;
        j["s"] = a.s;
        j["max_found"] = res.max_found;
        j["witness_labels"] = res.witness_labels;
        j["proved_optimal"] = res.proved_optimal;
        j["nodes_explored"] = res.nodes;
    }
    j["budget_nodes"] = a.budget_nodes;
    j["config"] = g_config;
    emit(a.out, j.dump(2));
    return proved ? kExitOk : kExitUnproved;
}

struct BoundsArgs {
    std::string kind = "euler";
    std::int64_t from = 2;
    std::int64_t to = 9;
    std::uint64_t q = 2;
    double tol = 1e-9;
    std::string out;
};

int run_bounds(const BoundsArgs& a) {
    validate_out_path(a.out);
    std::vector<daisy::BoundReport> rows = daisy::theorem_bound_table(
        a.kind, a.from, a.to, a.q, static_cast<long double>(a.tol));
    std::ostringstream payload;
    daisy::write_bounds_csv(payload, rows);
    emit(a.out, payload.str());
    return kExitOk;
}

struct SwiseArgs {
    std::uint64_t q = 2;
    int d = 3;
    int s = 2;
    std::uint64_t budget_nodes = 20'000'000;
    std::string out;
};

int run_swise(const SwiseArgs& a) {
    validate_out_path(a.out);
    daisy::SearchBudget budget;
    budget.max_nodes = a.budget_nodes;
    daisy::SwiseResult res = daisy::max_swise_independent(a.q, a.d, a.s, budget);
    daisy::Certificate cert = daisy::verify_counting_inequality(a.q, a.s, res);
    daisy::SwiseBound bound = daisy::earnest_bound(a.q, a.s, a.d);
    cert.notes.emplace_back("size_bound_ceiling", bound.ceiling.str());
    cert.notes.emplace_back("proved_optimal", res.proved_optimal ? "true" : "false");
    std::ostringstream labels;
    for (std::size_t i = 0; i < res.witness_labels.size(); ++i) {
        if (i) labels << ' ';
        labels << res.witness_labels[i];
    }
    cert.notes.emplace_back("witness_labels", labels.str());
    cert.config = g_config;
    emit(a.out, cert.to_json());
    if (!cert.pass) return kExitFail;
    return res.proved_optimal ? kExitOk : kExitUnproved;
}

struct CubeArgs {
    std::string construct_kind;
    std::string verify_kind;
    bool report = false;
    int n = 0;
    int d = 2;
    int period = 0;
    int offset = 0;
    double spacing_c = 2.0;
    std::uint64_t max_count = 0;
    std::uint64_t seed = 0;
    std::string mode = "auto";
    int workers = 0;
    std::string input;
    std::string out;
};

int run_cube(const CubeArgs& a) {
    const int picked = (a.construct_kind.empty() ? 0 : 1) +
                       (a.verify_kind.empty() ? 0 : 1) + (a.report ? 1 : 0);
    if (picked != 1)
        throw CLI::ValidationError("pick exactly one of --construct, --verify, --report");

    if (!a.construct_kind.empty()) {
        ConstructArgs c;
        c.cube_kind = a.construct_kind;
        c.n = a.n;
        c.d = a.d;
        c.period = a.period;
        c.offset = a.offset;
        c.spacing_c = a.spacing_c;
        c.out = a.out;
        return run_construct(c);
    }
    if (a.report) {
        emit(a.out, daisy::gamma_report(a.d).to_json());
        return kExitOk;
    }
    VerifyArgs v;
    v.hits = a.verify_kind == "hit";
    v.count = a.verify_kind == "count";
    if (!v.hits && !v.count)
        throw CLI::ValidationError("--verify must be hit or count");
    v.d = a.d;
    v.max_count = a.max_count;
    v.input = a.input;
    v.out = a.out;
    v.mode = a.mode;
    v.seed = a.seed;
    v.workers = a.workers;
    return run_verify(v);
}

int run_demo() {
    bool all = true;
    for (const daisy::CriterionResult& c : daisy::run_selfcheck()) {
        std::cout << daisy::format_criterion(c) << "\n";
        all = all && c.pass;
    }
    return all ? kExitOk : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    for (int i = 0; i < argc; ++i) {
        if (i) g_config += ' ';
        g_config += argv[i];
    }

    CLI::App app{"daisy-free hypergraph constructions, verifiers and bounds"};
    app.set_version_flag("--version", daisy::kToolVersion);
    app.require_subcommand(1);

    ConstructArgs ca;
    CLI::App* construct = app.add_subcommand(
        "construct", "emit a family file (independence construction, Fano "
                     "complement, blow-up, or cube families)");
    construct->add_flag("--independent", ca.independent,
                        "independent r-sets over GF(q)^(m+r)");
    construct->add_flag("--fano", ca.fano, "complement of the Fano plane (n=7, r=3)");
    construct->add_flag("--blowup", ca.blowup, "blow up the family in --input");
    construct->add_option("--cube", ca.cube_kind,
                          "cube construction: layers|hitting|five-point|sqrt");
    construct->add_option("-q,--q", ca.q, "field order (prime power)");
    construct->add_option("-r,--r", ca.r, "uniformity");
    construct->add_option("-m,--m", ca.m, "codimension surplus");
    construct->add_option("-n,--n", ca.n, "cube dimension");
    construct->add_option("-d,--d", ca.d, "target subcube dimension");
    construct->add_option("--period", ca.period, "layer period (layers)");
    construct->add_option("--offset", ca.offset, "layer offset (layers)");
    construct->add_option("-C,--spacing-constant", ca.spacing_c,
                          "layer spacing constant (sqrt)");
    construct->add_option("--factor", ca.factor, "blow-up factor");
    construct->add_option("--input", ca.input, "input family file (blow-up)");
    construct->add_option("-o,--out", ca.out, "output path (stdout when absent)");

    VerifyArgs va;
    CLI::App* verify = app.add_subcommand(
        "verify", "check a family file and emit a certificate (exit 2 on failure)");
    verify->add_flag("--daisy-free", va.daisy_free, "no daisy of shape (r,s,t)");
    verify->add_flag("--hits", va.hits, "every d-subcube contains a member");
    verify->add_flag("--count", va.count, "every d-subcube holds < --max members");
    verify->add_option("-s,--s", va.s, "petal subset size");
    verify->add_option("-t,--t", va.t, "petal pool size");
    verify->add_option("-d,--d", va.d, "subcube dimension");
    verify->add_option("--max", va.max_count,
                       "count threshold (default C(d, floor(d/2)))");
    verify->add_option("--input", va.input, "family file to check")->required();
    verify->add_option("-o,--out", va.out, "certificate path (stdout when absent)");
    verify->add_option("--mode", va.mode, "auto|exhaustive|sampled");
    verify->add_option("--seed", va.seed, "sampling seed");
    verify->add_option("--workers", va.workers, "0 = all cores (cube checks)");

    SearchArgs sa;
    CLI::App* search = app.add_subcommand(
        "search", "exact searches (exit 3 when the budget expires without proof)");
    search->add_flag("--max-daisy-free", sa.max_daisy, "largest daisy-free family");
    search->add_flag("--max-swise", sa.max_swise, "largest s-wise independent family");
    search->add_option("-n,--n", sa.n, "ground-set size");
    search->add_option("-r,--r", sa.r, "uniformity");
    search->add_option("-s,--s", sa.s, "petal subset size / independence order");
    search->add_option("-t,--t", sa.t, "petal pool size");
    search->add_option("-q,--q", sa.q, "field order");
    search->add_option("-d,--d", sa.d, "vector dimension");
    search->add_option("--budget-nodes", sa.budget_nodes, "node budget");
    search->add_option("--budget-ms", sa.budget_ms, "wall-clock budget (ms)");
    search->add_option("-o,--out", sa.out, "result JSON path");
    search->add_option("--family-out", sa.family_out, "write the best family here");

    BoundsArgs ba;
    CLI::App* bounds = app.add_subcommand("bounds", "closed-form bound tables as CSV");
    bounds->add_option("--kind", ba.kind,
                       "euler|turan|decaen|aks|blowup|gamma-master");
    bounds->add_option("--from", ba.from, "range start");
    bounds->add_option("--to", ba.to, "range end");
    bounds->add_option("-q,--q", ba.q, "field order (blowup tables)");
    bounds->add_option("--tol", ba.tol, "product truncation tolerance");
    bounds->add_option("-o,--out", ba.out, "CSV path (stdout when absent)");

    SwiseArgs wa;
    CLI::App* swise = app.add_subcommand(
        "swise", "maximise an s-wise independent family and certify the counting bound");
    swise->add_option("-q,--q", wa.q, "field order");
    swise->add_option("-d,--d", wa.d, "vector dimension")->required();
    swise->add_option("-s,--s", wa.s, "independence order (even)");
    swise->add_option("--budget-nodes", wa.budget_nodes, "node budget");
    swise->add_option("-o,--out", wa.out, "certificate path");

    CubeArgs cu;
    CLI::App* cube = app.add_subcommand("cube",
                                        "hypercube constructions, verifiers, reports");
    cube->add_option("--construct", cu.construct_kind,
                     "layers|hitting|five-point|sqrt");
    cube->add_option("--verify", cu.verify_kind, "hit|count");
    cube->add_flag("--report", cu.report, "closed-form bound report for --d");
    cube->add_option("-n,--n", cu.n, "cube dimension");
    cube->add_option("-d,--d", cu.d, "subcube dimension");
    cube->add_option("--period", cu.period, "layer period");
    cube->add_option("--offset", cu.offset, "layer offset");
    cube->add_option("-C,--spacing-constant", cu.spacing_c, "sqrt spacing constant");
    cube->add_option("--max", cu.max_count, "count threshold");
    cube->add_option("--seed", cu.seed, "sampling seed");
    cube->add_option("--mode", cu.mode, "auto|exhaustive|sampled");
    cube->add_option("--workers", cu.workers, "0 = all cores");
    cube->add_option("--input", cu.input, "cube family file");
    cube->add_option("-o,--out", cu.out, "output path");

    CLI::App* demo =
        app.add_subcommand("demo", "run the built-in verification battery");

    try {
        app.parse(argc, argv);
        if (construct->parsed()) return run_construct(ca);
        if (verify->parsed()) return run_verify(va);
        if (search->parsed()) return run_search(sa);
        if (bounds->parsed()) return run_bounds(ba);
        if (swise->parsed()) return run_swise(wa);
        if (cube->parsed()) return run_cube(cu);
        if (demo->parsed()) return run_demo();
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const daisy::FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
