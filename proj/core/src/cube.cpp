#include "daisy/cube.hpp"

#include "daisy/construct.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

namespace daisy {

namespace {

constexpr int kMaxCubeDim = 26;

std::uint32_t extract_bits(std::uint32_t code, std::uint32_t mask) {
    std::uint32_t out = 0;
    int j = 0;
    for (std::uint32_t m = mask; m; m &= m - 1) {
        if (code & (m & -m)) out |= UINT32_C(1) << j;
        ++j;
    }
    return out;
}

// Spread the low bits of `value` onto the set bits of `mask`.
std::uint32_t deposit_bits(std::uint32_t value, std::uint32_t mask) {
    std::uint32_t out = 0;
    int j = 0;
    for (std::uint32_t m = mask; m; m &= m - 1) {
        if ((value >> j) & 1) out |= m & -m;
        ++j;
    }
    return out;
}

} // namespace

CubeFamily::CubeFamily(int n) : n_(n) {
    if (n < 0 || n > kMaxCubeDim)
        throw std::invalid_argument("cube dimension must be in [0, 26]");
    members_.resize(UINT64_C(1) << n);
}

void CubeFamily::insert(std::uint32_t code) {
    if (code >= point_count()) throw std::out_of_range("point code out of range");
    if (!members_.test(code)) {
        members_.set(code);
        ++count_;
    }
}

void CubeFamily::insert_subset(std::span<const int> vertices) {
    std::uint32_t code = 0;
    for (int v : vertices) {
        if (v < 1 || v > n_) throw std::invalid_argument("vertex out of range");
        code |= UINT32_C(1) << (v - 1);
    }
    insert(code);
}

void CubeFamily::for_each_member(const std::function<void(std::uint32_t)>& fn) const {
    for (std::size_t i = members_.find_first(); i != Bitset::npos;
         i = members_.find_next(i))
        fn(static_cast<std::uint32_t>(i));
}

Rational cube_density(const CubeFamily& f) {
    return Rational(BigInt(f.size()), BigInt(1) << f.n());
}

int Subcube::dim() const { return n - std::popcount(fixed_mask); }

std::vector<int> Subcube::fixed_coords() const {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if ((fixed_mask >> i) & 1) out.push_back(i + 1);
    return out;
}

std::vector<int> Subcube::fixed_value_bits() const {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if ((fixed_mask >> i) & 1) out.push_back(static_cast<int>((fixed_values >> i) & 1));
    return out;
}

std::uint64_t subcube_count(int n, int d) {
    if (d < 0 || d > n) return 0;
    return binom(n, d) << (n - d);
}

void for_each_subcube(int n, int d, const std::function<bool(const Subcube&)>& fn) {
    if (d < 0 || d > n) return;
    const int fixed = n - d;
    if (fixed == 0) {
        fn(Subcube{0, 0, n});
        return;
    }
    std::vector<int> coords(static_cast<std::size_t>(fixed));
    for (int i = 0; i < fixed; ++i) coords[static_cast<std::size_t>(i)] = i + 1;
    do {
        std::uint32_t mask = 0;
        for (int c : coords) mask |= UINT32_C(1) << (c - 1);
        const std::uint32_t values = UINT32_C(1) << fixed;
        for (std::uint32_t v = 0; v < values; ++v)
            if (!fn(Subcube{mask, deposit_bits(v, mask), n})) return;
    } while (next_subset_colex(coords, n));
}

namespace {

std::vector<std::uint32_t> member_codes(const CubeFamily& f) {
    std::vector<std::uint32_t> out;
    out.reserve(f.size());
    f.for_each_member([&](std::uint32_t code) { out.push_back(code); });
    return out;
}

std::vector<std::uint32_t> fixed_masks_colex(int n, int fixed) {
    std::vector<std::uint32_t> masks;
    if (fixed == 0) {
        masks.push_back(0);
        return masks;
    }
    std::vector<int> coords(static_cast<std::size_t>(fixed));
    for (int i = 0; i < fixed; ++i) coords[static_cast<std::size_t>(i)] = i + 1;
    do {
        std::uint32_t mask = 0;
        for (int c : coords) mask |= UINT32_C(1) << (c - 1);
        masks.push_back(mask);
    } while (next_subset_colex(coords, n));
    return masks;
}

bool decide_exhaustive(const CubeCheckOptions& opts, std::uint64_t count) {
    switch (opts.mode) {
        case CheckMode::kExhaustive:
            return true;
        case CheckMode::kSampled:
            return false;
        case CheckMode::kAuto:
            return count <= opts.exhaustive_cap;
    }
    return true;
}

Certificate cube_certificate(const char* kind, const CubeFamily& f, int d,
                             const CubeCheckOptions& opts, bool exhaustive) {
    Certificate cert;
    cert.kind = kind;
    cert.params = {{"n", f.n()}, {"d", d}};
    cert.size = f.size();
    cert.density = rational_str(cube_density(f));
    cert.mode = exhaustive ? "exhaustive" : "sampled";
    if (!exhaustive) cert.seed = opts.seed;
    cert.workers = std::max(1, opts.workers);
    return cert;
}

void attach_subcube(Certificate& cert, const Subcube& sc) {
    cert.subcube_witness = {sc.fixed_coords(), sc.fixed_value_bits()};
}

Subcube random_subcube(int n, int d, std::mt19937_64& rng) {
    std::vector<int> coords(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) coords[static_cast<std::size_t>(i)] = i;
    const int fixed = n - d;
    std::uint32_t mask = 0;
    for (int i = 0; i < fixed; ++i) {
        std::uniform_int_distribution<int> pick(i, n - 1);
        std::swap(coords[static_cast<std::size_t>(i)],
                  coords[static_cast<std::size_t>(pick(rng))]);
        mask |= UINT32_C(1) << coords[static_cast<std::size_t>(i)];
    }
    std::uniform_int_distribution<std::uint32_t> val(
        0, fixed >= 32 ? UINT32_MAX : (UINT32_C(1) << fixed) - 1);
    return Subcube{mask, deposit_bits(val(rng), mask), n};
}

bool subcube_has_member(const CubeFamily& f, const Subcube& sc) {
    const std::uint32_t free_mask =
        ~sc.fixed_mask & ((sc.n >= 32 ? 0 : (UINT32_C(1) << sc.n)) - 1);
    std::uint32_t sub = 0;
    while (true) {
        if (f.contains(sc.fixed_values | sub)) return true;
        sub = (sub - free_mask) & free_mask;
        if (sub == 0) break;
    }
    return false;
}

std::uint64_t subcube_member_count(const CubeFamily& f, const Subcube& sc) {
    const std::uint32_t free_mask =
        ~sc.fixed_mask & ((sc.n >= 32 ? 0 : (UINT32_C(1) << sc.n)) - 1);
    std::uint64_t count = 0;
    std::uint32_t sub = 0;
    while (true) {
        count += f.contains(sc.fixed_values | sub) ? 1 : 0;
        sub = (sub - free_mask) & free_mask;
        if (sub == 0) break;
    }
    return count;
}

} // namespace

Certificate hits_every_subcube(const CubeFamily& f, int d, const CubeCheckOptions& opts) {
    if (d < 0) throw std::invalid_argument("d must be nonnegative");
    const int n = f.n();
    const std::uint64_t total = subcube_count(n, d);
    const bool exhaustive = decide_exhaustive(opts, total);
    Certificate cert = cube_certificate("cube-hits", f, d, opts, exhaustive);
    cert.notes.emplace_back("subcubes", std::to_string(total));
    if (total == 0) { // no d-subcube exists (d > n)
        cert.pass = true;
        return cert;
    }

    if (exhaustive) {
        const int fixed = n - d;
        const std::vector<std::uint32_t> members = member_codes(f);
        const std::vector<std::uint32_t> masks = fixed_masks_colex(n, fixed);
        const std::uint64_t values = UINT64_C(1) << fixed;

        // miss = (mask index, value) minimised lexicographically; workers
        // claim mask indices and reduce, so the witness is scan-order first.
        std::atomic<std::uint64_t> best_miss{UINT64_MAX};
        std::atomic<std::size_t> next{0};
        auto scan_mask = [&](std::size_t mi) {
            const std::uint32_t mask = masks[mi];
            Bitset hit(values);
            for (std::uint32_t code : members) hit.set(extract_bits(code, mask));
            if (hit.count() == values) return;
            std::uint64_t v = 0;
            while (hit.test(v)) ++v;
            std::uint64_t packed = (static_cast<std::uint64_t>(mi) << fixed) | v;
            std::uint64_t cur = best_miss.load();
            while (packed < cur && !best_miss.compare_exchange_weak(cur, packed)) {
            }
        };

        const int workers = std::max(1, opts.workers);
        if (workers == 1) {
            for (std::size_t mi = 0; mi < masks.size() && best_miss == UINT64_MAX; ++mi)
                scan_mask(mi);
        } else {
            auto run = [&] {
                while (true) {
                    std::size_t mi = next.fetch_add(1);
                    if (mi >= masks.size()) return;
                    if ((static_cast<std::uint64_t>(mi) << fixed) > best_miss.load())
                        continue;
                    scan_mask(mi);
                }
            };
            std::vector<std::thread> pool;
            for (int i = 0; i < workers; ++i) pool.emplace_back(run);
            for (std::thread& th : pool) th.join();
        }

        std::uint64_t miss = best_miss.load();
        cert.pass = miss == UINT64_MAX;
        if (!cert.pass) {
            std::uint32_t mask = masks[static_cast<std::size_t>(miss >> fixed)];
            std::uint32_t value = static_cast<std::uint32_t>(
                miss & ((fixed >= 64 ? UINT64_MAX : (UINT64_C(1) << fixed) - 1)));
            attach_subcube(cert, Subcube{mask, deposit_bits(value, mask), n});
        }
        return cert;
    }

    std::mt19937_64 rng(opts.seed);
    cert.notes.emplace_back("samples", std::to_string(opts.samples));
    for (std::uint64_t i = 0; i < opts.samples; ++i) {
        Subcube sc = random_subcube(n, d, rng);
        if (!subcube_has_member(f, sc)) {
            cert.pass = false;
            attach_subcube(cert, sc);
            return cert;
        }
    }
    cert.pass = true;
    return cert;
}

Certificate count_per_subcube(const CubeFamily& f, int d, std::uint64_t threshold,
                              const CubeCheckOptions& opts) {
    if (d < 0) throw std::invalid_argument("d must be nonnegative");
    const int n = f.n();
    if (threshold == 0) threshold = binom(d, d / 2);
    const std::uint64_t total = subcube_count(n, d);
    const bool exhaustive = decide_exhaustive(opts, total);
    Certificate cert = cube_certificate("cube-count", f, d, opts, exhaustive);
    cert.notes.emplace_back("threshold_lt", std::to_string(threshold));
    cert.notes.emplace_back("subcubes", std::to_string(total));
    if (total == 0) {
        cert.pass = true;
        cert.notes.emplace_back("max_count", "0");
        return cert;
    }

    std::uint64_t max_count = 0;
    Subcube argmax{};
    bool have_witness = false;

    if (exhaustive) {
        const int fixed = n - d;
        const std::vector<std::uint32_t> members = member_codes(f);
        const std::vector<std::uint32_t> masks = fixed_masks_colex(n, fixed);
        const std::uint64_t values = UINT64_C(1) << fixed;
        std::vector<std::uint32_t> counts(values);
        for (std::uint32_t mask : masks) {
            std::fill(counts.begin(), counts.end(), 0);
            for (std::uint32_t code : members) ++counts[extract_bits(code, mask)];
            for (std::uint64_t v = 0; v < values; ++v) {
                if (counts[v] > max_count) {
                    max_count = counts[v];
                    argmax = Subcube{mask, deposit_bits(static_cast<std::uint32_t>(v), mask),
                                     n};
                    have_witness = true;
                }
            }
        }
    } else {
        std::mt19937_64 rng(opts.seed);
        cert.notes.emplace_back("samples", std::to_string(opts.samples));
        for (std::uint64_t i = 0; i < opts.samples; ++i) {
            Subcube sc = random_subcube(n, d, rng);
            std::uint64_t count = subcube_member_count(f, sc);
            if (count > max_count) {
                max_count = count;
                argmax = sc;
                have_witness = true;
            }
        }
    }

    cert.notes.emplace_back("max_count", std::to_string(max_count));
    cert.pass = max_count < threshold;
    if (!cert.pass && have_witness) attach_subcube(cert, argmax);
    return cert;
}

CubeFamily layers_mod_construction(int n, int period, int offset) {
    if (period < 1 || period > n + 1)
        throw std::invalid_argument("period must be in [1, n+1]");
    CubeFamily f(n);
    const std::uint32_t points = static_cast<std::uint32_t>(f.point_count());
    for (std::uint32_t code = 0; code < points; ++code)
        if (std::popcount(code) % period == ((offset % period) + period) % period)
            f.insert(code);
    return f;
}

CubeFamily layered_hitting_family(int n, int d) {
    if (d < 6)
        throw std::invalid_argument(
            "no prime power <= floor(d/2)-1 for d < 6; use layers_mod_construction");
    const std::uint64_t q = largest_prime_power_leq(static_cast<std::uint64_t>(d / 2 - 1));
    const int spacing = (d + 1) / 2; // ceil(d/2)
    CubeFamily f(n);
    for (int r = 0; r <= n; r += spacing) {
        if (r == 0) continue; // the full 0-layer is daisy-free, complement empty
        UniformFamily layer = padded_independent_layer(q, r, n);
        UniformFamily transversal = layer.complement();
        std::vector<int> edge;
        transversal.for_each_rank([&](std::uint64_t rank) {
            colex_unrank_into(rank, r, edge);
            f.insert_subset(edge);
        });
    }
    return f;
}

namespace {

CubeFamily spaced_independence_layers(int n, int spacing) {
    CubeFamily f(n);
    std::vector<int> edge;
    for (int r = 0; r <= n; r += spacing) {
        UniformFamily layer = padded_independent_layer(2, r, n);
        layer.for_each_rank([&](std::uint64_t rank) {
            colex_unrank_into(rank, r, edge);
            f.insert_subset(edge);
        });
    }
    return f;
}

} // namespace

CubeFamily five_point_family(int n) { return spaced_independence_layers(n, 3); }

CubeFamily sqrt_spaced_family(int n, int d, double C) {
    if (!(C > 0) || d < 1) throw std::invalid_argument("need C > 0, d >= 1");
    const int spacing =
        static_cast<int>(std::ceil(C * std::sqrt(static_cast<double>(d))));
    return spaced_independence_layers(n, std::max(1, spacing));
}

CubeEdgeSet derive_edge_hitting_set(const CubeFamily& f) {
    CubeEdgeSet out;
    out.n = f.n();
    out.edges.resize((UINT64_C(1) << f.n()) * static_cast<std::uint64_t>(f.n()));
    f.for_each_member([&](std::uint32_t code) {
        for (int i = 0; i < f.n(); ++i) {
            std::uint32_t lower = code & ~(UINT32_C(1) << i);
            out.edges.set(static_cast<std::size_t>(lower) *
                              static_cast<std::size_t>(f.n()) +
                          static_cast<std::size_t>(i));
        }
    });
    out.count = out.edges.count();
    return out;
}

bool edge_set_meets_every_subcube(const CubeEdgeSet& e, int d) {
    if (d < 1) throw std::invalid_argument("edge copies need d >= 1");
    bool ok = true;
    for_each_subcube(e.n, d, [&](const Subcube& sc) {
        const std::uint32_t free_mask =
            ~sc.fixed_mask & ((UINT32_C(1) << e.n) - 1);
        std::uint32_t sub = 0;
        bool found = false;
        while (!found) {
            std::uint32_t point = sc.fixed_values | sub;
            for (std::uint32_t m = free_mask; m; m &= m - 1) {
                std::uint32_t bit = m & -m;
                if ((point & bit) == 0 &&
                    e.contains(point, std::countr_zero(bit))) {
                    found = true;
                    break;
                }
            }
            sub = (sub - free_mask) & free_mask;
            if (sub == 0) break;
        }
        if (!found) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

CubeBoundReport gamma_report(int d, long double tol) {
    if (d < 2) throw std::invalid_argument("d must be >= 2");
    CubeBoundReport out;
    out.d = d;
    AksBounds aks = aks_bounds(d);
    out.gamma_lower_aks = aks.lower;
    out.gamma_upper_aks = aks.upper;
    MasterBound master = gamma_master_bound(d, tol);
    out.master_available = master.available;
    long double best_upper = aks.upper.convert_to<long double>();
    if (master.available) {
        out.q_of_d = master.q_of_d;
        out.beta_q = master.beta_q;
        out.gamma_upper_master = master.value;
        out.passes_suff = master.passes_suff;
        best_upper = std::min(best_upper, master.value);
    } else {
        out.note = "layered transversal bound unavailable below d = 6; "
                   "(d+1)-periodic layers give the upper bound";
    }
    out.rho_upper = 2.0L * best_upper;
    out.exp_upper_exponent = static_cast<long double>(d) / 8.0L;
    return out;
}

std::string CubeBoundReport::to_json() const {
    nlohmann::ordered_json j;
    j["d"] = d;
    j["master_available"] = master_available;
    if (master_available) {
        j["q_of_d"] = q_of_d;
        j["beta_q"] = format_real(beta_q);
        j["gamma_upper_master"] = format_real(gamma_upper_master);
        j["passes_suff"] = passes_suff;
    }
    j["gamma_lower_aks"] = format_real(gamma_lower_aks);
    j["gamma_upper_aks"] = rational_str(gamma_upper_aks);
    j["rho_upper"] = format_real(rho_upper);
    j["exp_upper_exponent"] = format_real(exp_upper_exponent);
    if (!note.empty()) j["note"] = note;
    return j.dump(2);
}

void write_cube_family(std::ostream& out, const CubeFamily& f) {
    out << "cube-family v1\n";
    out << "n=" << f.n() << "\n";
    f.for_each_member([&](std::uint32_t code) {
        for (int i = 0; i < f.n(); ++i) out << (((code >> i) & 1) ? '1' : '0');
        out << '\n';
    });
}

CubeFamily read_cube_family(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "cube-family v1")
        throw FormatError("missing 'cube-family v1' header");
    if (!std::getline(in, line) || line.rfind("n=", 0) != 0)
        throw FormatError("missing 'n=<n>' header");
    const std::string ntok = line.substr(2);
    if (ntok.empty() || ntok.size() > 2 ||
        !std::all_of(ntok.begin(), ntok.end(),
                     [](char c) { return c >= '0' && c <= '9'; }))
        throw FormatError("bad n: '" + ntok + "'");
    const int n = std::stoi(ntok);
    if (n > kMaxCubeDim) throw FormatError("n exceeds the cube cap");
    CubeFamily f(n);

    bool first = true;
    std::uint32_t prev = 0;
    while (std::getline(in, line)) {
        if (static_cast<int>(line.size()) != n)
            throw FormatError("member line must hold exactly n characters");
        std::uint32_t code = 0;
        for (int i = 0; i < n; ++i) {
            char c = line[static_cast<std::size_t>(i)];
            if (c != '0' && c != '1') throw FormatError("member characters must be 0/1");
            if (c == '1') code |= UINT32_C(1) << i;
        }
        if (!first && code <= prev)
            throw FormatError("members must be in ascending code order");
        first = false;
        prev = code;
        f.insert(code);
    }
    return f;
}

void write_cube_family_file(const std::string& path, const CubeFamily& f) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_cube_family(out, f);
}

CubeFamily read_cube_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_cube_family(in);
}

} // namespace daisy
