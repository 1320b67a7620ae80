#include "daisy/swise.hpp"

#include <algorithm>
#include <cmath>

namespace daisy {

SwiseBound earnest_bound(std::uint64_t q, int s, int d) {
    if (s <= 0 || s % 2 != 0) throw std::invalid_argument("s must be even and positive");
    if (q < 2 || d < 1) throw std::invalid_argument("need q >= 2, d >= 1");
    SwiseBound out{};
    const long double exponent = 2.0L * d / s - 1.0L;
    out.value = s * powl(static_cast<long double>(q), exponent);
    if ((2 * d) % s == 0) {
        int e = 2 * d / s - 1;
        BigInt exact = s;
        if (e >= 0) {
            exact *= pow(BigInt(q), static_cast<unsigned>(e));
        } else {
            // s / q^(-e): not an integer in general; leave exact unset.
            exact = -1;
        }
        if (exact >= 0) {
            out.exact = exact;
            out.ceiling = exact;
            return out;
        }
    }
    // Smallest c with c^s * q^max(0, s-2d) >= s^s * q^max(0, 2d-s).
    BigInt lhs_pow = pow(BigInt(q), static_cast<unsigned>(std::max(0, s - 2 * d)));
    BigInt rhs = pow(BigInt(s), static_cast<unsigned>(s)) *
                 pow(BigInt(q), static_cast<unsigned>(std::max(0, 2 * d - s)));
    BigInt c = iroot_floor(rhs / lhs_pow, s);
    while (pow(c, static_cast<unsigned>(s)) * lhs_pow < rhs) ++c;
    out.ceiling = c;
    return out;
}

namespace {

struct SwiseSearch {
    const FieldContext& ctx;
    int d;
    int s;
    std::vector<FieldVec> candidates;
    std::vector<std::uint64_t> labels;
    std::vector<std::size_t> chosen;
    std::vector<std::size_t> best;
    std::uint64_t nodes = 0;
    std::uint64_t max_nodes;
    bool aborted = false;
    BigInt stop_at; // proven upper bound; close the search on reaching it

    // Every subset of size min(s, |X|+1) of X + {v} containing v must be
    // independent; smaller dependent subsets would extend to one of these.
    bool feasible(std::size_t vi) const {
        const int have = static_cast<int>(chosen.size());
        const int take = std::min(s - 1, have);
        std::vector<int> idx(static_cast<std::size_t>(take));
        for (int i = 0; i < take; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
        std::vector<FieldVec> group;
        group.reserve(static_cast<std::size_t>(take) + 1);
        do {
            group.clear();
            for (int i = 0; i < take; ++i)
                group.push_back(
                    candidates[chosen[static_cast<std::size_t>(
                        idx[static_cast<std::size_t>(i)] - 1)]]);
            group.push_back(candidates[vi]);
            if (rank_of(ctx, group) != take + 1) return false;
        } while (next_subset_colex(idx, have));
        return true;
    }

    void dfs(std::size_t from) {
        if (aborted) return;
        if (++nodes > max_nodes) {
            aborted = true;
            return;
        }
        if (chosen.size() > best.size()) best = chosen;
        if (BigInt(static_cast<std::uint64_t>(best.size())) >= stop_at) return;
        for (std::size_t i = from; i < candidates.size(); ++i) {
            if (chosen.size() + (candidates.size() - i) <= best.size()) break;
            if (!feasible(i)) continue;
            chosen.push_back(i);
            dfs(i + 1);
            chosen.pop_back();
            if (aborted) return;
        }
    }
};

} // namespace

SwiseResult max_swise_independent(std::uint64_t q, int d, int s,
                                  const SearchBudget& budget) {
    if (s <= 0) throw std::invalid_argument("s must be positive");
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    std::uint32_t p = 0;
    int k = 0;
    factor_prime_power(q, p, k);
    FieldContext ctx = FieldContext::make(p, k);

    std::uint64_t point_count = 1;
    for (int i = 0; i < d; ++i) point_count *= q;
    if (point_count > (UINT64_C(1) << 12) + 1)
        throw std::overflow_error("q^d exceeds the proved-optimal cap 2^12");

    SwiseResult out;
    out.q = q;
    out.d = d;
    out.s = s;

    SwiseSearch search{ctx, d, s, {}, {}, {}, {}, 0, budget.max_nodes, false, 0};
    for (std::uint64_t label = 1; label < point_count; ++label) {
        FieldVec v = label_vec(ctx, label, d);
        std::uint32_t lead = 0;
        for (std::uint32_t code : v)
            if (code != 0) {
                lead = code;
                break;
            }
        if (lead != 1) continue; // projective representative only
        search.candidates.push_back(std::move(v));
        search.labels.push_back(label);
    }

    // Below dimension s every witness is outright independent, so dimension
    // caps the size; otherwise the counting bound closes the search early
    // (even s only, where it is valid).
    if (d < s)
        search.stop_at = BigInt(
            std::min<std::uint64_t>(static_cast<std::uint64_t>(d), point_count - 1));
    else if (s % 2 == 0)
        search.stop_at = earnest_bound(q, s, d).ceiling;
    else
        search.stop_at = BigInt(point_count);
    search.dfs(0);

    out.max_found = static_cast<int>(search.best.size());
    out.proved_optimal = !search.aborted;
    out.nodes = search.nodes;
    for (std::size_t i : search.best) {
        out.witness.push_back(search.candidates[i]);
        out.witness_labels.push_back(search.labels[i]);
    }
    return out;
}

Certificate verify_counting_inequality(std::uint64_t q, int s, const SwiseResult& inst,
                                       std::uint64_t sum_cap) {
    if (s <= 0 || s % 2 != 0) throw std::invalid_argument("s must be even and positive");
    const int l = s / 2;
    const std::uint64_t size = inst.witness.size();

    Certificate cert;
    cert.kind = "swise";
    cert.params = {{"q", static_cast<std::int64_t>(q)},
                   {"d", inst.d},
                   {"s", s},
                   {"size", static_cast<std::int64_t>(size)}};
    cert.size = size;
    cert.mode = "exhaustive";

    BigInt lhs = pow(BigInt(q) - 1, static_cast<unsigned>(l)) * binom_big(size, l);
    BigInt rhs = pow(BigInt(q), static_cast<unsigned>(inst.d));
    bool inequality_ok = lhs <= rhs;
    cert.notes.emplace_back("counting_lhs", lhs.str());
    cert.notes.emplace_back("counting_rhs", rhs.str());

    bool sums_ok = true;
    bool sums_checked = false;
    if (lhs >= 0 && lhs <= sum_cap && size >= static_cast<std::uint64_t>(l)) {
        std::uint32_t p = 0;
        int k = 0;
        factor_prime_power(q, p, k);
        FieldContext ctx = FieldContext::make(p, k);
        sums_checked = true;

        std::vector<std::uint64_t> seen;
        seen.reserve(static_cast<std::size_t>(lhs.convert_to<std::uint64_t>()));
        std::vector<int> idx(static_cast<std::size_t>(l));
        for (int i = 0; i < l; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
        std::vector<std::uint32_t> coeff(static_cast<std::size_t>(l), 1);
        FieldVec sum(static_cast<std::size_t>(inst.d));
        do {
            std::fill(coeff.begin(), coeff.end(), 1);
            while (true) {
                std::fill(sum.begin(), sum.end(), 0);
                for (int i = 0; i < l; ++i) {
                    const FieldVec& v =
                        inst.witness[static_cast<std::size_t>(
                            idx[static_cast<std::size_t>(i)] - 1)];
                    for (int j = 0; j < inst.d; ++j)
                        sum[static_cast<std::size_t>(j)] = ctx.add(
                            sum[static_cast<std::size_t>(j)],
                            ctx.mul(coeff[static_cast<std::size_t>(i)],
                                    v[static_cast<std::size_t>(j)]));
                }
                std::uint64_t code = 0, mult = 1;
                for (int j = 0; j < inst.d; ++j) {
                    code += sum[static_cast<std::size_t>(j)] * mult;
                    mult *= q;
                }
                seen.push_back(code);
                // next nonzero coefficient tuple
                int pos = 0;
                while (pos < l) {
                    std::uint32_t& c = coeff[static_cast<std::size_t>(pos)];
                    if (++c < q) break;
                    c = 1;
                    ++pos;
                }
                if (pos == l) break;
            }
        } while (next_subset_colex(idx, static_cast<int>(size)));

        std::sort(seen.begin(), seen.end());
        sums_ok = std::adjacent_find(seen.begin(), seen.end()) == seen.end();
        cert.notes.emplace_back("sums_checked", std::to_string(seen.size()));
        cert.notes.emplace_back("sums_distinct", sums_ok ? "true" : "false");
    } else {
        cert.notes.emplace_back("sums_checked", "0");
    }

    cert.pass = inequality_ok && (!sums_checked || sums_ok);
    if (!inequality_ok)
        cert.notes.emplace_back("violation",
                                "counting inequality failed; check the witness");
    return cert;
}

} // namespace daisy
