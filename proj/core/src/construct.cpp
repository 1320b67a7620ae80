#include "daisy/construct.hpp"

#include <stdexcept>

namespace daisy {

std::uint64_t IndependentFamilySpec::n() const {
    std::uint64_t out = 1;
    for (int i = 0; i < m + r; ++i) {
        out *= q;
        if (out > (UINT64_C(1) << 31)) throw std::overflow_error("q^(m+r) exceeds 2^31");
    }
    return out - 1;
}

namespace {

// Backtracking over labels in increasing order, extending a partial echelon
// basis; avoids filtering all binom(n, r) subsets.
void enumerate_independent(const FieldContext& ctx, int dim, int r, int max_label,
                           UniformFamily& out) {
    std::vector<FieldVec> vecs(static_cast<std::size_t>(max_label) + 1);
    for (int label = 1; label <= max_label; ++label)
        vecs[static_cast<std::size_t>(label)] =
            label_vec(ctx, static_cast<std::uint64_t>(label), dim);

    EchelonBasis basis(ctx, dim);
    std::vector<int> edge;
    edge.reserve(static_cast<std::size_t>(r));

    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(edge.size()) == r) {
            out.insert(edge);
            return;
        }
        const int missing = r - static_cast<int>(edge.size());
        for (int label = start; label <= max_label - missing + 1; ++label) {
            if (!basis.push(vecs[static_cast<std::size_t>(label)])) continue;
            edge.push_back(label);
            self(self, label + 1);
            edge.pop_back();
            basis.pop();
        }
    };
    rec(rec, 1);
}

} // namespace

UniformFamily construct_independent_family(const IndependentFamilySpec& spec,
                                           std::uint64_t max_ranks) {
    if (spec.r < 0 || spec.m < 0) throw std::invalid_argument("need r, m >= 0");
    std::uint32_t p = 0;
    int k = 0;
    factor_prime_power(spec.q, p, k);
    const int dim = spec.m + spec.r;
    const int n = static_cast<int>(spec.n());
    UniformFamily out(n, spec.r, max_ranks);
    if (spec.r == 0) {
        out.insert_rank(0);
        return out;
    }
    FieldContext ctx = FieldContext::make(p, k);
    enumerate_independent(ctx, dim, spec.r, n, out);
    return out;
}

BigInt independent_family_count(std::uint64_t q, int r, int m) {
    if (r < 0 || m < 0) throw std::invalid_argument("need r, m >= 0");
    BigInt qd = pow(BigInt(q), static_cast<unsigned>(m + r));
    BigInt numerator = 1;
    BigInt qi = 1;
    for (int i = 0; i < r; ++i) {
        numerator *= qd - qi;
        qi *= q;
    }
    BigInt fact = 1;
    for (int i = 2; i <= r; ++i) fact *= i;
    if (numerator % fact != 0) throw std::logic_error("count not divisible by r!");
    return numerator / fact;
}

UniformFamily fano_complement() {
    UniformFamily out(7, 3);
    std::vector<int> edge(3);
    for (int a = 1; a <= 7; ++a)
        for (int b = a + 1; b <= 7; ++b)
            for (int c = b + 1; c <= 7; ++c) {
                if (c == (a ^ b)) continue; // line of the plane
                edge = {a, b, c};
                out.insert(edge);
            }
    return out;
}

BigInt special_daisy_params(int s, std::uint64_t q, int m) {
    if (s <= 0 || s % 2 != 0) throw std::invalid_argument("s must be even and positive");
    if (q < 2 || m < 0) throw std::invalid_argument("need q >= 2, m >= 0");
    // floor(s * q^((2m+s)/s)) computed as floor((s^s * q^(2m+s))^(1/s)).
    BigInt a = pow(BigInt(s), static_cast<unsigned>(s)) *
               pow(BigInt(q), static_cast<unsigned>(2 * m + s));
    return iroot_floor(a, s) + 1;
}

UniformFamily daisy_free_transversal(const UniformFamily& f, DaisyShape shape,
                                     int workers) {
    if (auto witness = find_daisy(f, shape, workers)) {
        (void)witness;
        throw std::invalid_argument(
            "family contains a daisy of the target shape; transversal undefined");
    }
    return f.complement();
}

UniformFamily padded_blow_up(const UniformFamily& f, int n, std::uint64_t max_ranks) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    const int classes = f.n();
    const int base = classes > 0 ? n / classes : 0;
    const int extra = classes > 0 ? n % classes : 0;
    // class j (1-based): contiguous, first `extra` classes one larger
    std::vector<int> class_start(static_cast<std::size_t>(classes) + 2, 0);
    std::vector<int> class_size(static_cast<std::size_t>(classes) + 1, 0);
    int at = 1;
    for (int j = 1; j <= classes; ++j) {
        class_start[static_cast<std::size_t>(j)] = at;
        class_size[static_cast<std::size_t>(j)] = base + (j <= extra ? 1 : 0);
        at += class_size[static_cast<std::size_t>(j)];
    }

    const int r = f.r();
    UniformFamily out(n, r, max_ranks);
    std::vector<int> pattern;
    std::vector<int> pick(static_cast<std::size_t>(r), 0);
    std::vector<int> lifted(static_cast<std::size_t>(r));
    f.for_each_rank([&](std::uint64_t rank) {
        colex_unrank_into(rank, r, pattern);
        for (int i = 0; i < r; ++i)
            if (class_size[static_cast<std::size_t>(pattern[static_cast<std::size_t>(i)])] ==
                0)
                return; // pattern touches an empty class
        std::fill(pick.begin(), pick.end(), 0);
        while (true) {
            for (int i = 0; i < r; ++i) {
                int cls = pattern[static_cast<std::size_t>(i)];
                lifted[static_cast<std::size_t>(i)] =
                    class_start[static_cast<std::size_t>(cls)] +
                    pick[static_cast<std::size_t>(i)];
            }
            out.insert(lifted);
            int i = 0;
            while (i < r &&
                   ++pick[static_cast<std::size_t>(i)] ==
                       class_size[static_cast<std::size_t>(
                           pattern[static_cast<std::size_t>(i)])]) {
                pick[static_cast<std::size_t>(i)] = 0;
                ++i;
            }
            if (i == r) break;
        }
    });
    return out;
}

UniformFamily padded_independent_layer(std::uint64_t q, int r, int n,
                                       std::uint64_t max_ranks) {
    if (r == 0) return UniformFamily::complete(n, 0);
    std::uint32_t p = 0;
    int k = 0;
    factor_prime_power(q, p, k);
    // Saturating q^r probe: only "is q^r - 1 >= n" matters here.
    std::uint64_t full = 1;
    for (int i = 0; i < r && full <= static_cast<std::uint64_t>(n); ++i) full *= q;
    if (full > static_cast<std::uint64_t>(n)) {
        // One vertex per vector label 1..n; enumerate directly.
        UniformFamily out(n, r, max_ranks);
        FieldContext ctx = FieldContext::make(p, k);
        enumerate_independent(ctx, r, r, n, out);
        return out;
    }
    UniformFamily base = construct_independent_family({q, r, 0}, max_ranks);
    return padded_blow_up(base, n, max_ranks);
}

} // namespace daisy
