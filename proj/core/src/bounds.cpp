#include "daisy/bounds.hpp"

#include "daisy/field.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace daisy {

static_assert(std::numeric_limits<long double>::digits >= 60,
              "high-precision reals need at least 60 mantissa bits");

EulerProduct euler_product(std::uint64_t q, int m, long double tol) {
    if (q < 2 || m < 0 || !(tol > 0))
        throw std::invalid_argument("need q >= 2, m >= 0, tol > 0");
    long double value = 1.0L;
    long double term = powl(static_cast<long double>(q), -(m + 1));
    int k = 0;
    while (term >= tol / 2) {
        value *= 1.0L - term;
        term /= q;
        ++k;
    }
    // remaining factors shrink the product by at most the geometric tail
    long double tail = term * q / (q - 1);
    if (!(tail < tol)) throw std::logic_error("truncation certificate failed");
    return {value, tail, k};
}

Rational turan_upper(int t) {
    if (t < 3) throw std::invalid_argument("t must be >= 3");
    return 1 - Rational(1, t - 1);
}

Rational decaen_upper(int t) {
    if (t < 3) throw std::invalid_argument("t must be >= 3");
    return 1 - Rational(1, binom_big(static_cast<std::uint64_t>(t) - 1, 2));
}

AksBounds aks_bounds(int d) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    long double lower = log2l(static_cast<long double>(d) + 2) /
                        powl(2.0L, static_cast<long double>(d) + 2);
    return {lower, Rational(1, d + 1)};
}

Rational blowup_density_bound(std::uint64_t q, int r) {
    if (r < 2) throw std::invalid_argument("r must be >= 2");
    BigInt qr = pow(BigInt(q), static_cast<unsigned>(r));
    Rational out = 1 - Rational(binom_big(static_cast<std::uint64_t>(r), 2), qr - 1);
    BigInt qk = 1;
    for (int k = 1; k <= r; ++k) {
        qk *= q;
        out *= 1 - Rational(1, qk);
    }
    return out;
}

bool is_prime_power(std::uint64_t x) {
    if (x < 2) return false;
    std::uint32_t p = 0;
    int k = 0;
    try {
        factor_prime_power(x, p, k);
    } catch (const std::invalid_argument&) {
        return false;
    }
    return true;
}

std::uint64_t largest_prime_power_leq(std::uint64_t x) {
    if (x < 2) throw std::invalid_argument("x must be >= 2");
    for (std::uint64_t v = x;; --v)
        if (is_prime_power(v)) return v;
}

MasterBound gamma_master_bound(int d, long double tol) {
    if (d < 2) throw std::invalid_argument("d must be >= 2");
    MasterBound out;
    out.d = d;
    if (d / 2 - 1 < 2) return out; // no prime power available below 2
    out.available = true;
    out.q_of_d = largest_prime_power_leq(static_cast<std::uint64_t>(d / 2 - 1));
    out.beta_q = euler_product(out.q_of_d, 0, tol).value;
    const int half = (d + 1) / 2; // ceil(d/2)
    out.value = (1.0L - out.beta_q) / half;
    out.passes_suff = out.value < 1.0L / (d + 1);
    return out;
}

std::string format_real(long double x) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.15Lg", x);
    return buf;
}

std::vector<BoundReport> theorem_bound_table(const std::string& kind, std::int64_t from,
                                             std::int64_t to, std::uint64_t q,
                                             long double tol) {
    std::vector<BoundReport> rows;
    auto param = [](const char* key, std::int64_t v) {
        return std::make_pair(std::string(key), std::to_string(v));
    };
    if (kind == "euler") {
        for (std::int64_t qq = from; qq <= to; ++qq) {
            if (qq < 2 || !is_prime_power(static_cast<std::uint64_t>(qq))) continue;
            EulerProduct e = euler_product(static_cast<std::uint64_t>(qq), 0, tol);
            rows.push_back({"euler",
                            {param("q", qq)},
                            e.value,
                            "",
                            "beta_q = prod_{k>=1}(1-q^-k)"});
        }
    } else if (kind == "turan") {
        for (std::int64_t t = std::max<std::int64_t>(from, 3); t <= to; ++t) {
            Rational v = turan_upper(static_cast<int>(t));
            rows.push_back({"turan",
                            {param("t", t)},
                            v.convert_to<long double>(),
                            rational_str(v),
                            "1 - 1/(t-1), K_t in a dense link graph"});
        }
    } else if (kind == "decaen") {
        for (std::int64_t t = std::max<std::int64_t>(from, 3); t <= to; ++t) {
            Rational v = decaen_upper(static_cast<int>(t));
            rows.push_back({"decaen",
                            {param("t", t)},
                            v.convert_to<long double>(),
                            rational_str(v),
                            "1 - 1/C(t-1,2), K_t^(3) in a dense 3-uniform link"});
        }
    } else if (kind == "aks") {
        for (std::int64_t d = std::max<std::int64_t>(from, 1); d <= to; ++d) {
            AksBounds b = aks_bounds(static_cast<int>(d));
            rows.push_back({"aks-lower",
                            {param("d", d)},
                            b.lower,
                            "",
                            "log2(d+2)/2^(d+2) <= gamma_d"});
            rows.push_back({"aks-upper",
                            {param("d", d)},
                            b.upper.convert_to<long double>(),
                            rational_str(b.upper),
                            "gamma_d <= 1/(d+1), every (d+1)-th layer"});
        }
    } else if (kind == "blowup") {
        for (std::int64_t r = std::max<std::int64_t>(from, 2); r <= to; ++r) {
            Rational v = blowup_density_bound(q, static_cast<int>(r));
            rows.push_back({"blowup",
                            {param("q", static_cast<std::int64_t>(q)), param("r", r)},
                            v.convert_to<long double>(),
                            rational_str(v),
                            "(1 - C(r,2)/(q^r-1)) prod_{k<=r}(1-q^-k)"});
        }
    } else if (kind == "gamma-master") {
        for (std::int64_t d = std::max<std::int64_t>(from, 6); d <= to; ++d) {
            MasterBound b = gamma_master_bound(static_cast<int>(d), tol);
            if (!b.available) continue;
            BoundReport row{"gamma-master",
                            {param("d", d),
                             param("q_of_d", static_cast<std::int64_t>(b.q_of_d))},
                            b.value,
                            "",
                            "(1 - beta_q(d))/ceil(d/2) vs 1/(d+1)"};
            row.params.emplace_back("passes_suff", b.passes_suff ? "1" : "0");
            rows.push_back(std::move(row));
        }
    } else {
        throw std::invalid_argument("unknown bound table kind: " + kind);
    }
    return rows;
}

void write_bounds_csv(std::ostream& out, const std::vector<BoundReport>& rows) {
    out << "name,params,value,rational,citation\n";
    for (const BoundReport& row : rows) {
        out << row.name << ',';
        for (std::size_t i = 0; i < row.params.size(); ++i) {
            if (i) out << ';';
            out << row.params[i].first << '=' << row.params[i].second;
        }
        out << ',' << format_real(row.value) << ',' << row.rational << ','
            << '"' << row.citation << '"' << '\n';
    }
}

} // namespace daisy
