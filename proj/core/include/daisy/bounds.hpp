#ifndef DAISY_BOUNDS_HPP
#define DAISY_BOUNDS_HPP

#include "daisy/numbers.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace daisy {

/// Truncated evaluation of prod_{k>=1}(1 - q^-(m+k)) with a certified tail:
/// factors accumulate until the next one differs from 1 by less than tol/2,
/// and the geometric tail keeps the truncation error below tol.
struct EulerProduct {
    long double value;
    long double error_bound;
    int terms;
};
EulerProduct euler_product(std::uint64_t q, int m, long double tol);

Rational turan_upper(int t);  // 1 - 1/(t-1), t >= 3
Rational decaen_upper(int t); // 1 - 1/C(t-1, 2), t >= 3

struct AksBounds {
    long double lower; // log2(d+2) / 2^(d+2)
    Rational upper;    // 1/(d+1)
};
AksBounds aks_bounds(int d);

// (1 - C(r,2)/(q^r - 1)) * prod_{k=1}^{r}(1 - q^-k), exact.
Rational blowup_density_bound(std::uint64_t q, int r);

bool is_prime_power(std::uint64_t x);
std::uint64_t largest_prime_power_leq(std::uint64_t x); // x >= 2

/// Layered-transversal upper bound (1 - beta_q(d)) / ceil(d/2) with
/// q(d) the largest prime power <= floor(d/2) - 1; available for d >= 6.
struct MasterBound {
    int d = 0;
    bool available = false;
    std::uint64_t q_of_d = 0;
    long double beta_q = 0;
    long double value = 0;
    bool passes_suff = false; // value < 1/(d+1)
};
MasterBound gamma_master_bound(int d, long double tol = 1e-9L);

struct BoundReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    long double value;
    std::string rational; // empty when the value is not exact
    std::string citation;
};

// kinds: euler | turan | decaen | aks | blowup | gamma-master.
// `from`/`to` range over q, t, t, d, r, d respectively; `q` feeds blowup.
std::vector<BoundReport> theorem_bound_table(const std::string& kind, std::int64_t from,
                                             std::int64_t to, std::uint64_t q = 2,
                                             long double tol = 1e-9L);

// Fixed header: name,params,value,rational,citation
void write_bounds_csv(std::ostream& out, const std::vector<BoundReport>& rows);

std::string format_real(long double x);

} // namespace daisy

#endif
