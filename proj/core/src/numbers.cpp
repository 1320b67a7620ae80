#include "daisy/numbers.hpp"

#include <stdexcept>

namespace daisy {

BigInt binom_big(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt out = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        out *= static_cast<std::uint64_t>(n - k + i);
        out /= i;
    }
    return out;
}

BigInt iroot_floor(const BigInt& a, int k) {
    if (a < 0 || k < 1) throw std::invalid_argument("iroot_floor needs a >= 0, k >= 1");
    if (a == 0) return 0;
    if (k == 1) return a;
    // Newton iteration from an over-estimate, then settle by decrement.
    BigInt x = BigInt(1) << static_cast<unsigned>(msb(a) / static_cast<unsigned>(k) + 1);
    while (true) {
        BigInt xk = pow(x, static_cast<unsigned>(k - 1));
        BigInt next = ((k - 1) * x + a / xk) / k;
        if (next >= x) break;
        x = next;
    }
    while (pow(x, static_cast<unsigned>(k)) > a) --x;
    while (pow(x + 1, static_cast<unsigned>(k)) <= a) ++x;
    return x;
}

std::string rational_str(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace daisy
