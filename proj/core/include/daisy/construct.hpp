#ifndef DAISY_CONSTRUCT_HPP
#define DAISY_CONSTRUCT_HPP

#include "daisy/daisy.hpp"
#include "daisy/field.hpp"
#include "daisy/numbers.hpp"

namespace daisy {

/// Independence construction over GF(q): ground set [q^(m+r) - 1] labels the
/// nonzero vectors of GF(q)^(m+r), members are the r-subsets of rank r.
struct IndependentFamilySpec {
    std::uint64_t q; // prime power
    int r;
    int m; // ambient dimension is m + r
    std::uint64_t n() const;
};

UniformFamily construct_independent_family(const IndependentFamilySpec& spec,
                                           std::uint64_t max_ranks = UINT64_C(1)
                                                                     << 28);

// prod_{i=0}^{r-1} (q^(m+r) - q^i) / r!, division exact.
BigInt independent_family_count(std::uint64_t q, int r, int m);

// The 28 triples of [7] that are not lines {a, b, a xor b}.
UniformFamily fano_complement();

// t = floor(s * q^(2m/s + 1)) + 1 via exact integer s-th roots (s even).
BigInt special_daisy_params(int s, std::uint64_t q, int m);

// Layer complement of a daisy-free family; throws when f contains a copy of
// the shape (the complement would not be guaranteed to hit every daisy).
UniformFamily daisy_free_transversal(const UniformFamily& f, DaisyShape shape,
                                     int workers = 1);

// Blow-up with [n] distributed over f's ground set as nearly-equal contiguous
// classes (sizes differ by at most one; classes may be empty when n < N).
// Only full transversal patterns survive, so daisy-freeness is preserved.
UniformFamily padded_blow_up(const UniformFamily& f, int n,
                             std::uint64_t max_ranks = UINT64_C(1) << 28);

// The independence construction's r-th layer carried onto [n]: the plain
// family when n = q^r - 1, a blow-up when (q^r - 1) | n, and the padded
// variant otherwise. For n below q^r - 1 the enumeration restricts to the
// first n vector labels directly.
UniformFamily padded_independent_layer(std::uint64_t q, int r, int n,
                                       std::uint64_t max_ranks = UINT64_C(1) << 28);

} // namespace daisy

#endif
