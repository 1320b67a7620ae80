#ifndef DAISY_SWISE_HPP
#define DAISY_SWISE_HPP

#include "daisy/certificate.hpp"
#include "daisy/field.hpp"
#include "daisy/numbers.hpp"
#include "daisy/search.hpp"

namespace daisy {

/// s * q^(2d/s - 1): exact integer when s | 2d, certified long double
/// otherwise. `ceiling` is the smallest integer >= the true value, computed
/// with exact integer roots so pruning against it stays sound.
struct SwiseBound {
    long double value;
    std::optional<BigInt> exact;
    BigInt ceiling;
};
SwiseBound earnest_bound(std::uint64_t q, int s, int d);

/// A family of vectors every min(s, size)-subset of which is linearly
/// independent, plus the search outcome that produced it. For size >= s this
/// is exactly s-wise independence; smaller witnesses are additionally
/// required to be independent outright so the counting certificate below is
/// meaningful for them.
struct SwiseResult {
    std::uint64_t q = 0;
    int d = 0;
    int s = 0;
    int max_found = 0;
    std::vector<FieldVec> witness;
    std::vector<std::uint64_t> witness_labels;
    bool proved_optimal = false;
    std::uint64_t nodes = 0;
};

/// Branch and bound over one representative per projective point (first
/// nonzero coordinate scaled to 1), candidates in label order, pruned by the
/// counting bound above.
SwiseResult max_swise_independent(std::uint64_t q, int d, int s,
                                  const SearchBudget& budget = {});

/// Checks (q-1)^(s/2) * C(|X|, s/2) <= q^d with exact integers, and that all
/// sums c_1 v_1 + .. + c_l v_l (l = s/2, nonzero c_i, distinct l-subsets of
/// the witness) are pairwise distinct. The sum check runs exhaustively while
/// the sum count stays under `sum_cap`.
Certificate verify_counting_inequality(std::uint64_t q, int s, const SwiseResult& inst,
                                       std::uint64_t sum_cap = 1'000'000);

} // namespace daisy

#endif
