#ifndef DAISY_SUBSETS_HPP
#define DAISY_SUBSETS_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace daisy {

// Binomial coefficients, saturating at kBinomCap so comparisons against
// ranks and bitset sizes stay valid even when the true value overflows.
inline constexpr std::uint64_t kBinomCap = UINT64_C(1) << 62;

std::uint64_t binom(int n, int k);

// Colexicographic rank of a strictly increasing r-subset of [1, n].
// {1,..,r} has rank 0, {n-r+1,..,n} has rank binom(n,r)-1.
std::uint64_t colex_rank(std::span<const int> edge);
std::vector<int> colex_unrank(std::uint64_t rank, int r);
void colex_unrank_into(std::uint64_t rank, int r, std::vector<int>& edge);

// Advance a strictly increasing k-subset of [1, n] to its colex successor.
// Returns false (leaving the subset at {1..k}) after the last one.
bool next_subset_colex(std::vector<int>& subset, int n);

bool is_strictly_increasing(std::span<const int> edge, int n);

} // namespace daisy

#endif
