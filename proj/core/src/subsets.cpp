#include "daisy/subsets.hpp"

#include <mutex>
#include <stdexcept>

namespace daisy {

namespace {

// Pascal rows are extended lazily and kept forever; the artifact never
// needs n beyond a few hundred.
std::vector<std::vector<std::uint64_t>> g_pascal; // g_pascal[n][k], k <= n
std::mutex g_pascal_mutex;

void extend_pascal(int n) {
    for (int i = static_cast<int>(g_pascal.size()); i <= n; ++i) {
        std::vector<std::uint64_t> row(static_cast<std::size_t>(i) + 1, 1);
        for (int k = 1; k < i; ++k) {
            std::uint64_t a = g_pascal[i - 1][k - 1];
            std::uint64_t b = g_pascal[i - 1][k];
            std::uint64_t sum = (a >= kBinomCap || b >= kBinomCap || a + b >= kBinomCap)
                                    ? kBinomCap
                                    : a + b;
            row[static_cast<std::size_t>(k)] = sum;
        }
        g_pascal.push_back(std::move(row));
    }
}

} // namespace

std::uint64_t binom(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    std::lock_guard<std::mutex> lock(g_pascal_mutex);
    extend_pascal(n);
    return g_pascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::uint64_t colex_rank(std::span<const int> edge) {
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < edge.size(); ++i)
        rank += binom(edge[i] - 1, static_cast<int>(i) + 1);
    return rank;
}

void colex_unrank_into(std::uint64_t rank, int r, std::vector<int>& edge) {
    edge.resize(static_cast<std::size_t>(r));
    for (int i = r; i >= 1; --i) {
        // largest a with binom(a-1, i) <= rank
        int a = i; // binom(i-1, i) = 0 <= rank always
        while (binom(a, i) <= rank) ++a;
        edge[static_cast<std::size_t>(i) - 1] = a;
        rank -= binom(a - 1, i);
    }
}

std::vector<int> colex_unrank(std::uint64_t rank, int r) {
    std::vector<int> edge;
    colex_unrank_into(rank, r, edge);
    return edge;
}

bool next_subset_colex(std::vector<int>& subset, int n) {
    const int k = static_cast<int>(subset.size());
    for (int i = 0; i < k; ++i) {
        int limit = (i + 1 < k) ? subset[static_cast<std::size_t>(i) + 1] - 1 : n;
        if (subset[static_cast<std::size_t>(i)] < limit) {
            ++subset[static_cast<std::size_t>(i)];
            for (int j = 0; j < i; ++j) subset[static_cast<std::size_t>(j)] = j + 1;
            return true;
        }
    }
    for (int j = 0; j < k; ++j) subset[static_cast<std::size_t>(j)] = j + 1;
    return false;
}

bool is_strictly_increasing(std::span<const int> edge, int n) {
    int prev = 0;
    for (int v : edge) {
        if (v <= prev || v > n) return false;
        prev = v;
    }
    return true;
}

} // namespace daisy
