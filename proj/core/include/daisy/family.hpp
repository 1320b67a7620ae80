#ifndef DAISY_FAMILY_HPP
#define DAISY_FAMILY_HPP

#include "daisy/numbers.hpp"
#include "daisy/subsets.hpp"

#include <boost/dynamic_bitset.hpp>

#include <functional>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

namespace daisy {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// r-uniform hypergraph on [1, n]: members are a bit-indexed set over the
/// colex ranks of all r-subsets. Immutable value semantics: mutate while
/// building, then treat as a value.
class UniformFamily {
public:
    // Throws when binom(n, r) exceeds max_ranks (memory guard).
    UniformFamily(int n, int r, std::uint64_t max_ranks = UINT64_C(1) << 28);

    int n() const { return n_; }
    int r() const { return r_; }
    std::uint64_t rank_count() const { return members_.size(); }
    std::uint64_t size() const { return count_; }

    bool contains_rank(std::uint64_t rank) const { return members_.test(rank); }
    bool contains(std::span<const int> edge) const;
    void insert_rank(std::uint64_t rank);
    void insert(std::span<const int> edge);
    void erase_rank(std::uint64_t rank);

    // Visits member ranks in increasing (colex) order.
    void for_each_rank(const std::function<void(std::uint64_t)>& fn) const;
    std::vector<std::vector<int>> edges() const;

    static UniformFamily complete(int n, int r);
    // All r-subsets of [n] not in f.
    UniformFamily complement() const;

    bool operator==(const UniformFamily& other) const = default;

private:
    int n_;
    int r_;
    std::uint64_t count_ = 0;
    Bitset members_;
};

Rational density(const UniformFamily& f);

// Family file format, bit-exact:
//   daisy-family v1
//   n=<n> r=<r>
//   one member per line, strictly increasing 1-based vertices, colex order.
void write_family(std::ostream& out, const UniformFamily& f);
UniformFamily read_family(std::istream& in);
void write_family_file(const std::string& path, const UniformFamily& f);
UniformFamily read_family_file(const std::string& path);

/// Link of a vertex set S: all X with S + X in f, re-indexed onto
/// [1, n - |S|] by the recorded order-preserving map.
struct LinkResult {
    UniformFamily family;
    std::vector<int> old_labels; // old_labels[new - 1] = original vertex
};
LinkResult link(const UniformFamily& f, std::span<const int> s);

// Blow-up by a factor: vertex j becomes the class {(j-1)*factor+1, .., j*factor},
// each member becomes all transversals of its classes.
UniformFamily blow_up(const UniformFamily& f, int factor,
                      std::uint64_t max_ranks = UINT64_C(1) << 28);

} // namespace daisy

#endif
