#ifndef DAISY_FIELD_HPP
#define DAISY_FIELD_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace daisy {

/// Arithmetic context for GF(p^k). Elements are stored as integer codes in
/// [0, q): the base-p digits of a code are the coefficients of the residue
/// polynomial, low degree first. Immutable after construction; all element
/// operations are pure, so a context may be shared freely across threads.
class FieldContext {
public:
    // Chooses the lexicographically smallest (coefficients compared low
    // degree first) monic irreducible modulus of degree k over F_p.
    static FieldContext make(std::uint32_t p, int k);

    std::uint32_t p() const { return p_; }
    int k() const { return k_; }
    std::uint32_t q() const { return q_; }
    // Length k+1, low degree first, leading coefficient 1.
    const std::vector<std::uint32_t>& modulus_poly() const { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const; // throws on a == 0
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    std::vector<std::uint32_t> digits(std::uint32_t code) const;
    std::uint32_t from_digits(std::span<const std::uint32_t> coeffs) const;

private:
    FieldContext() = default;
    std::uint32_t p_ = 0;
    int k_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
};

/// Vector over GF(q), entries as element codes.
using FieldVec = std::vector<std::uint32_t>;

// Rank by Gaussian elimination: rows processed in input order, pivot is the
// first nonzero entry in column order. All vectors must share one dimension.
int rank_of(const FieldContext& ctx, std::span<const FieldVec> vectors);

// Bijection between nonzero vectors of GF(q)^d and labels in [1, q^d - 1]:
// v = (a_0,..,a_{d-1}) maps to sum a_i q^i with a_i the element code.
std::uint64_t vec_label(const FieldContext& ctx, const FieldVec& v);
FieldVec label_vec(const FieldContext& ctx, std::uint64_t label, int dim);

/// Incremental row-echelon basis for backtracking enumeration: push returns
/// false (and stores nothing) when the vector is dependent on the rows held.
class EchelonBasis {
public:
    EchelonBasis(const FieldContext& ctx, int dim) : ctx_(&ctx), dim_(dim) {}

    bool push(const FieldVec& v);
    void pop();
    int size() const { return static_cast<int>(rows_.size()); }
    // Reduces a copy of v by the held rows; true iff it vanishes.
    bool in_span(const FieldVec& v) const;

private:
    void reduce(FieldVec& v) const;
    const FieldContext* ctx_;
    int dim_;
    std::vector<FieldVec> rows_; // pivot-normalized to 1
    std::vector<int> pivots_;
};

bool is_prime(std::uint64_t x);
// Factors q as p^k; throws if q is not a prime power >= 2.
void factor_prime_power(std::uint64_t q, std::uint32_t& p, int& k);

} // namespace daisy

#endif
