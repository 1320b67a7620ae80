#include "daisy/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace daisy {

namespace {

using Poly = std::vector<std::uint32_t>; // low degree first

int degree(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

// f mod g over F_p, g monic.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
    int dg = degree(g);
    for (int df = degree(f); df >= dg; df = degree(f)) {
        std::uint64_t c = f[static_cast<std::size_t>(df)];
        int shift = df - dg;
        for (int i = 0; i <= dg; ++i) {
            std::uint64_t sub = c * g[static_cast<std::size_t>(i)] % p;
            std::uint32_t& coef = f[static_cast<std::size_t>(i + shift)];
            coef = static_cast<std::uint32_t>((coef + p - sub) % p);
        }
    }
    return f;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<std::uint32_t>(
                (out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
    return out;
}

bool poly_is_zero(const Poly& f) { return degree(f) < 0; }

// Irreducibility by trial division: no monic factor of degree 1..deg/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
    int df = degree(f);
    if (df <= 0) return false;
    if (df == 1) return true;
    for (int dg = 1; dg <= df / 2; ++dg) {
        std::uint64_t count = 1;
        for (int i = 0; i < dg; ++i) count *= p;
        for (std::uint64_t c = 0; c < count; ++c) {
            Poly g(static_cast<std::size_t>(dg) + 1, 0);
            std::uint64_t rem = c;
            for (int i = 0; i < dg; ++i) {
                g[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(rem % p);
                rem /= p;
            }
            g[static_cast<std::size_t>(dg)] = 1;
            if (poly_is_zero(poly_mod(f, g, p))) return false;
        }
    }
    return true;
}

} // namespace

bool is_prime(std::uint64_t x) {
    if (x < 2) return false;
    for (std::uint64_t d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

void factor_prime_power(std::uint64_t q, std::uint32_t& p, int& k) {
    if (q < 2) throw std::invalid_argument("prime power must be >= 2");
    std::uint64_t base = q;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            base = d;
            break;
        }
    }
    std::uint64_t x = q;
    int e = 0;
    while (x % base == 0) {
        x /= base;
        ++e;
    }
    if (x != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    p = static_cast<std::uint32_t>(base);
    k = e;
}

FieldContext FieldContext::make(std::uint32_t p, int k) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    std::uint64_t q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q > (UINT64_C(1) << 31)) throw std::overflow_error("p^k exceeds 2^31");
    }

    FieldContext ctx;
    ctx.p_ = p;
    ctx.k_ = k;
    ctx.q_ = static_cast<std::uint32_t>(q);

    // Candidates (c_0,..,c_{k-1}) in lexicographic order, c_0 most significant.
    std::uint64_t total = q;
    for (std::uint64_t code = 0; code < total; ++code) {
        Poly f(static_cast<std::size_t>(k) + 1, 0);
        std::uint64_t rem = code;
        for (int i = k - 1; i >= 0; --i) {
            f[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(rem % p);
            rem /= p;
        }
        f[static_cast<std::size_t>(k)] = 1;
        if (is_irreducible(f, p)) {
            ctx.modulus_ = f;
            return ctx;
        }
    }
    throw std::logic_error("no irreducible polynomial found"); // unreachable
}

std::vector<std::uint32_t> FieldContext::digits(std::uint32_t code) const {
    std::vector<std::uint32_t> out(static_cast<std::size_t>(k_));
    for (int i = 0; i < k_; ++i) {
        out[static_cast<std::size_t>(i)] = code % p_;
        code /= p_;
    }
    return out;
}

std::uint32_t FieldContext::from_digits(std::span<const std::uint32_t> coeffs) const {
    std::uint32_t code = 0;
    for (int i = k_ - 1; i >= 0; --i) {
        std::uint32_t c = (static_cast<std::size_t>(i) < coeffs.size())
                              ? coeffs[static_cast<std::size_t>(i)]
                              : 0;
        if (c >= p_) throw std::invalid_argument("coefficient out of range");
        code = code * p_ + c;
    }
    return code;
}

std::uint32_t FieldContext::add(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) return (a + b) % p_;
    std::uint32_t out = 0, mult = 1;
    for (int i = 0; i < k_; ++i) {
        out += (a % p_ + b % p_) % p_ * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

std::uint32_t FieldContext::neg(std::uint32_t a) const {
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    std::uint32_t out = 0, mult = 1;
    for (int i = 0; i < k_; ++i) {
        std::uint32_t d = a % p_;
        out += (d == 0 ? 0 : p_ - d) * mult;
        a /= p_;
        mult *= p_;
    }
    return out;
}

std::uint32_t FieldContext::sub(std::uint32_t a, std::uint32_t b) const {
    return add(a, neg(b));
}

std::uint32_t FieldContext::mul(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1)
        return static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(a) * b % p_);
    Poly fa = digits(a), fb = digits(b);
    Poly prod = poly_mod(poly_mul(fa, fb, p_), modulus_, p_);
    prod.resize(static_cast<std::size_t>(k_), 0);
    std::uint32_t code = 0;
    for (int i = k_ - 1; i >= 0; --i) code = code * p_ + prod[static_cast<std::size_t>(i)];
    return code;
}

std::uint32_t FieldContext::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t out = 1;
    while (e) {
        if (e & 1) out = mul(out, a);
        a = mul(a, a);
        e >>= 1;
    }
    return out;
}

std::uint32_t FieldContext::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inversion of zero");
    return pow(a, q_ - 2);
}

void EchelonBasis::reduce(FieldVec& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::uint32_t c = v[static_cast<std::size_t>(pivots_[r])];
        if (c == 0) continue;
        const FieldVec& row = rows_[r];
        for (int j = pivots_[r]; j < dim_; ++j)
            v[static_cast<std::size_t>(j)] =
                ctx_->sub(v[static_cast<std::size_t>(j)],
                          ctx_->mul(c, row[static_cast<std::size_t>(j)]));
    }
}

bool EchelonBasis::push(const FieldVec& v) {
    FieldVec w = v;
    reduce(w);
    int pivot = -1;
    for (int j = 0; j < dim_; ++j) {
        if (w[static_cast<std::size_t>(j)] != 0) {
            pivot = j;
            break;
        }
    }
    if (pivot < 0) return false;
    std::uint32_t scale = ctx_->inv(w[static_cast<std::size_t>(pivot)]);
    for (int j = pivot; j < dim_; ++j)
        w[static_cast<std::size_t>(j)] = ctx_->mul(scale, w[static_cast<std::size_t>(j)]);
    rows_.push_back(std::move(w));
    pivots_.push_back(pivot);
    return true;
}

void EchelonBasis::pop() {
    rows_.pop_back();
    pivots_.pop_back();
}

bool EchelonBasis::in_span(const FieldVec& v) const {
    FieldVec w = v;
    reduce(w);
    return std::all_of(w.begin(), w.end(), [](std::uint32_t c) { return c == 0; });
}

int rank_of(const FieldContext& ctx, std::span<const FieldVec> vectors) {
    if (vectors.empty()) return 0;
    const std::size_t dim = vectors.front().size();
    for (const FieldVec& v : vectors)
        if (v.size() != dim) throw std::invalid_argument("mixed vector dimensions");
    EchelonBasis basis(ctx, static_cast<int>(dim));
    for (const FieldVec& v : vectors) basis.push(v);
    return basis.size();
}

std::uint64_t vec_label(const FieldContext& ctx, const FieldVec& v) {
    std::uint64_t label = 0, mult = 1;
    for (std::uint32_t code : v) {
        label += static_cast<std::uint64_t>(code) * mult;
        mult *= ctx.q();
    }
    if (label == 0) throw std::invalid_argument("zero vector has no label");
    return label;
}

FieldVec label_vec(const FieldContext& ctx, std::uint64_t label, int dim) {
    std::uint64_t max = 1;
    for (int i = 0; i < dim; ++i) max *= ctx.q();
    if (label == 0 || label >= max) throw std::invalid_argument("label out of range");
    FieldVec v(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        v[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(label % ctx.q());
        label /= ctx.q();
    }
    return v;
}

} // namespace daisy
