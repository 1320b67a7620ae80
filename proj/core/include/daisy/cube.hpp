#ifndef DAISY_CUBE_HPP
#define DAISY_CUBE_HPP

#include "daisy/bounds.hpp"
#include "daisy/certificate.hpp"
#include "daisy/family.hpp"

#include <functional>
#include <string>

namespace daisy {

/// Vertex subset of {0,1}^n. Point codes are integers below 2^n with bit i
/// (0-based) holding coordinate i+1.
class CubeFamily {
public:
    explicit CubeFamily(int n);

    int n() const { return n_; }
    std::uint64_t size() const { return count_; }
    std::uint64_t point_count() const { return UINT64_C(1) << n_; }
    bool contains(std::uint32_t code) const { return members_.test(code); }
    void insert(std::uint32_t code);
    void insert_subset(std::span<const int> vertices); // r-subset of [n] as a point
    void for_each_member(const std::function<void(std::uint32_t)>& fn) const;

    bool operator==(const CubeFamily& other) const = default;

private:
    int n_;
    std::uint64_t count_ = 0;
    Bitset members_;
};

Rational cube_density(const CubeFamily& f);

/// Axis-aligned subcube: coordinates in fixed_mask pinned to fixed_values.
struct Subcube {
    std::uint32_t fixed_mask = 0;
    std::uint32_t fixed_values = 0; // subset of fixed_mask
    int n = 0;
    int dim() const;
    bool contains(std::uint32_t code) const {
        return (code & fixed_mask) == fixed_values;
    }
    std::vector<int> fixed_coords() const;      // 1-based
    std::vector<int> fixed_value_bits() const;  // aligned with fixed_coords
};

// Every d-subcube exactly once: fixed coordinate sets by colex rank, values
// by binary counter (low chosen coordinate = low counter bit).
void for_each_subcube(int n, int d, const std::function<bool(const Subcube&)>& fn);
std::uint64_t subcube_count(int n, int d); // binom(n, d) * 2^(n-d)

enum class CheckMode { kAuto, kExhaustive, kSampled };

struct CubeCheckOptions {
    CheckMode mode = CheckMode::kAuto;
    std::uint64_t seed = 0;
    std::uint64_t samples = 100'000;
    std::uint64_t exhaustive_cap = 10'000'000; // subcube count threshold
    int workers = 1;
};

// Pass iff every d-subcube contains a member; the witness (on failure) is
// the first missed subcube in enumeration order, independent of workers.
Certificate hits_every_subcube(const CubeFamily& f, int d,
                               const CubeCheckOptions& opts = {});

// Pass iff every d-subcube holds fewer than `threshold` members; records the
// maximum and the first subcube attaining it. threshold 0 means the default
// C(d, floor(d/2)).
Certificate count_per_subcube(const CubeFamily& f, int d, std::uint64_t threshold = 0,
                              const CubeCheckOptions& opts = {});

// All points with Hamming weight congruent to offset mod period.
CubeFamily layers_mod_construction(int n, int period, int offset);

/// Transversal-layer hitting set: every layer that is a multiple of
/// ceil(d/2) carries the complement of a daisy-free independence layer with
/// q the largest prime power <= floor(d/2) - 1. Requires d >= 6; smaller d
/// has no such prime power and is served by layers_mod_construction.
CubeFamily layered_hitting_family(int n, int d);

// Daisy-free independence layers at every third level (q = 2); each
// 4-subcube then holds at most five of the points.
CubeFamily five_point_family(int n);

// Same construction at layers spaced ceil(C * sqrt(d)) apart.
CubeFamily sqrt_spaced_family(int n, int d, double C);

/// Edges of Q_n incident to at least one family vertex. Edge ids are
/// z * n + i with z the endpoint whose coordinate i+1 is 0.
struct CubeEdgeSet {
    int n = 0;
    std::uint64_t count = 0;
    Bitset edges;
    bool contains(std::uint32_t lower_code, int dir) const {
        return edges.test(static_cast<std::size_t>(lower_code) *
                              static_cast<std::size_t>(n) +
                          static_cast<std::size_t>(dir));
    }
};
CubeEdgeSet derive_edge_hitting_set(const CubeFamily& f);

// Exhaustive helper: does the edge set meet the edge set of every Q_d copy
// (equivalently, of every d-subcube with d >= 1)?
bool edge_set_meets_every_subcube(const CubeEdgeSet& e, int d);

/// Closed-form bound summary for dimension d.
struct CubeBoundReport {
    int d = 0;
    bool master_available = false;
    std::uint64_t q_of_d = 0;
    long double beta_q = 0;
    long double gamma_upper_master = 0; // valid when master_available
    long double gamma_lower_aks = 0;
    Rational gamma_upper_aks;
    long double rho_upper = 0;            // twice the best vertex bound
    long double exp_upper_exponent = 0;   // gamma_d = O(2^-(d/8)): the d/8
    bool passes_suff = false;
    std::string note;

    std::string to_json() const;
};
CubeBoundReport gamma_report(int d, long double tol = 1e-9L);

// Cube family file: "cube-family v1", "n=<n>", one member per line as an
// n-character 0/1 string with coordinate 1 leftmost, ascending code order.
void write_cube_family(std::ostream& out, const CubeFamily& f);
CubeFamily read_cube_family(std::istream& in);
void write_cube_family_file(const std::string& path, const CubeFamily& f);
CubeFamily read_cube_family_file(const std::string& path);

} // namespace daisy

#endif
