#ifndef DAISY_CERTIFICATE_HPP
#define DAISY_CERTIFICATE_HPP

#include "daisy/daisy.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace daisy {

/// Machine-readable verification outcome. Kind-specific numbers go in
/// `params` (integers) and `notes` (preformatted strings); the JSON layout
/// flattens both into top-level keys.
struct Certificate {
    std::string kind;
    std::vector<std::pair<std::string, std::int64_t>> params;
    std::uint64_t size = 0;
    std::string density; // "p/q"
    std::string mode = "exhaustive";
    std::optional<std::uint64_t> seed;
    int workers = 1;
    bool pass = false;
    std::optional<DaisyWitness> witness;
    std::optional<std::pair<std::vector<int>, std::vector<int>>>
        subcube_witness; // fixed coords, fixed values
    std::vector<std::pair<std::string, std::string>> notes;
    std::string config; // filled in by the CLI

    std::string to_json() const; // pretty-printed, stable key order
};

inline constexpr const char* kToolVersion = "1.0.0";

// Exhaustive daisy-freeness check wrapped as a certificate; a found witness
// flips pass to false and is carried along.
Certificate assert_daisy_free(const UniformFamily& f, DaisyShape shape,
                              int workers = 1);

} // namespace daisy

#endif
