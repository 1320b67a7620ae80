#include "daisy/certificate.hpp"

#include <json.hpp>

namespace daisy {

std::string Certificate::to_json() const {
    nlohmann::ordered_json j;
    j["kind"] = kind;
    j["version"] = kToolVersion;
    for (const auto& [key, value] : params) j[key] = value;
    j["size"] = size;
    if (!density.empty()) j["density"] = density;
    j["mode"] = mode;
    if (seed)
        j["seed"] = *seed;
    else
        j["seed"] = nullptr;
    j["workers"] = workers;
    if (witness) {
        j["witness"] = {{"stem", witness->stem}, {"petals", witness->petals}};
    } else if (subcube_witness) {
        j["witness"] = {{"fixed_coords", subcube_witness->first},
                        {"fixed_values", subcube_witness->second}};
    } else {
        j["witness"] = nullptr;
    }
    for (const auto& [key, value] : notes) j[key] = value;
    if (!config.empty()) j["config"] = config;
    j["pass"] = pass;
    return j.dump(2);
}

Certificate assert_daisy_free(const UniformFamily& f, DaisyShape shape, int workers) {
    Certificate cert;
    cert.kind = "daisy-free";
    cert.params = {{"n", f.n()}, {"r", shape.r}, {"s", shape.s}, {"t", shape.t}};
    cert.size = f.size();
    cert.density = rational_str(density(f));
    cert.mode = "exhaustive";
    cert.workers = std::max(1, workers);
    cert.witness = find_daisy(f, shape, workers);
    cert.pass = !cert.witness.has_value();
    return cert;
}

} // namespace daisy
