#include "canon/config.hpp"

#include "canon/error.hpp"

#include <cstdlib>
#include <string>

namespace canon {

namespace {

template <class T>
void env_override(const char* name, T& field) {
    const char* raw = std::getenv(name);
    if (!raw || !*raw) return;
    try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(raw, &used);
        if (used != std::string(raw).size()) throw std::invalid_argument(name);
        field = static_cast<T>(v);
    } catch (const std::exception&) {
        throw ParseError(std::string("invalid value for ") + name + ": '" + raw + "'");
    }
}

}  // namespace

Config Config::from_env() {
    Config c;
    env_override("CANON_GB_BUDGET", c.gb_budget);
    env_override("CANON_BOX_PRECISION_BITS", c.box_precision_bits);
    env_override("CANON_MAX_PRECISION_BITS", c.max_precision_bits);
    env_override("CANON_EXPONENT_CAP", c.exponent_cap);
    env_override("CANON_COARSE_CAP", c.coarse_cap);
    env_override("CANON_RESTART_LIMIT", c.restart_limit);
    env_override("CANON_SLICE_ATTEMPTS", c.slice_attempts);
    env_override("CANON_JOBS", c.jobs);
    if (c.jobs == 0) c.jobs = 1;
    return c;
}

nlohmann::json Config::to_json() const {
    return {{"gb_budget", gb_budget},
            {"box_precision_bits", box_precision_bits},
            {"max_precision_bits", max_precision_bits},
            {"exponent_cap", exponent_cap},
            {"coarse_cap", coarse_cap},
            {"restart_limit", restart_limit},
            {"slice_attempts", slice_attempts},
            {"jobs", jobs}};
}

const Config& default_config() {
    static const Config cfg = Config::from_env();
    return cfg;
}

}  // namespace canon
