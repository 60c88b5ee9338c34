#pragma once

#include <cstdint>
#include <json.hpp>

namespace canon {

struct Config {
    std::uint64_t gb_budget = 1'000'000;        // S-polynomial reductions per Buchberger call
    unsigned box_precision_bits = 40;           // certified box radius <= 2^-bits
    unsigned max_precision_bits = 8192;         // refinement ceiling for root isolation
    std::uint64_t exponent_cap = std::uint64_t{1} << 30;
    std::uint64_t coarse_cap = 1'000'000;       // count_T ceiling for the coarse compiler
    unsigned restart_limit = 50;                // probe_conj1 orders per seed
    unsigned slice_attempts = 8;                // random slices per real-consistency query
    unsigned jobs = 1;

    // Defaults overridden by CANON_* environment variables.
    static Config from_env();
    nlohmann::json to_json() const;
};

// Process-wide defaults, read once from the environment.
const Config& default_config();

}  // namespace canon
