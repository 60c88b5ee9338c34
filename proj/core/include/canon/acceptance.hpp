#pragma once

#include <json.hpp>

#include <functional>
#include <string>
#include <vector>

namespace canon::acceptance {

struct Criterion {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    double time_limit = 0;
    nlohmann::json detail;

    std::string line() const;  // "[PASS] 3 family reproduction (12.1 s)"
};

struct Options {
    unsigned jobs = 1;
};

int criterion_count();
Criterion run_criterion(int id, const Options& opt = {});

// Runs every criterion in order, reporting each one as soon as it finishes.
std::vector<Criterion> run_all(const Options& opt = {},
                               const std::function<void(const Criterion&)>& on_done = {});

}  // namespace canon::acceptance
