#pragma once

#include "canon/bigint.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace canon {

// mt19937_64 with our own bounded draws so results do not depend on the
// standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    // Uniform in [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n);
    // Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi);
    double unit();  // [0, 1)
    // p/q with |p| <= max_num, 1 <= q <= max_den.
    BigRational rational(long max_num, long max_den);

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 eng_;
};

inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t t) { return seed ^ t; }

}  // namespace canon
