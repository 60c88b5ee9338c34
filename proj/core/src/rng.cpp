#include "canon/rng.hpp"

#include "canon/error.hpp"

#include <limits>

namespace canon {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw DomainError("Rng::below(0)");
    // Rejection sampling on the top of the range keeps draws unbiased.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t v;
    do {
        v = eng_();
    } while (v >= limit);
    return v % n;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw DomainError("Rng::between with hi < lo");
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(span == 0 ? eng_() : below(span));
}

double Rng::unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

BigRational Rng::rational(long max_num, long max_den) {
    BigRational r(between(-max_num, max_num), between(1, max_den));
    r.canonicalize();
    return r;
}

}  // namespace canon
