#include "canon/bounds.hpp"

#include "canon/error.hpp"

#include <cmath>

namespace canon {

namespace {

BigInt tower(unsigned k, std::uint64_t cap) {
    // 2^(2^k)
    if (k >= 63 || (std::uint64_t{1} << k) > cap) throw Error("bound overflow");
    return pow2(std::uint64_t{1} << k);
}

void require_positive(unsigned n) {
    if (n == 0) throw DomainError("bound requires n >= 1");
}

}  // namespace

BigInt bound_conj1(unsigned n, std::uint64_t exponent_cap) {
    require_positive(n);
    if (n == 1) return 1;
    return tower(n - 2, exponent_cap);
}

BigInt bound_conj3(unsigned n, std::uint64_t exponent_cap) {
    require_positive(n);
    if (n - 1 > exponent_cap) throw Error("bound overflow");
    return pow2(n - 1);
}

BigInt bound_21d(unsigned n, std::uint64_t exponent_cap) {
    require_positive(n);
    return tower(n - 1, exponent_cap);
}

Thm11Bound::Thm11Bound(unsigned n) : n_(n) {
    require_positive(n);
    squared_ = pow_int(5, n - 1);
}

BigInt Thm11Bound::floor_value() const { return isqrt(squared_); }

double Thm11Bound::approx() const { return std::pow(std::sqrt(5.0), static_cast<double>(n_ - 1)); }

}  // namespace canon
