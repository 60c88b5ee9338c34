#pragma once

#include "canon/bigint.hpp"
#include "canon/quad_ext.hpp"

#include <cstdint>

namespace canon {

inline constexpr std::uint64_t kDefaultExponentCap = std::uint64_t{1} << 30;

// 1 for n = 1, else 2^(2^(n-2)). Throws Error "bound overflow" past the cap.
BigInt bound_conj1(unsigned n, std::uint64_t exponent_cap = kDefaultExponentCap);
// 2^(n-1).
BigInt bound_conj3(unsigned n, std::uint64_t exponent_cap = kDefaultExponentCap);
// 2^(2^(n-1)).
BigInt bound_21d(unsigned n, std::uint64_t exponent_cap = kDefaultExponentCap);

// sqrt(5)^(n-1), kept as its square so that every comparison is exact.
class Thm11Bound {
public:
    explicit Thm11Bound(unsigned n);
    const BigInt& squared() const { return squared_; }
    bool admits(const BigRational& v) const { return v * v <= squared_; }
    bool admits(const QuadExt& v) const { return v.abs_sq_le(BigRational(squared_)); }
    // floor(sqrt(5)^(n-1)).
    BigInt floor_value() const;
    double approx() const;

private:
    unsigned n_;
    BigInt squared_;
};

inline Thm11Bound bound_thm11(unsigned n) { return Thm11Bound(n); }

}  // namespace canon
