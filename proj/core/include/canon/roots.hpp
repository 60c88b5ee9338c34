#pragma once

#include "canon/bigint.hpp"
#include "canon/univariate.hpp"

#include <complex>
#include <vector>

namespace canon::algebra {

struct ComplexRat {
    BigRational re{0}, im{0};

    ComplexRat operator+(const ComplexRat& o) const { return {re + o.re, im + o.im}; }
    ComplexRat operator-(const ComplexRat& o) const { return {re - o.re, im - o.im}; }
    ComplexRat operator*(const ComplexRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    BigRational norm2() const { return re * re + im * im; }
    ComplexRat conj() const { return {re, -im}; }
    std::complex<double> approx() const { return {re.get_d(), im.get_d()}; }
};

// Rational upper bound of sqrt(v) for v >= 0, within a relative 2^-50.
BigRational sqrt_upper(const BigRational& v);

enum class Reality { Real, NonReal };

// Closed disk holding exactly one root.
struct RootDisk {
    ComplexRat center;
    BigRational radius;
    Reality reality = Reality::Real;
};

// All complex roots of a square-free polynomial, as pairwise disjoint disks
// of radius <= 2^-target_bits with decided reality. Throws
// Error("refinement exhausted") if max_bits of working precision do not
// suffice.
std::vector<RootDisk> isolate_complex_roots(const UPoly& squarefree, unsigned target_bits, unsigned max_bits);

// Horner evaluation in exact complex rationals.
ComplexRat eval_complex(const UPoly& p, const ComplexRat& z);
// Upper bound of |p(z) − p(c)| over |z − c| <= r.
BigRational variation_bound(const UPoly& p, const ComplexRat& c, const BigRational& r);

}  // namespace canon::algebra
