#pragma once

#include "canon/bigint.hpp"
#include "canon/multipoly.hpp"
#include "canon/quad_ext.hpp"

#include <string>
#include <utility>
#include <vector>

namespace canon::algebra {

// Dense univariate polynomial over Q, coefficient i belongs to t^i.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<BigRational> coeffs);
    static UPoly constant(const BigRational& c);
    static UPoly monomial(const BigRational& c, std::size_t power);
    // Polynomial with the given roots: ∏ (t − r).
    static UPoly from_roots(const std::vector<BigRational>& roots);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<BigRational>& coeffs() const { return c_; }
    BigRational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigRational(0); }
    const BigRational& lead() const { return c_.back(); }

    UPoly monic() const;
    UPoly derivative() const;
    // Scaled to coprime integer coefficients with a positive leading one.
    UPoly primitive() const;

    BigRational eval(const BigRational& x) const;
    QuadExt eval(const QuadExt& x) const;

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly scaled(const BigRational& c) const;
    friend bool operator==(const UPoly&, const UPoly&) = default;

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<BigRational> c_;
};

// Quotient and remainder; throws DomainError on division by zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
// Monic gcd (zero when both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& p);
// p(q(t)) mod m, used for the rational univariate representation.
UPoly compose_mod(const UPoly& p, const UPoly& q, const UPoly& m);
UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& m);

// Reads a MultiPoly that uses only variable `var`; throws DomainError otherwise.
UPoly to_upoly(const MultiPoly& p, std::size_t var);
// Embeds p as a polynomial in variable `var` of an nvars-variate ring.
MultiPoly to_multipoly(const UPoly& p, std::size_t nvars, std::size_t var, MonomialOrder order);

// Closed interval [lo, hi]; lo == hi marks an exactly known rational root.
struct RationalInterval {
    BigRational lo, hi;
};

// One disjoint interval per distinct real root of p, increasing, each of
// width at most max_width (when max_width > 0).
std::vector<RationalInterval> sturm_isolate(const UPoly& p, const BigRational& max_width = BigRational(0));
// Number of distinct real roots in (a, b].
int sturm_count(const UPoly& p, const BigRational& a, const BigRational& b);

}  // namespace canon::algebra
