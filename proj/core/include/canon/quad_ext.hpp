#pragma once

#include "canon/bigint.hpp"

#include <complex>
#include <compare>
#include <string>

namespace canon {

// a + b*sqrt(d) with d square-free and d != 0, 1. A value with b == 0 is a
// plain rational and carries d == 0 so that equality is structural.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(long v) : a_(v) {}
    QuadExt(const BigInt& v) : a_(v) {}
    QuadExt(const BigRational& v) : a_(v) {}
    // Throws DomainError when d is not square-free or is 0 or 1.
    QuadExt(const BigRational& a, const BigRational& b, const BigInt& d);

    // sqrt(d) for any integer d (square factors pulled out).
    static QuadExt sqrt_of(const BigInt& d);

    const BigRational& a() const { return a_; }
    const BigRational& b() const { return b_; }
    const BigInt& d() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    bool is_real() const { return b_ == 0 || d_ > 0; }
    // Same radicand or one side rational.
    bool compatible(const QuadExt& o) const { return b_ == 0 || o.b_ == 0 || d_ == o.d_; }

    QuadExt conj() const;
    // (a+b√d)(a−b√d) = a² − d b².
    BigRational norm() const;
    // |v|² as an exact rational; only defined for d < 0 or rationals.
    BigRational abs_squared_complex() const;
    // Sign of a real value (d > 0 or rational). Throws for non-real.
    int real_sign() const;
    // Exact: |v| <= bound for bound >= 0, valid for every d.
    bool abs_le(const BigRational& bound) const;
    // Exact: |v|² <= bound_sq.
    bool abs_sq_le(const BigRational& bound_sq) const;

    std::complex<double> to_complex() const;
    std::string str() const;

    QuadExt operator-() const;
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    // Structural total order (d, a, b); not a numeric order.
    friend std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y);

private:
    void settle();
    const BigInt& joint_d(const QuadExt& o) const;

    BigRational a_{0};
    BigRational b_{0};
    BigInt d_{0};
};

// Sign of alpha + beta*sqrt(d) for d > 0.
int sign_sqrt_expr(const BigRational& alpha, const BigRational& beta, const BigInt& d);

// Square-free part s of d (d = s * k², sign kept) and k.
void split_square(const BigInt& d, BigInt& squarefree, BigInt& k);

}  // namespace canon
