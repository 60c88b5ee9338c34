#include "canon/quad_ext.hpp"

#include "canon/error.hpp"
#include "canon/number_theory.hpp"

#include <cmath>

namespace canon {

void split_square(const BigInt& d, BigInt& squarefree, BigInt& k) {
    if (d == 0) {
        squarefree = 0;
        k = 0;
        return;
    }
    squarefree = sgn(d) < 0 ? -1 : 1;
    k = 1;
    BigInt m = abs(d);
    if (m == 1) return;
    for (auto& pp : algebra::factorize(m)) {
        if (pp.exponent % 2) squarefree *= pp.prime;
        k *= pow_int(pp.prime, pp.exponent / 2);
    }
}

QuadExt::QuadExt(const BigRational& a, const BigRational& b, const BigInt& d) : a_(a), b_(b), d_(d) {
    if (b_ != 0) {
        if (d_ == 0 || d_ == 1 || !algebra::is_squarefree(d_))
            throw DomainError("QuadExt radicand must be square-free and not 0 or 1");
    }
    settle();
}

QuadExt QuadExt::sqrt_of(const BigInt& d) {
    BigInt s, k;
    split_square(d, s, k);
    if (s == 0) return QuadExt(0);
    if (s == 1) return QuadExt(BigRational(k));
    return QuadExt(BigRational(0), BigRational(k), s);
}

void QuadExt::settle() {
    if (b_ == 0) d_ = 0;
}

const BigInt& QuadExt::joint_d(const QuadExt& o) const {
    if (b_ != 0 && o.b_ != 0 && d_ != o.d_) throw Error("incompatible extension");
    return b_ != 0 ? d_ : o.d_;
}

QuadExt QuadExt::conj() const {
    QuadExt r = *this;
    r.b_ = -r.b_;
    return r;
}

BigRational QuadExt::norm() const { return a_ * a_ - BigRational(d_) * b_ * b_; }

BigRational QuadExt::abs_squared_complex() const {
    if (b_ == 0) return a_ * a_;
    if (d_ > 0) throw DomainError("abs_squared_complex on a real irrational value");
    return a_ * a_ - BigRational(d_) * b_ * b_;
}

int sign_sqrt_expr(const BigRational& alpha, const BigRational& beta, const BigInt& d) {
    int sa = sgn(alpha), sb = sgn(beta);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare alpha² with beta² d.
    BigRational lhs = alpha * alpha, rhs = beta * beta * BigRational(d);
    if (lhs > rhs) return sa;
    if (lhs < rhs) return sb;
    return 0;
}

int QuadExt::real_sign() const {
    if (!is_real()) throw DomainError("sign of a non-real value");
    return sign_sqrt_expr(a_, b_, d_);
}

bool QuadExt::abs_le(const BigRational& bound) const {
    if (bound < 0) return false;
    if (!is_real()) return abs_squared_complex() <= bound * bound;
    // -bound <= v <= bound
    return sign_sqrt_expr(bound - a_, -b_, d_) >= 0 && sign_sqrt_expr(a_ + bound, b_, d_) >= 0;
}

bool QuadExt::abs_sq_le(const BigRational& bound_sq) const {
    if (bound_sq < 0) return false;
    if (!is_real()) return abs_squared_complex() <= bound_sq;
    // v² = a² + d b² + 2ab√d
    BigRational alpha = a_ * a_ + BigRational(d_) * b_ * b_ - bound_sq;
    BigRational beta = 2 * a_ * b_;
    return sign_sqrt_expr(alpha, beta, d_) <= 0;
}

std::complex<double> QuadExt::to_complex() const {
    double a = a_.get_d();
    if (b_ == 0) return {a, 0.0};
    double b = b_.get_d();
    double d = d_.get_d();
    if (d > 0) return {a + b * std::sqrt(d), 0.0};
    return {a, b * std::sqrt(-d)};
}

std::string QuadExt::str() const {
    if (b_ == 0) return a_.get_str();
    std::string out;
    if (a_ != 0) out = a_.get_str() + (b_ > 0 ? "+" : "-");
    else if (b_ < 0) out = "-";
    BigRational bb = abs(b_);
    if (bb != 1) out += bb.get_str() + "*";
    out += "sqrt(" + d_.get_str() + ")";
    return out;
}

QuadExt QuadExt::operator-() const {
    QuadExt r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    d_ = joint_d(o);
    a_ += o.a_;
    b_ += o.b_;
    settle();
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    d_ = joint_d(o);
    a_ -= o.a_;
    b_ -= o.b_;
    settle();
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    BigInt d = joint_d(o);
    BigRational a = a_ * o.a_ + BigRational(d) * b_ * o.b_;
    BigRational b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    d_ = d;
    settle();
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
    joint_d(o);
    BigRational n = o.norm();
    if (n == 0) throw DomainError("division by zero");
    *this *= o.conj();
    a_ /= n;
    b_ /= n;
    settle();
    return *this;
}

std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y) {
    if (int c = cmp(x.d_, y.d_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (int c = cmp(x.a_, y.a_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (int c = cmp(x.b_, y.b_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace canon
