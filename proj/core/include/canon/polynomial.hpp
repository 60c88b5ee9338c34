#pragma once

#include "canon/bigint.hpp"

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace canon {

using Exponents = std::vector<unsigned>;

// Sparse integer polynomial in x_1..x_n. No zero coefficients are stored;
// the constant term sits at the all-zero exponent vector.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : n_(nvars) {}

    static Polynomial constant(std::size_t nvars, const BigInt& c);
    static Polynomial variable(std::size_t nvars, std::size_t i);  // x_{i+1}
    static Polynomial monomial(const Exponents& e, const BigInt& c);

    std::size_t nvars() const { return n_; }
    const std::map<Exponents, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigInt coeff(const Exponents& e) const;
    void add_term(const Exponents& e, const BigInt& c);

    unsigned degree_in(std::size_t i) const;
    BigInt max_abs_coeff() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;

    BigRational eval(std::span<const BigRational> x) const;
    std::string str() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;
    friend auto operator<=>(const Polynomial& a, const Polynomial& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.terms_ < b.terms_ ? std::strong_ordering::less
             : b.terms_ < a.terms_ ? std::strong_ordering::greater
                                   : std::strong_ordering::equal;
    }

private:
    std::size_t n_ = 0;
    std::map<Exponents, BigInt> terms_;
};

struct PolySystem {
    std::size_t n = 0;
    std::vector<Polynomial> polys;
};

// Terms like `3*x1^2*x2 - 5*x3 + 7`.
Polynomial parse_polynomial(std::string_view text, std::size_t nvars, int line = 0);

// One polynomial per line (implicit "= 0"), `#` comment lines. The
// variable count is the largest index used unless a `vars <n>` header
// comes first.
PolySystem parse_poly_system(std::string_view text);
std::string serialize_poly_system(const PolySystem& sys);

}  // namespace canon
