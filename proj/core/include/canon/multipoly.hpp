#pragma once

#include "canon/bigint.hpp"
#include "canon/quad_ext.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace canon::algebra {

inline constexpr std::size_t kMaxVars = 32;

enum class MonomialOrder { Lex, GrevLex };

struct Monomial {
    std::array<std::uint16_t, kMaxVars> e{};
    std::uint32_t deg = 0;

    static Monomial var(std::size_t i, std::uint16_t power = 1);
    bool is_one() const { return deg == 0; }
    bool divides(const Monomial& o, std::size_t nvars) const;
    Monomial operator*(const Monomial& o) const;
    // Requires divides(o).
    Monomial quotient_of(const Monomial& o) const;
    Monomial lcm(const Monomial& o) const;
    bool coprime(const Monomial& o, std::size_t nvars) const;
    // Index of the only variable present, or -1 (also -1 for 1).
    int single_variable(std::size_t nvars) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.deg == b.deg && a.e == b.e; }
};

// Negative, zero or positive as a precedes, equals or follows b in `order`.
int compare(const Monomial& a, const Monomial& b, MonomialOrder order, std::size_t nvars);

struct Term {
    Monomial m;
    BigRational c;
};

// Sparse polynomial over Q; terms kept strictly decreasing in the order.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(std::size_t nvars, MonomialOrder order);

    static MultiPoly constant(std::size_t nvars, const BigRational& c, MonomialOrder order = MonomialOrder::GrevLex);
    // x_{i+1}, i is 0-based.
    static MultiPoly variable(std::size_t nvars, std::size_t i, MonomialOrder order = MonomialOrder::GrevLex);
    static MultiPoly from_terms(std::size_t nvars, MonomialOrder order, std::vector<Term> terms);

    std::size_t nvars() const { return nvars_; }
    MonomialOrder order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
    const Term& lead() const { return terms_.front(); }
    const Monomial& lm() const { return terms_.front().m; }
    const BigRational& lc() const { return terms_.front().c; }
    unsigned total_degree() const;
    unsigned degree_in(std::size_t var) const;
    // Variables that occur, as a bit mask.
    std::uint64_t support() const;

    MultiPoly with_order(MonomialOrder order) const;
    MultiPoly monic() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const BigRational& c) const;
    MultiPoly mul_term(const Monomial& m, const BigRational& c) const;
    // *this -= c * m * g, in place.
    void sub_mul_term(const BigRational& c, const Monomial& m, const MultiPoly& g);
    // Removes and returns the leading term.
    Term pop_lead();
    // Appends a term smaller than every present term (caller guarantees it).
    void append_smaller(Term t) { terms_.push_back(std::move(t)); }

    BigRational eval(std::span<const BigRational> x) const;
    QuadExt eval(std::span<const QuadExt> x) const;

    std::string str() const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

private:
    void sort_and_merge();

    std::size_t nvars_ = 0;
    MonomialOrder order_ = MonomialOrder::GrevLex;
    std::vector<Term> terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned e);

}  // namespace canon::algebra
