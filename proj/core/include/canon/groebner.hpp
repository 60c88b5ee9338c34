#pragma once

#include "canon/multipoly.hpp"

#include <cstdint>
#include <vector>

namespace canon::algebra {

struct GroebnerBasis {
    std::size_t nvars = 0;
    MonomialOrder order = MonomialOrder::GrevLex;
    // Monic, pairwise reduced, sorted by increasing leading monomial.
    std::vector<MultiPoly> gens;
    bool reduced = true;

    bool is_one() const { return gens.size() == 1 && gens[0].is_constant() && !gens[0].is_zero(); }
};

// Reduced Gröbner basis. Pairs are chosen by the normal strategy (smallest
// lcm, ties by generation index). Throws BudgetExceeded("budget exceeded")
// after `budget` S-polynomial reductions.
GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, MonomialOrder order, std::uint64_t budget);
GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, MonomialOrder order);

// Basis of ideal(gb) + (f), reusing gb as already-processed input.
GroebnerBasis extend(const GroebnerBasis& gb, const MultiPoly& f, std::uint64_t budget);
GroebnerBasis extend(const GroebnerBasis& gb, const std::vector<MultiPoly>& fs, std::uint64_t budget);

// Fully reduced remainder of f modulo `basis` (f must use the basis order).
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis);
inline MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& gb) {
    return normal_form(f.with_order(gb.order), gb.gens);
}
inline bool in_ideal(const MultiPoly& f, const GroebnerBasis& gb) { return normal_form(f, gb).is_zero(); }

enum class DimensionClass { Empty, Zero, Positive };

// Krull dimension of the ideal; -1 for the unit ideal.
int dimension(const GroebnerBasis& gb);
DimensionClass dimension_class(const GroebnerBasis& gb);
// A largest set of variables (0-based) carrying no leading monomial.
std::vector<std::size_t> independent_variables(const GroebnerBasis& gb);

// Monomials outside the leading-term ideal of a zero-dimensional basis, in
// increasing order. Throws DomainError when not zero-dimensional.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb);

}  // namespace canon::algebra
