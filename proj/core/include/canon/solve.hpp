#pragma once

#include "canon/canonical.hpp"
#include "canon/config.hpp"
#include "canon/groebner.hpp"
#include "canon/multipoly.hpp"
#include "canon/quad_ext.hpp"
#include "canon/roots.hpp"
#include "canon/univariate.hpp"

#include <complex>
#include <memory>
#include <optional>
#include <vector>

namespace canon::algebra {

// One solution coordinate: exact when it lies in Q or Q(√d), otherwise a
// disk holding it (radius <= 2^-box_precision_bits).
struct Coordinate {
    bool exact = false;
    QuadExt value;
    RootDisk box;

    bool is_real() const { return exact ? value.is_real() : box.reality == Reality::Real; }
    std::complex<double> approx() const;
    // Exact or certified |x| <= bound; throws Error("refinement exhausted")
    // when the disk straddles the bound.
    bool abs_le(const BigRational& bound) const;
    bool is_rational() const { return exact && value.is_rational(); }
};

struct SolutionPoint {
    std::vector<Coordinate> coords;

    bool is_real() const;
    // All coordinates exact with one shared radicand.
    bool exact() const;
    std::vector<QuadExt> exact_values() const;
    bool is_rational() const;
    std::vector<BigRational> rational_values() const;
    bool abs_le(const BigRational& bound) const;
    std::string str() const;
};

enum class SolutionKind { Inconsistent, ZeroDimensional, PositiveDimensional };

// Rational univariate representation of a radical zero-dimensional ideal:
// the points are (h_1(θ), …, h_n(θ)) for the roots θ of `minimal`.
struct Rur {
    std::size_t nvars = 0;
    std::vector<BigRational> separator;  // ℓ = Σ separator[i] x_i
    UPoly minimal;
    std::vector<UPoly> coords;
    std::vector<RootDisk> roots;
};

struct SolutionSet {
    SolutionKind kind = SolutionKind::Inconsistent;
    std::size_t nvars = 0;
    std::vector<SolutionPoint> points;
    std::shared_ptr<const Rur> rur;  // present for zero-dimensional sets

    std::size_t size() const { return points.size(); }
};

struct SolveOptions {
    std::uint64_t gb_budget = default_config().gb_budget;
    unsigned box_precision_bits = default_config().box_precision_bits;
    unsigned max_precision_bits = default_config().max_precision_bits;
    std::uint64_t retry_seed = 0x9e3779b97f4a7c15ULL;
};

// Polynomials of a canonical system, one variable per index (GrevLex).
std::vector<MultiPoly> system_polys(const CanonicalSystem& sys, MonomialOrder order = MonomialOrder::GrevLex);

SolutionKind classify(const std::vector<MultiPoly>& polys, std::uint64_t budget = default_config().gb_budget);

bool is_consistent_C(const CanonicalSystem& sys, std::uint64_t budget = default_config().gb_budget);

// Complete enumeration. Throws DomainError "not zero-dimensional" for
// positive-dimensional input, Error "degenerate triangular form" when no
// separating form is found after one retry, BudgetExceeded on Gröbner caps.
SolutionSet enumerate_solutions(const std::vector<MultiPoly>& polys, const SolveOptions& opt = {});
SolutionSet enumerate_solutions(const CanonicalSystem& sys, const SolveOptions& opt = {});

SolutionSet real_points(const SolutionSet& s);

// Exact test whether f vanishes at points[index].
bool vanishes_at(const SolutionSet& s, std::size_t index, const MultiPoly& f);

// Equations of the universe that hold at points[index], decided exactly.
CanonicalSystem satisfied_subset(const SolutionSet& s, std::size_t index, Universe u);

}  // namespace canon::algebra
