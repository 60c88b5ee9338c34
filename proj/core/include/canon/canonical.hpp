#pragma once

#include "canon/bigint.hpp"
#include "canon/quad_ext.hpp"

#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace canon {

// 1-based variable index.
struct VarIndex {
    std::uint32_t value = 1;
    constexpr VarIndex() = default;
    constexpr explicit VarIndex(std::uint32_t v) : value(v) {}
    friend constexpr auto operator<=>(VarIndex, VarIndex) = default;
};

enum class EqKind : std::uint8_t { Unit, Add, Mul };

// x_i = 1 | x_i + x_j = x_k | x_i * x_j = x_k, stored with i <= j.
struct CanonicalEquation {
    EqKind kind = EqKind::Unit;
    std::uint32_t i = 1;
    std::uint32_t j = 0;
    std::uint32_t k = 0;

    static CanonicalEquation unit(std::uint32_t i);
    static CanonicalEquation add(std::uint32_t i, std::uint32_t j, std::uint32_t k);
    static CanonicalEquation mul(std::uint32_t i, std::uint32_t j, std::uint32_t k);

    std::uint32_t max_index() const;
    std::string str() const;

    friend auto operator<=>(const CanonicalEquation&, const CanonicalEquation&) = default;
};

CanonicalEquation normalize(const CanonicalEquation& eq);

class CanonicalSystem {
public:
    using Storage = std::set<CanonicalEquation>;

    CanonicalSystem() = default;
    explicit CanonicalSystem(std::size_t arity);
    CanonicalSystem(std::size_t arity, std::initializer_list<CanonicalEquation> eqs);

    std::size_t arity() const { return arity_; }
    const Storage& equations() const { return eqs_; }
    std::size_t size() const { return eqs_.size(); }
    bool empty() const { return eqs_.empty(); }

    // Normalizes; throws DomainError "index out of range" on bad indices.
    bool insert(const CanonicalEquation& eq);
    bool erase(const CanonicalEquation& eq);
    bool contains(const CanonicalEquation& eq) const;

    bool has_mul() const;
    bool has_unit() const;
    bool is_additive() const { return !has_mul(); }

    bool subset_of(const CanonicalSystem& other) const;

    friend bool operator==(const CanonicalSystem&, const CanonicalSystem&) = default;
    friend auto operator<=>(const CanonicalSystem& a, const CanonicalSystem& b) {
        if (auto c = a.arity_ <=> b.arity_; c != 0) return c;
        return std::lexicographical_compare_three_way(a.eqs_.begin(), a.eqs_.end(),
                                                      b.eqs_.begin(), b.eqs_.end());
    }

private:
    std::size_t arity_ = 0;
    Storage eqs_;
};

enum class Universe { E, W };

// All equations of E_n (or W_n) in a fixed order: units, then additions and
// multiplications interleaved per (i, j, k).
std::vector<CanonicalEquation> universe_equations(std::size_t n, Universe u);
std::size_t universe_size(std::size_t n, Universe u);

using Assignment = std::vector<QuadExt>;

// Exact evaluation. Throws "incompatible extension" on mixed radicands.
bool evaluate(const CanonicalEquation& eq, std::span<const QuadExt> a);
bool evaluate(const CanonicalEquation& eq, std::span<const BigRational> a);
bool satisfies(const CanonicalSystem& sys, std::span<const QuadExt> a);
bool satisfies(const CanonicalSystem& sys, std::span<const BigRational> a);

CanonicalSystem satisfied_subset(std::span<const QuadExt> a, Universe u);
CanonicalSystem satisfied_subset(std::span<const BigRational> a, Universe u);

}  // namespace canon
