#include "canon/canonical.hpp"

#include "canon/error.hpp"

#include <algorithm>
#include <utility>

namespace canon {

namespace {

void check_positive(std::uint32_t v) {
    if (v == 0) throw DomainError("index out of range");
}

template <class V>
bool eval_impl(const CanonicalEquation& eq, std::span<const V> a) {
    if (eq.max_index() > a.size()) throw DomainError("index out of range");
    const V& xi = a[eq.i - 1];
    switch (eq.kind) {
        case EqKind::Unit: return xi == V(1);
        case EqKind::Add: return xi + a[eq.j - 1] == a[eq.k - 1];
        case EqKind::Mul: return xi * a[eq.j - 1] == a[eq.k - 1];
    }
    return false;
}

template <class V>
CanonicalSystem subset_impl(std::span<const V> a, Universe u) {
    CanonicalSystem out(a.size());
    for (const auto& eq : universe_equations(a.size(), u))
        if (evaluate(eq, a)) out.insert(eq);
    return out;
}

}  // namespace

CanonicalEquation CanonicalEquation::unit(std::uint32_t i) {
    check_positive(i);
    return {EqKind::Unit, i, 0, 0};
}

CanonicalEquation CanonicalEquation::add(std::uint32_t i, std::uint32_t j, std::uint32_t k) {
    check_positive(i);
    check_positive(j);
    check_positive(k);
    return normalize({EqKind::Add, i, j, k});
}

CanonicalEquation CanonicalEquation::mul(std::uint32_t i, std::uint32_t j, std::uint32_t k) {
    check_positive(i);
    check_positive(j);
    check_positive(k);
    return normalize({EqKind::Mul, i, j, k});
}

std::uint32_t CanonicalEquation::max_index() const {
    return kind == EqKind::Unit ? i : std::max({i, j, k});
}

std::string CanonicalEquation::str() const {
    std::string xi = "x" + std::to_string(i);
    switch (kind) {
        case EqKind::Unit: return xi + " = 1";
        case EqKind::Add: return xi + " + x" + std::to_string(j) + " = x" + std::to_string(k);
        case EqKind::Mul: return xi + " * x" + std::to_string(j) + " = x" + std::to_string(k);
    }
    return {};
}

CanonicalEquation normalize(const CanonicalEquation& eq) {
    CanonicalEquation out = eq;
    if (out.kind == EqKind::Unit) {
        out.j = out.k = 0;
    } else if (out.i > out.j) {
        std::swap(out.i, out.j);
    }
    return out;
}

CanonicalSystem::CanonicalSystem(std::size_t arity) : arity_(arity) {}

CanonicalSystem::CanonicalSystem(std::size_t arity, std::initializer_list<CanonicalEquation> eqs)
    : arity_(arity) {
    for (const auto& e : eqs) insert(e);
}

bool CanonicalSystem::insert(const CanonicalEquation& eq) {
    CanonicalEquation n = normalize(eq);
    if (n.i == 0 || (n.kind != EqKind::Unit && (n.j == 0 || n.k == 0)) || n.max_index() > arity_)
        throw DomainError("index out of range");
    return eqs_.insert(n).second;
}

bool CanonicalSystem::erase(const CanonicalEquation& eq) { return eqs_.erase(normalize(eq)) > 0; }

bool CanonicalSystem::contains(const CanonicalEquation& eq) const {
    return eqs_.count(normalize(eq)) > 0;
}

bool CanonicalSystem::has_mul() const {
    return std::any_of(eqs_.begin(), eqs_.end(), [](const auto& e) { return e.kind == EqKind::Mul; });
}

bool CanonicalSystem::has_unit() const {
    return std::any_of(eqs_.begin(), eqs_.end(), [](const auto& e) { return e.kind == EqKind::Unit; });
}

bool CanonicalSystem::subset_of(const CanonicalSystem& other) const {
    return std::includes(other.eqs_.begin(), other.eqs_.end(), eqs_.begin(), eqs_.end());
}

std::vector<CanonicalEquation> universe_equations(std::size_t n, Universe u) {
    std::vector<CanonicalEquation> out;
    out.reserve(universe_size(n, u));
    auto N = static_cast<std::uint32_t>(n);
    for (std::uint32_t i = 1; i <= N; ++i) out.push_back(CanonicalEquation::unit(i));
    for (std::uint32_t i = 1; i <= N; ++i)
        for (std::uint32_t j = i; j <= N; ++j)
            for (std::uint32_t k = 1; k <= N; ++k) {
                out.push_back(CanonicalEquation::add(i, j, k));
                if (u == Universe::E) out.push_back(CanonicalEquation::mul(i, j, k));
            }
    return out;
}

std::size_t universe_size(std::size_t n, Universe u) {
    std::size_t pairs = n * (n + 1) / 2 * n;
    return n + (u == Universe::E ? 2 * pairs : pairs);
}

bool evaluate(const CanonicalEquation& eq, std::span<const QuadExt> a) { return eval_impl(eq, a); }
bool evaluate(const CanonicalEquation& eq, std::span<const BigRational> a) { return eval_impl(eq, a); }

bool satisfies(const CanonicalSystem& sys, std::span<const QuadExt> a) {
    return std::all_of(sys.equations().begin(), sys.equations().end(),
                       [&](const auto& e) { return evaluate(e, a); });
}

bool satisfies(const CanonicalSystem& sys, std::span<const BigRational> a) {
    return std::all_of(sys.equations().begin(), sys.equations().end(),
                       [&](const auto& e) { return evaluate(e, a); });
}

CanonicalSystem satisfied_subset(std::span<const QuadExt> a, Universe u) { return subset_impl(a, u); }
CanonicalSystem satisfied_subset(std::span<const BigRational> a, Universe u) { return subset_impl(a, u); }

}  // namespace canon
