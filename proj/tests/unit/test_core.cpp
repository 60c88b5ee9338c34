#include "canon/bounds.hpp"
#include "canon/canonical.hpp"
#include "canon/config.hpp"
#include "canon/error.hpp"
#include "canon/quad_ext.hpp"
#include "canon/rng.hpp"
#include "canon/system_io.hpp"

#include <doctest.h>

using namespace canon;
using E = CanonicalEquation;

namespace {

// Independent check of one equation on rationals.
bool holds(const E& e, const std::vector<BigRational>& a) {
    const BigRational& x = a[e.i - 1];
    switch (e.kind) {
        case EqKind::Unit: return x == 1;
        case EqKind::Add: return BigRational(x + a[e.j - 1]) == a[e.k - 1];
        default: return BigRational(x * a[e.j - 1]) == a[e.k - 1];
    }
}

std::vector<BigRational> random_assignment(Rng& rng, std::size_t n) {
    static const char* pool[] = {"0", "1", "2", "1/2", "-1", "4", "3", "-2", "1/4", "16"};
    std::vector<BigRational> a;
    for (std::size_t i = 0; i < n; ++i)
        a.push_back(rng.below(3) == 0 ? rng.rational(5, 3) : BigRational(pool[rng.below(10)]));
    return a;
}

E random_equation(Rng& rng, std::uint32_t n) {
    auto idx = [&] { return static_cast<std::uint32_t>(rng.between(1, n)); };
    switch (rng.below(3)) {
        case 0: return E::unit(idx());
        case 1: return E::add(idx(), idx(), idx());
        default: return E::mul(idx(), idx(), idx());
    }
}

}  // namespace

TEST_CASE("normalize orders the two operands") {
    CHECK(normalize(E{EqKind::Add, 3, 2, 1}) == E::add(2, 3, 1));
    CHECK(E::add(3, 2, 1).i == 2);
    CHECK(normalize(E::unit(4)) == E::unit(4));
    CHECK(normalize(E::mul(5, 5, 2)) == E::mul(5, 5, 2));
}

TEST_CASE("normalize is idempotent on random equations") {
    Rng rng(1);
    for (int t = 0; t < 2000; ++t) {
        E raw{static_cast<EqKind>(rng.below(3)), static_cast<std::uint32_t>(rng.between(1, 9)),
              static_cast<std::uint32_t>(rng.between(1, 9)), static_cast<std::uint32_t>(rng.between(1, 9))};
        if (raw.kind == EqKind::Unit) raw.j = raw.k = 0;
        E once = normalize(raw);
        CHECK(normalize(once) == once);
        if (once.kind != EqKind::Unit) CHECK(once.i <= once.j);
    }
}

TEST_CASE("evaluate on exact values") {
    std::vector<BigRational> a{1, 2, 4};
    CHECK(evaluate(E::mul(2, 2, 3), std::span<const BigRational>(a)));
    std::vector<BigRational> z{0, 0, 0};
    CHECK_FALSE(evaluate(E::unit(1), std::span<const BigRational>(z)));

    QuadExt s5 = QuadExt::sqrt_of(5);
    Assignment g{QuadExt(1), (s5 - 1) / 2, (s5 + 1) / 2};
    CHECK_FALSE(evaluate(E::add(2, 3, 1), std::span<const QuadExt>(g)));
    CHECK(evaluate(E::mul(2, 3, 1), std::span<const QuadExt>(g)));

    Assignment mixed{QuadExt::sqrt_of(2), QuadExt::sqrt_of(3), QuadExt(1)};
    CHECK_THROWS_WITH(evaluate(E::add(1, 2, 3), std::span<const QuadExt>(mixed)), "incompatible extension");
}

TEST_CASE("universe sizes") {
    CHECK(universe_size(3, Universe::E) == 39);
    CHECK(universe_size(3, Universe::W) == 21);
    CHECK(universe_equations(2, Universe::E).size() == 14);
    for (std::size_t n = 1; n <= 5; ++n) {
        std::size_t pairs = n * (n + 1) / 2;
        CHECK(universe_size(n, Universe::E) == n + 2 * pairs * n);
        CHECK(universe_size(n, Universe::W) == n + pairs * n);
    }
}

TEST_CASE("satisfied subset examples") {
    std::vector<BigRational> z{0, 0, 0};
    auto s = satisfied_subset(std::span<const BigRational>(z), Universe::E);
    CHECK(s.size() == 36);
    CHECK_FALSE(s.has_unit());

    std::vector<BigRational> d{1, 2, 4};
    auto t = satisfied_subset(std::span<const BigRational>(d), Universe::E);
    for (auto e : {E::unit(1), E::add(1, 1, 2), E::mul(2, 2, 3), E::add(2, 2, 3)}) CHECK(t.contains(e));

    std::vector<BigRational> ones{1, 1, 1};
    auto w = satisfied_subset(std::span<const BigRational>(ones), Universe::W);
    CHECK(w.size() == 3);
    CHECK(w.is_additive());
}

TEST_CASE("satisfied subset equals the filtered universe, and is monotone") {
    Rng rng(7);
    for (int t = 0; t < 300; ++t) {
        std::size_t n = 1 + rng.below(4);
        auto a = random_assignment(rng, n);
        for (auto u : {Universe::E, Universe::W}) {
            auto s = satisfied_subset(std::span<const BigRational>(a), u);
            std::size_t expected = 0;
            for (auto& e : universe_equations(n, u))
                if (holds(e, a)) {
                    ++expected;
                    CHECK(s.contains(e));
                }
            CHECK(s.size() == expected);
            CHECK(satisfies(s, std::span<const BigRational>(a)));
            CanonicalSystem sub(n);
            for (auto& e : s.equations())
                if (rng.below(2)) sub.insert(e);
            CHECK(sub.subset_of(s));
            CHECK(satisfies(sub, std::span<const BigRational>(a)));
        }
    }
}

TEST_CASE("bounds") {
    CHECK(bound_conj1(1) == 1);
    CHECK(bound_conj1(3) == 4);
    CHECK(bound_conj1(6) == 65536);
    for (unsigned n = 2; n < 9; ++n) CHECK(bound_conj1(n + 1) == bound_conj1(n) * bound_conj1(n));
    CHECK_THROWS_WITH(bound_conj1(40), "bound overflow");
    CHECK(bound_conj3(5) == 16);
    CHECK(bound_thm11(2).admits(BigRational(2)));
    CHECK_FALSE(bound_thm11(2).admits(BigRational(3)));
    CHECK(bound_thm11(5).squared() == 625);
    CHECK(bound_21d(4) == 256);
}

TEST_CASE("quadratic extension conjugate products") {
    Rng rng(3);
    const long ds[] = {2, 3, 5, -1, -3, 6, -7};
    for (int t = 0; t < 500; ++t) {
        BigRational a = rng.rational(50, 9), b = rng.rational(50, 9);
        BigInt d(ds[rng.below(7)]);
        if (b == 0) b = 1;
        QuadExt v(a, b, d);
        QuadExt prod = v * v.conj();
        CHECK(prod.is_rational());
        CHECK(prod.a() == BigRational(a * a - BigRational(d) * b * b));
        CHECK(v.norm() == prod.a());
    }
    CHECK_THROWS_AS(QuadExt(1, 1, 4), DomainError);
    CHECK(QuadExt::sqrt_of(12) == QuadExt(0, 2, 3));
}

TEST_CASE("text format") {
    auto s = parse_system("vars 3\nx1 = 1\nx1 + x1 = x2\nx2 * x2 = x3");
    CHECK(s == CanonicalSystem(3, {E::unit(1), E::add(1, 1, 2), E::mul(2, 2, 3)}));
    auto t = parse_system("vars 2\nx2 + x1 = x1");
    CHECK(t == CanonicalSystem(2, {E::add(1, 2, 1)}));
    CHECK_THROWS_WITH(parse_system("vars 1\nx2 = 1"), doctest::Contains("index out of range"));
    CHECK_THROWS_AS(parse_system("vars 2\nx1 - x2 = x1"), ParseError);
    CHECK_THROWS_AS(parse_system("x1 = 1"), ParseError);
    auto dup = parse_system("vars 2\n# comment\nx1 + x2 = x1\nx2 + x1 = x1\n\n");
    CHECK(dup.size() == 1);
}

TEST_CASE("text and JSON round trips on random systems") {
    Rng rng(5);
    for (int t = 0; t < 300; ++t) {
        std::uint32_t n = static_cast<std::uint32_t>(rng.between(1, 6));
        CanonicalSystem s(n);
        for (int k = rng.between(0, 12); k > 0; --k) s.insert(random_equation(rng, n));
        CHECK(parse_system(serialize_system(s)) == s);
        CHECK(system_from_json(system_to_json(s)) == s);
    }
}

TEST_CASE("configuration is read from the environment") {
    setenv("CANON_GB_BUDGET", "1234", 1);
    CHECK(Config::from_env().gb_budget == 1234);
    setenv("CANON_GB_BUDGET", "12x", 1);
    CHECK_THROWS_AS(Config::from_env(), ParseError);
    unsetenv("CANON_GB_BUDGET");
    CHECK(Config::from_env().gb_budget == 1'000'000);
}
