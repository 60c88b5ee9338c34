#include "canon/bigint.hpp"
#include "canon/error.hpp"
#include "canon/groebner.hpp"
#include "canon/matrix.hpp"
#include "canon/number_theory.hpp"
#include "canon/rng.hpp"
#include "canon/solve.hpp"
#include "canon/univariate.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace canon;
using namespace canon::algebra;
using E = CanonicalEquation;

namespace {

BigRational cofactor_det(const std::vector<std::vector<BigRational>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    BigRational sum = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<BigRational>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<BigRational> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        BigRational term = m[0][c] * cofactor_det(minor);
        sum += (c % 2 ? -term : term);
    }
    return sum;
}

RatMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, bool integer) {
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = integer ? BigRational(rng.between(-9, 9)) : rng.rational(9, 5);
    return m;
}

MultiPoly var(std::size_t n, std::size_t i, MonomialOrder o = MonomialOrder::GrevLex) {
    return MultiPoly::variable(n, i, o);
}
MultiPoly cst(std::size_t n, long c, MonomialOrder o = MonomialOrder::GrevLex) {
    return MultiPoly::constant(n, BigRational(c), o);
}

// Bivariate polynomial as exponent pair -> coefficient.
using Bi = std::map<std::pair<unsigned, unsigned>, BigRational>;


// Coefficients in y (index = power) of f(u - c*y, y), each a polynomial in u.
std::vector<UPoly> sheared(const Bi& f, long c) {
    std::vector<UPoly> out;
    auto add = [&](std::size_t p, const UPoly& v) {
        if (out.size() <= p) out.resize(p + 1);
        out[p] = out[p] + v;
    };
    for (auto& [e, coef] : f) {
        auto [a, b] = e;
        // (u - c y)^a = sum_k C(a,k) u^(a-k) (-c)^k y^k
        BigInt binom = 1;
        for (unsigned k = 0; k <= a; ++k) {
            BigRational w = coef * BigRational(binom) * pow_rat(BigRational(-c), k);
            add(b + k, UPoly::monomial(w, a - k));
            binom = binom * (a - k) / (k + 1);
        }
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

UPoly upoly_det(const std::vector<std::vector<UPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    UPoly sum;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<UPoly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<UPoly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        UPoly t = m[0][c] * upoly_det(minor);
        sum = c % 2 ? sum - t : sum + t;
    }
    return sum;
}

// Resultant in y of two polynomials given by their y-coefficients.
UPoly resultant(const std::vector<UPoly>& f, const std::vector<UPoly>& g) {
    const std::size_t m = f.size() - 1, n = g.size() - 1, N = m + n;
    if (N == 0) return UPoly::constant(1);
    std::vector<std::vector<UPoly>> s(N, std::vector<UPoly>(N));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = f[m - k];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = g[n - k];
    return upoly_det(s);
}

// Distinct common complex zeros of f and g, by resultants after a shear; the
// largest count over several shears avoids accidental collisions. nullopt when
// the resultant vanishes identically.
std::optional<std::size_t> resultant_count(const Bi& f, const Bi& g) {
    std::size_t best = 0;
    bool any = false;
    for (long c : {2, 3, 5, 7}) {
        auto F = sheared(f, c), G = sheared(g, c);
        if (F.empty() || G.empty()) return std::nullopt;
        // Leading y-coefficients must be constants so nothing escapes to infinity.
        if (F.back().degree() != 0 || G.back().degree() != 0) continue;
        UPoly R = resultant(F, G);
        if (R.is_zero()) return std::nullopt;
        any = true;
        best = std::max<std::size_t>(best, static_cast<std::size_t>(std::max(0, squarefree_part(R).degree())));
    }
    if (!any) return std::nullopt;
    return best;
}

Bi bi_of(const E& e) {
    // variables x = 1, y = 2
    auto mono = [](std::uint32_t v) { return v == 1 ? std::pair<unsigned, unsigned>{1, 0} : std::pair<unsigned, unsigned>{0, 1}; };
    Bi p;
    auto acc = [&](std::pair<unsigned, unsigned> m, long c) { p[m] += c; };
    switch (e.kind) {
        case EqKind::Unit: acc(mono(e.i), 1); acc({0, 0}, -1); break;
        case EqKind::Add: acc(mono(e.i), 1); acc(mono(e.j), 1); acc(mono(e.k), -1); break;
        case EqKind::Mul: {
            auto a = mono(e.i), b = mono(e.j);
            acc({a.first + b.first, a.second + b.second}, 1);
            acc(mono(e.k), -1);
            break;
        }
    }
    for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
    return p;
}

MultiPoly multi_of(const Bi& f) {
    std::vector<Term> terms;
    for (auto& [e, c] : f) {
        Monomial m;
        if (e.first) m = m * Monomial::var(0, static_cast<std::uint16_t>(e.first));
        if (e.second) m = m * Monomial::var(1, static_cast<std::uint16_t>(e.second));
        terms.push_back({m, c});
    }
    return MultiPoly::from_terms(2, MonomialOrder::GrevLex, terms);
}

}  // namespace

TEST_CASE("fraction-free determinant") {
    CHECK(bareiss_det(RatMatrix{{1, 1}, {1, -1}}) == -2);
    CHECK(bareiss_det(RatMatrix::identity(5)) == 1);
    CHECK(bareiss_det(RatMatrix{{2, -1}, {-1, 2}}) == 3);
    CHECK_THROWS_AS(bareiss_det(RatMatrix(2, 3)), DomainError);
}

TEST_CASE("determinant agrees with cofactor expansion on random rational matrices") {
    Rng rng(17);
    for (int t = 0; t < 200; ++t) {
        std::size_t n = 1 + rng.below(4);
        auto m = random_matrix(rng, n, n, false);
        if (t % 5 == 0 && n > 1)
            for (std::size_t c = 0; c < n; ++c) m(1, c) = m(0, c) * 3;  // singular
        std::vector<std::vector<BigRational>> rows;
        for (std::size_t r = 0; r < n; ++r) rows.push_back(m.row(r));
        CHECK(bareiss_det(m) == cofactor_det(rows));
    }
}

TEST_CASE("Cramer's rule") {
    auto x = cramer_solve(RatMatrix{{1, 0}, {1, -1}}, {2, 0});
    CHECK(x == std::vector<BigRational>{2, 2});
    CHECK(cramer_solve(RatMatrix{{2}}, {1}) == std::vector<BigRational>{BigRational(1, 2)});
    CHECK(cramer_solve(RatMatrix{{1, 1}, {1, -1}}, {1, 0}) ==
          std::vector<BigRational>{BigRational(1, 2), BigRational(1, 2)});
    CHECK_THROWS_WITH(cramer_solve(RatMatrix{{1, 2}, {2, 4}}, {1, 1}), "singular");

    Rng rng(4);
    for (int t = 0; t < 100; ++t) {
        std::size_t n = 1 + rng.below(5);
        auto A = random_matrix(rng, n, n, false);
        if (bareiss_det(A) == 0) continue;
        std::vector<BigRational> b;
        for (std::size_t i = 0; i < n; ++i) b.push_back(rng.rational(20, 7));
        CHECK(A.apply(cramer_solve(A, b)) == b);
    }
}

TEST_CASE("Hadamard inequality") {
    CHECK(hadamard_bound(RatMatrix{{1, 1}, {1, -1}}).squared == 4);
    CHECK(hadamard_bound(RatMatrix::identity(6)).squared == 1);
    CHECK(hadamard_bound(RatMatrix{{1, 1, -1, 0}}).squared == 3);
    Rng rng(8);
    for (int t = 0; t < 300; ++t) {
        std::size_t n = 1 + rng.below(5);
        auto m = random_matrix(rng, n, n, true);
        BigRational prod = 1;
        for (std::size_t r = 0; r < n; ++r) {
            BigRational s = 0;
            for (std::size_t c = 0; c < n; ++c) s += m(r, c) * m(r, c);
            prod *= s;
        }
        CHECK(hadamard_bound(m).squared == prod);
        BigRational d = bareiss_det(m);
        CHECK(d * d <= prod);
    }
}

TEST_CASE("Groebner bases: small examples") {
    auto x = var(1, 0);
    auto one = buchberger({x - cst(1, 1), x - cst(1, 2)}, MonomialOrder::GrevLex);
    CHECK(one.is_one());
    CHECK(dimension_class(one) == DimensionClass::Empty);

    auto X = var(2, 0, MonomialOrder::Lex), Y = var(2, 1, MonomialOrder::Lex);
    auto gb = buchberger({X * X - Y, Y * Y - X}, MonomialOrder::Lex);
    CHECK(dimension_class(gb) == DimensionClass::Zero);
    CHECK(standard_monomials(gb).size() == 4);
    CHECK(enumerate_solutions({X * X - Y, Y * Y - X}).size() == 4);

    auto line = buchberger({var(2, 0) + var(2, 1) - cst(2, 1)}, MonomialOrder::GrevLex);
    CHECK(dimension_class(line) == DimensionClass::Positive);
    CHECK(dimension(line) == 1);

    auto sq = buchberger({var(2, 0) * var(2, 0) - cst(2, 2), var(2, 1) - var(2, 0)}, MonomialOrder::GrevLex);
    CHECK(dimension_class(sq) == DimensionClass::Zero);
}

TEST_CASE("Groebner bases: generators reduce to zero and input order does not matter") {
    Rng rng(21);
    int nontrivial = 0;
    for (int t = 0; t < 120; ++t) {
        std::size_t n = 2 + rng.below(2);
        CanonicalSystem sys(n);
        for (int k = 0; k < 3; ++k) {
            auto idx = [&] { return static_cast<std::uint32_t>(rng.between(1, static_cast<std::int64_t>(n))); };
            switch (rng.below(3)) {
                case 0: sys.insert(E::unit(idx())); break;
                case 1: sys.insert(E::add(idx(), idx(), idx())); break;
                default: sys.insert(E::mul(idx(), idx(), idx())); break;
            }
        }
        auto polys = system_polys(sys);
        auto gb = buchberger(polys, MonomialOrder::GrevLex);
        for (auto& f : polys) CHECK(in_ideal(f, gb));
        auto shuffled = polys;
        std::reverse(shuffled.begin(), shuffled.end());
        rng.shuffle(shuffled);
        auto gb2 = buchberger(shuffled, MonomialOrder::GrevLex);
        CHECK(gb.gens == gb2.gens);
        for (auto& g : gb.gens) {
            CHECK(g.lc() == 1);
            for (auto& h : gb.gens)
                if (&g != &h)
                    for (auto& term : g.terms()) CHECK_FALSE(h.lm().divides(term.m, n));
        }
        if (!gb.is_one()) ++nontrivial;
    }
    CHECK(nontrivial > 20);
}

TEST_CASE("budget exhaustion is an error, not an answer") {
    auto x = var(3, 0), y = var(3, 1), z = var(3, 2);
    std::vector<MultiPoly> gens{x * x * y - z * z + cst(3, 1), y * y * z - x + cst(3, 3), z * z * x - y * y - cst(3, 2)};
    CHECK_THROWS_AS(buchberger(gens, MonomialOrder::Lex, 2), BudgetExceeded);
}

TEST_CASE("complex consistency of canonical systems") {
    CHECK_FALSE(is_consistent_C(CanonicalSystem(1, {E::unit(1), E::add(1, 1, 1)})));
    CHECK(is_consistent_C(CanonicalSystem(2, {E::unit(1), E::add(1, 1, 2)})));
    CHECK(is_consistent_C(CanonicalSystem(1, {E::mul(1, 1, 1)})));
}

TEST_CASE("solution enumeration examples") {
    auto s = enumerate_solutions(CanonicalSystem(3, {E::unit(1), E::add(1, 1, 2), E::mul(2, 2, 3)}));
    REQUIRE(s.size() == 1);
    CHECK(s.points[0].rational_values() == std::vector<BigRational>{1, 2, 4});

    auto t = enumerate_solutions(CanonicalSystem(2, {E::mul(1, 1, 2), E::add(1, 1, 2)}));
    std::set<std::vector<BigRational>> pts;
    for (auto& p : t.points) pts.insert(p.rational_values());
    CHECK(pts == std::set<std::vector<BigRational>>{{0, 0}, {2, 4}});

    auto chain = enumerate_solutions(
        CanonicalSystem(4, {E::add(1, 1, 2), E::mul(1, 1, 2), E::mul(2, 2, 3), E::mul(3, 3, 4)}));
    std::set<std::vector<BigRational>> cpts;
    for (auto& p : chain.points) cpts.insert(p.rational_values());
    CHECK(cpts == std::set<std::vector<BigRational>>{{0, 0, 0, 0}, {2, 4, 16, 256}});

    CHECK_THROWS_AS(enumerate_solutions(CanonicalSystem(2, {E::add(1, 1, 2)})), DomainError);
}

TEST_CASE("real filtering and exact quadratic recognition") {
    auto x = var(1, 0);
    auto neg = enumerate_solutions(std::vector<MultiPoly>{x * x + cst(1, 1)});
    CHECK(neg.size() == 2);
    CHECK(real_points(neg).size() == 0);

    auto two = enumerate_solutions(std::vector<MultiPoly>{x * x - cst(1, 2)});
    auto re = real_points(two);
    REQUIRE(re.size() == 2);
    std::set<QuadExt> vals;
    for (auto& p : re.points) {
        REQUIRE(p.exact());
        vals.insert(p.exact_values()[0]);
    }
    CHECK(vals == std::set<QuadExt>{QuadExt::sqrt_of(2), -QuadExt::sqrt_of(2)});

    // x^3 = 1: one real root and a complex pair, both recognized over Q(sqrt(-3)).
    auto cube = enumerate_solutions(std::vector<MultiPoly>{x * x * x - cst(1, 1)});
    CHECK(cube.size() == 3);
    CHECK(real_points(cube).size() == 1);
}

TEST_CASE("cubic coordinates stay as certified disks") {
    auto x = var(1, 0);
    auto s = enumerate_solutions(std::vector<MultiPoly>{x * x * x - cst(1, 2)});
    REQUIRE(s.size() == 3);
    auto re = real_points(s);
    REQUIRE(re.size() == 1);
    auto& c = re.points[0].coords[0];
    CHECK_FALSE(c.exact);
    CHECK(c.approx().real() == doctest::Approx(1.2599210498948732));
    CHECK(c.abs_le(BigRational(2)));
    CHECK_FALSE(c.abs_le(BigRational(1)));
}

TEST_CASE("enumeration count matches a resultant oracle on two-variable systems") {
    auto eqs = universe_equations(2, Universe::E);
    std::size_t compared = 0;
    for (std::size_t a = 0; a < eqs.size(); ++a)
        for (std::size_t b = a + 1; b < eqs.size(); ++b) {
            Bi f = bi_of(eqs[a]), g = bi_of(eqs[b]);
            auto polys = std::vector<MultiPoly>{multi_of(f), multi_of(g)};
            if (classify(polys) != SolutionKind::ZeroDimensional) continue;
            auto oracle = resultant_count(f, g);
            if (!oracle) continue;
            CHECK(enumerate_solutions(polys).size() == *oracle);
            ++compared;
        }
    CHECK(compared > 20);

    Rng rng(99);
    std::size_t random_compared = 0;
    for (int t = 0; t < 60; ++t) {
        Bi f, g;
        for (unsigned i = 0; i <= 2; ++i)
            for (unsigned j = 0; i + j <= 2; ++j) {
                f[{i, j}] = BigRational(rng.between(-3, 3));
                g[{i, j}] = BigRational(rng.between(-3, 3));
            }
        for (Bi* p : {&f, &g})
            for (auto it = p->begin(); it != p->end();) it = it->second == 0 ? p->erase(it) : std::next(it);
        if (f.empty() || g.empty()) continue;
        auto polys = std::vector<MultiPoly>{multi_of(f), multi_of(g)};
        if (classify(polys) != SolutionKind::ZeroDimensional) continue;
        auto oracle = resultant_count(f, g);
        if (!oracle) continue;
        CHECK(enumerate_solutions(polys).size() == *oracle);
        ++random_compared;
    }
    CHECK(random_compared > 20);
}

TEST_CASE("enumeration count on triangular three-variable systems") {
    // a(x) = 0 with known distinct rational roots, y^2 = b(x), z = c(x, y).
    Rng rng(12);
    for (int t = 0; t < 40; ++t) {
        std::set<BigRational> roots;
        while (roots.size() < 1 + rng.below(3)) roots.insert(rng.rational(6, 3));
        BigRational b0 = rng.between(-2, 2), b1 = rng.between(-2, 2);
        if (t % 4 == 0) b0 = -b1 * *roots.begin();  // y^2 = 0 over the first root
        std::size_t expected = 0;
        for (auto& r : roots) expected += (b0 + b1 * r == 0) ? 1 : 2;

        auto x = var(3, 0), y = var(3, 1), z = var(3, 2);
        MultiPoly a = cst(3, 1);
        for (auto& r : roots) a = a * (x - MultiPoly::constant(3, r));
        MultiPoly b = MultiPoly::constant(3, b0) + x.scaled(b1);
        MultiPoly c = x * y + y.scaled(BigRational(rng.between(-3, 3))) + cst(3, 1);
        auto s = enumerate_solutions(std::vector<MultiPoly>{a, y * y - b, z - c});
        CHECK(s.size() == expected);
        for (std::size_t i = 0; i < s.size(); ++i) {
            CHECK(vanishes_at(s, i, a));
            CHECK(vanishes_at(s, i, y * y - b));
            CHECK(vanishes_at(s, i, z - c));
        }
    }
}

TEST_CASE("exact points re-verify against their system") {
    auto eqs = universe_equations(3, Universe::E);
    Rng rng(31);
    for (int t = 0; t < 150; ++t) {
        CanonicalSystem sys(3);
        for (int k = 0; k < 3; ++k) sys.insert(eqs[rng.below(eqs.size())]);
        auto polys = system_polys(sys);
        if (classify(polys) != SolutionKind::ZeroDimensional) continue;
        auto s = enumerate_solutions(polys);
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s.points[i].exact()) {
                auto v = s.points[i].exact_values();
                CHECK(satisfies(sys, std::span<const QuadExt>(v)));
            }
            CHECK(satisfied_subset(s, i, Universe::E).subset_of(satisfied_subset(s, i, Universe::E)));
            for (auto& e : sys.equations()) CHECK(satisfied_subset(s, i, Universe::E).contains(e));
        }
    }
}

TEST_CASE("Sturm isolation") {
    auto brackets = [](const UPoly& p, const std::vector<RationalInterval>& ivs) {
        for (std::size_t i = 0; i < ivs.size(); ++i) {
            auto& iv = ivs[i];
            if (iv.lo == iv.hi) {
                CHECK(p.eval(iv.lo) == 0);
            } else {
                CHECK(iv.lo < iv.hi);
                CHECK(BigRational(p.eval(iv.lo) * p.eval(iv.hi)) <= 0);
            }
            if (i > 0) CHECK(ivs[i - 1].hi <= iv.lo);
        }
    };
    UPoly q2({-2, 0, 1});
    auto sq2 = sturm_isolate(q2, BigRational(1, 1000));
    REQUIRE(sq2.size() == 2);
    brackets(q2, sq2);
    for (auto& iv : sq2) CHECK(BigRational(iv.hi - iv.lo) <= BigRational(1, 1000));
    CHECK(BigRational(sq2[0].lo * sq2[0].lo) >= 2);
    CHECK(BigRational(sq2[0].hi * sq2[0].hi) <= 2);
    CHECK(sturm_isolate(UPoly({1, 0, 1})).empty());
    UPoly c({0, -1, 0, 1});
    auto cub = sturm_isolate(c);
    REQUIRE(cub.size() == 3);
    brackets(c, cub);
    const long expect[] = {-1, 0, 1};
    for (int i = 0; i < 3; ++i) {
        CHECK(cub[i].lo <= expect[i]);
        CHECK(cub[i].hi >= expect[i]);
    }
    UPoly rep = UPoly::from_roots({1, 1, 2, BigRational(1, 3)});
    auto r = sturm_isolate(rep);
    CHECK(r.size() == 3);
    CHECK(sturm_count(rep, 0, 3) == 3);
    CHECK(sturm_count(rep, 1, 3) == 1);
}

TEST_CASE("primality and factorization") {
    CHECK(is_prime(BigInt(74531)));
    std::vector<BigInt> f4;
    for (auto& p : factorize(pow2(32) + pow2(16) + 1)) f4.push_back(p.prime);
    CHECK(f4 == std::vector<BigInt>{3, 7, 13, 97, 241, 673});
    CHECK(prime_factors(BigInt(114243)) == std::vector<BigInt>{3, 113, 337});
    CHECK(is_squarefree(BigInt(114243)));
    CHECK_FALSE(is_squarefree(BigInt(12)));

    // Sieve oracle.
    const int N = 20000;
    std::vector<bool> comp(N + 1, false);
    for (int i = 2; i * i <= N; ++i)
        if (!comp[i])
            for (int j = i * i; j <= N; j += i) comp[j] = true;
    for (int n = 2; n <= N; ++n) CHECK(is_prime(BigInt(n)) == !comp[n]);

    Rng rng(2);
    for (int t = 0; t < 300; ++t) {
        BigInt n = BigInt(static_cast<long>(rng.between(2, 1'000'000'000)));
        BigInt back = 1;
        bool sqfree = true;
        for (auto& pp : factorize(n)) {
            CHECK(is_prime(pp.prime));
            back *= pow_int(pp.prime, pp.exponent);
            if (pp.exponent > 1) sqfree = false;
        }
        CHECK(back == n);
        CHECK(is_squarefree(n) == sqfree);
    }
    auto big = primality(pow2(89) - 1);
    CHECK(big.prime);
    CHECK_FALSE(big.proven);
}

TEST_CASE("Chinese remaindering") {
    CHECK(crt({{2, 3}, {1, 4}}) == 5);
    CHECK(crt({{17, 5}}) == 2);
    CHECK(crt({{0, 1}, {3, 7}}) == 3);
    CHECK_THROWS_AS(crt({{1, 4}, {0, 6}}), DomainError);
    Rng rng(6);
    for (int t = 0; t < 300; ++t) {
        std::vector<std::pair<BigInt, BigInt>> cs;
        BigInt target = static_cast<long>(rng.between(0, 100000));
        for (int k = rng.between(1, 4); k > 0; --k) {
            BigInt m = static_cast<long>(rng.between(1, 60));
            cs.push_back({BigInt(target % m), m});
        }
        BigInt r = crt(cs);
        for (auto& [res, mod] : cs) CHECK(BigInt(r % mod) == res);
        CHECK(r >= 0);
        CHECK(r <= target);
    }
}

TEST_CASE("Pell fundamental solutions are minimal") {
    CHECK(pell_min(32) == std::pair<BigInt, BigInt>{17, 3});
    CHECK(pell_min(2) == std::pair<BigInt, BigInt>{3, 2});
    CHECK(pell_min(135) == std::pair<BigInt, BigInt>{244, 21});
    CHECK_THROWS_AS(pell_min(49), DomainError);
    for (long D = 2; D <= 200; ++D) {
        if (is_perfect_square(BigInt(D))) continue;
        auto [z, y] = pell_min(D);
        CHECK(BigInt(z * z - D * y * y) == 1);
        if (y > 2000) continue;  // brute force below only where cheap
        for (BigInt k = 1; k < y; ++k) CHECK_FALSE(is_perfect_square(BigInt(1 + D * k * k)));
    }
}
