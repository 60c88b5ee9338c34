#include "canon/compiler.hpp"
#include "canon/error.hpp"
#include "canon/rng.hpp"

#include <doctest.h>

#include <algorithm>

using namespace canon;
using namespace canon::compiler;
using E = CanonicalEquation;

namespace {

PolySystem sys_of(const char* text) { return parse_poly_system(text); }

BigInt formula_p(long M, long m, long n, const std::vector<unsigned>& d) {
    BigInt prod = 1;
    for (auto di : d) prod *= di + 1;
    return BigInt(2 * (M - m) - n) + BigInt(2 * m + 1) * prod;
}

// Values of every canonical variable for the given x_1..x_n.
std::vector<BigRational> extend(const CompilationResult& r, const std::vector<BigRational>& x) {
    std::vector<BigRational> v;
    for (auto& p : r.var_meaning) v.push_back(p.eval(std::span<const BigRational>(x)));
    return v;
}

bool holds(const E& e, const std::vector<BigRational>& a) {
    const BigRational& x = a[e.i - 1];
    switch (e.kind) {
        case EqKind::Unit: return x == 1;
        case EqKind::Add: return BigRational(x + a[e.j - 1]) == a[e.k - 1];
        default: return BigRational(x * a[e.j - 1]) == a[e.k - 1];
    }
}

bool is_q(const CompilationResult& r, std::uint32_t v) { return std::find(r.q.begin(), r.q.end(), v) != r.q.end(); }

// Self-additions on the q variables; any other one must define the zero constant.
std::size_t self_add_count(const CompilationResult& r) {
    std::size_t c = 0;
    for (auto& e : r.canonical.equations())
        if (e.kind == EqKind::Add && e.i == e.j && e.j == e.k) {
            if (is_q(r, e.i)) ++c;
            else CHECK(r.var_meaning[e.i - 1].is_zero());
        }
    return c;
}

}  // namespace

TEST_CASE("profile") {
    auto a = profile(sys_of("x1^2 - 2"));
    CHECK(a.max_coeff == 2);
    CHECK(a.m == 1);
    CHECK(a.degrees == std::vector<unsigned>{2});
    auto b = profile(sys_of("x1 + x2 - 1\nx1*x2 - 1"));
    CHECK(b.max_coeff == 1);
    CHECK(b.m == 2);
    CHECK(b.degrees == std::vector<unsigned>{1, 1});
    auto c = profile(sys_of("3*x1^2 + x2 - 5"));
    CHECK(c.max_coeff == 5);
    CHECK(c.degrees == std::vector<unsigned>{2, 1});
    CHECK_THROWS_WITH(profile(sys_of("vars 2\nx1 - 1")), "variable degree zero violates standing assumption");
}

TEST_CASE("family size and new-variable counts") {
    CHECK(count_T(1, {1}) == 9);
    CHECK(count_T(2, {2}) == 125);
    CHECK(count_T(1, {1, 1}) == 81);
    auto a = count_new_vars(2, 1, 1, {2});
    CHECK(a.p == 10);
    CHECK(a.constants == 5);
    CHECK(a.monomials == 1);
    CHECK(a.scaled == 2);
    CHECK(a.partial_sums == 2);
    CHECK(count_new_vars(1, 1, 2, {1, 1}).p == 10);
    for (long M = 1; M <= 4; ++M)
        for (long m = 1; m <= 3; ++m)
            for (auto d : {std::vector<unsigned>{1}, {2}, {1, 2}, {2, 2, 1}, {3, 1}}) {
                auto c = count_new_vars(M, static_cast<std::size_t>(m), d.size(), d);
                CHECK(c.p == formula_p(M, m, static_cast<long>(d.size()), d));
                CHECK(BigInt(c.constants + c.monomials + c.scaled + c.partial_sums) == c.p);
            }
}

TEST_CASE("compiling a univariate quadratic") {
    auto sys = sys_of("x1^2 - 2");
    auto r = compile(sys);
    CHECK(r.total_vars == 11);
    CHECK(r.p == 10);
    REQUIRE(r.q.size() == 1);
    CHECK(r.canonical.contains(E::add(r.q[0], r.q[0], r.q[0])));
    bool square = false;
    for (std::size_t k = 2; k <= r.total_vars; ++k)
        if (r.canonical.contains(E::mul(1, 1, static_cast<std::uint32_t>(k)))) square = true;
    CHECK(square);

    auto v = extend(r, {3});
    bool nine = false;
    for (std::size_t k = 1; k < r.total_vars; ++k)
        if (r.var_meaning[k] == Polynomial::monomial({2}, 1)) nine = v[k] == 9;
    CHECK(nine);
    CHECK(v[r.q[0] - 1] == 7);
    CHECK_FALSE(holds(E::add(r.q[0], r.q[0], r.q[0]), v));
    CHECK(verify_compilation(sys, r, 100, 1).ok());
}

TEST_CASE("compiling a two-polynomial system") {
    auto sys = sys_of("x1 + x2 - 1\nx1*x2 - 1");
    auto r = compile(sys);
    CHECK(self_add_count(r) == 2);
    bool xy = false;
    for (auto& p : r.var_meaning)
        if (p == Polynomial::monomial({1, 1}, 1)) xy = true;
    CHECK(xy);
    auto v = extend(r, {BigRational(1, 2), 2});
    CHECK(v[r.q[0] - 1] == BigRational(3, 2));
    bool all = true;
    for (auto& e : r.canonical.equations()) all = all && holds(e, v);
    CHECK_FALSE(all);
}

TEST_CASE("coarse construction") {
    auto r = compile_coarse(sys_of("x1^2 - 2"));
    CHECK(r.total_vars == 125);
    CHECK(r.coarse);
    CHECK(compile_coarse(sys_of("x1 - 1")).total_vars == 9);
    CHECK_THROWS_WITH(compile_coarse(sys_of("3*x1^3*x2^3 + x1 + x2")), "coarse construction too large");
    auto sys = sys_of("x1^2 - 2");
    CHECK(verify_compilation(sys, r, 50, 3).ok());
}

TEST_CASE("removing a multiplication breaks the structural check") {
    auto sys = sys_of("x1^2 - 2");
    auto r = compile(sys);
    for (auto& e : r.canonical.equations())
        if (e.kind == EqKind::Mul) {
            r.canonical.erase(e);
            break;
        }
    auto rep = verify_compilation(sys, r, 10, 1);
    CHECK_FALSE(rep.structural_ok);
    CHECK_FALSE(rep.ok());
}

TEST_CASE("compiled systems on random inputs") {
    Rng rng(44);
    for (int t = 0; t < 60; ++t) {
        auto sys = random_poly_system(rng);
        auto pr = profile(sys);
        auto r = compile(sys);
        CHECK(self_add_count(r) == sys.polys.size());
        CHECK(BigInt(static_cast<unsigned long>(r.total_vars)) ==
              BigInt(static_cast<unsigned long>(sys.n)) +
                  formula_p(pr.max_coeff.get_si(), static_cast<long>(pr.m), static_cast<long>(sys.n), pr.degrees));
        for (std::size_t i = 0; i < sys.n; ++i) CHECK(r.var_meaning[i] == Polynomial::variable(sys.n, i));
        CHECK(structurally_grounded(r));

        // Every non-constraint equation holds on the extension of any point.
        for (int k = 0; k < 5; ++k) {
            std::vector<BigRational> x;
            for (std::size_t i = 0; i < sys.n; ++i) x.push_back(rng.rational(100, 100));
            auto v = extend(r, x);
            bool vanish = true;
            for (auto& f : sys.polys) vanish = vanish && f.eval(std::span<const BigRational>(x)) == 0;
            bool all = true;
            for (auto& e : r.canonical.equations()) {
                bool constraint = e.kind == EqKind::Add && e.i == e.j && e.j == e.k && is_q(r, e.i);
                if (!constraint) CHECK(holds(e, v));
                all = all && holds(e, v);
            }
            CHECK(all == vanish);
        }
    }
}

TEST_CASE("roots extend to canonical solutions") {
    // (x1 - 2)(x2 + 1) and x1 - x2 - 3 vanish at (2, -1).
    auto sys = sys_of("x1*x2 + x1 - 2*x2 - 2\nx1 - x2 - 3");
    auto r = compile(sys);
    auto v = extend(r, {2, -1});
    for (auto& e : r.canonical.equations()) CHECK(holds(e, v));
    auto w = extend(r, {2, 0});
    bool all = true;
    for (auto& e : r.canonical.equations()) all = all && holds(e, w);
    CHECK_FALSE(all);
}

TEST_CASE("full identity mode only adds identities") {
    auto sys = sys_of("x1^2 - 1");
    CompileOptions opt;
    opt.full_h = true;
    auto plain = compile(sys), full = compile(sys, opt);
    CHECK(full.canonical.size() > plain.canonical.size());
    CHECK(plain.canonical.subset_of(full.canonical));
    CHECK(identities_hold(full));
    CHECK(verify_compilation(sys, full, 50, 9).ok());
}

TEST_CASE("polynomial text format") {
    auto sys = sys_of("3*x1^2*x2 - 5*x3 + 7\n# note\n-x2");
    CHECK(sys.n == 3);
    CHECK(sys.polys.size() == 2);
    CHECK(parse_poly_system(serialize_poly_system(sys)).polys == sys.polys);
    CHECK(sys_of("vars 4\nx1 - 1").n == 4);
    CHECK_THROWS_AS(sys_of("x1 ^ + 2"), ParseError);
}
