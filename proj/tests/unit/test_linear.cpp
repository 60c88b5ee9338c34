#include "canon/error.hpp"
#include "canon/linear.hpp"
#include "canon/rng.hpp"

#include <doctest.h>

using namespace canon;
using namespace canon::linear;
using E = CanonicalEquation;

namespace {

std::vector<BigRational> rats(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

CanonicalSystem random_W(Rng& rng, std::uint32_t n, int eqs, bool with_unit) {
    CanonicalSystem s(n);
    if (with_unit) s.insert(E::unit(1));
    auto idx = [&] { return static_cast<std::uint32_t>(rng.between(1, n)); };
    for (int k = 0; k < eqs; ++k) s.insert(rng.below(5) == 0 ? E::unit(idx()) : E::add(idx(), idx(), idx()));
    return s;
}

BigRational inf_norm(const std::vector<BigRational>& v) {
    BigRational m = 0;
    for (auto& x : v) m = std::max(m, BigRational(abs(x)));
    return m;
}

std::uint64_t binom(unsigned n, unsigned k) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

TEST_CASE("affine solution sets") {
    auto a = solve_W(CanonicalSystem(2, {E::unit(1), E::add(1, 1, 2)}));
    CHECK(a.kind == AffineKind::Point);
    CHECK(a.point == rats({1, 2}));
    auto b = solve_W(CanonicalSystem(2, {E::add(1, 1, 1)}));
    CHECK(b.kind == AffineKind::Subspace);
    CHECK(b.dimension() == 1);
    CHECK(b.point[0] == 0);
    CHECK(b.basis[0][0] == 0);
    auto c = solve_W(CanonicalSystem(2, {E::unit(1), E::add(1, 2, 1)}));
    CHECK(c.point == rats({1, 0}));
    CHECK(solve_W(CanonicalSystem(1, {E::unit(1), E::add(1, 1, 1)})).kind == AffineKind::Inconsistent);
    CHECK_THROWS_AS(solve_W(CanonicalSystem(2, {E::mul(1, 1, 2)})), DomainError);
}

TEST_CASE("refinement to a point") {
    CHECK(refine_to_point(CanonicalSystem(2, {E::add(1, 1, 1)})).point == rats({0, 0}));
    CHECK(refine_to_point(CanonicalSystem(3)).point == rats({0, 0, 0}));
    auto r = refine_to_point(CanonicalSystem(2, {E::unit(1)}));
    CHECK(r.point == rats({1, 0}));
    CHECK(r.zeroed == std::vector<std::size_t>{2});
    CHECK_THROWS_AS(refine_to_point(CanonicalSystem(1, {E::unit(1), E::add(1, 1, 1)})), DomainError);
}

TEST_CASE("refinement solves the input and shrinks the dimension at every step") {
    Rng rng(10);
    int checked = 0;
    for (int t = 0; t < 400; ++t) {
        std::uint32_t n = static_cast<std::uint32_t>(rng.between(1, 6));
        auto s = random_W(rng, n, static_cast<int>(rng.between(0, 5)), rng.below(2));
        auto aff = solve_W(s);
        if (aff.kind == AffineKind::Inconsistent) continue;
        auto r = refine_to_point(s);
        CHECK(satisfies(s, std::span<const BigRational>(r.point)));
        CHECK(r.zeroed.size() <= n - 1 + (aff.dimension() == n ? 1 : 0));
        CHECK(r.zeroed.size() == aff.dimension());
        auto cur = s;
        std::size_t dim = aff.dimension();
        for (auto m : r.zeroed) {
            cur.insert(E::add(static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(m)));
            auto next = solve_W(cur);
            REQUIRE(next.kind != AffineKind::Inconsistent);
            CHECK(next.dimension() < dim);
            dim = next.dimension();
        }
        CHECK(dim == 0);
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("rational bound") {
    auto a = theorem11_check(CanonicalSystem(3, {E::unit(1), E::add(1, 1, 2), E::add(2, 2, 3)}));
    CHECK(a.point == rats({1, 2, 4}));
    CHECK(a.ok);
    auto b = theorem11_check(CanonicalSystem(2, {E::unit(1), E::add(2, 2, 1)}));
    CHECK(b.point == std::vector<BigRational>{1, BigRational(1, 2)});
    CHECK(b.ok);
    Rng rng(5);
    for (int t = 0; t < 300; ++t) {
        auto s = random_W(rng, 5, static_cast<int>(rng.between(1, 6)), true);
        if (solve_W(s).kind == AffineKind::Inconsistent) continue;
        auto r = theorem11_check(s);
        CHECK(r.ok);
        CHECK(inf_norm(r.point) * inf_norm(r.point) <= 625);
    }
}

TEST_CASE("integer bound") {
    auto a = theorem12_integer_check(CanonicalSystem(2, {E::unit(1), E::add(1, 1, 2)}));
    REQUIRE(a.point);
    CHECK(*a.point == std::vector<BigInt>{1, 2});
    CHECK(a.ok);
    auto b = theorem12_integer_check(CanonicalSystem(2, {E::add(2, 2, 1), E::unit(1)}));
    CHECK(b.rational_consistent);
    CHECK_FALSE(b.integer_consistent);
    CHECK_FALSE(b.point);
    auto c = theorem12_integer_check(CanonicalSystem(3, {E::unit(1), E::add(2, 3, 1)}));
    REQUIRE(c.point);
    CHECK(c.ok);
    std::vector<BigRational> cp{(*c.point)[0], (*c.point)[1], (*c.point)[2]};
    CHECK(satisfies(CanonicalSystem(3, {E::unit(1), E::add(2, 3, 1)}), std::span<const BigRational>(cp)));

    Rng rng(13);
    for (int t = 0; t < 200; ++t) {
        auto s = random_W(rng, 4, static_cast<int>(rng.between(1, 5)), true);
        auto r = theorem12_integer_check(s);
        if (!r.integer_consistent) continue;
        REQUIRE(r.point);
        std::vector<BigRational> p(r.point->begin(), r.point->end());
        CHECK(satisfies(s, std::span<const BigRational>(p)));
        CHECK(r.ok);
    }
}

TEST_CASE("rows after pinning x1 have squared length at most 5") {
    Rng rng(3);
    for (int t = 0; t < 200; ++t) {
        auto s = random_W(rng, static_cast<std::uint32_t>(rng.between(2, 6)), 6, true);
        auto rows = substituted_rows(s);
        for (std::size_t r = 0; r < rows.rows(); ++r) {
            BigRational sq = 0;
            for (std::size_t c = 0; c + 1 < rows.cols(); ++c) sq += rows(r, c) * rows(r, c);
            CHECK(sq <= 5);
        }
    }
}

TEST_CASE("random rank completions") {
    auto r = probe_conj3(5, 1000, 42);
    CHECK(r.violations.empty());
    CHECK(r.contradictions.empty());
    CHECK(r.max_norm <= 16);
    CHECK(r.to_json() == probe_conj3(5, 1000, 42).to_json());
    CHECK(probe_conj3(5, 200, 42, 3).to_json() == probe_conj3(5, 200, 42, 1).to_json());
    CHECK_THROWS_AS(probe_conj3(5, 0, 1), DomainError);
    for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK(probe_conj3(2, 50, seed).max_norm <= 2);
}

TEST_CASE("pattern rows and minors") {
    for (unsigned n = 2; n <= 6; ++n)
        CHECK(pattern_rows(n).size() == binom(n, 1) + 2 * binom(n, 2) + 3 * binom(n, 3));
    auto two = conj4_exhaustive(2);
    CHECK(two.max_minor == 2);
    CHECK(two.matrices == 4);
    auto three = conj4_exhaustive(3);
    CHECK(three.matrices == 144);
    CHECK(three.max_minor <= 4);
    CHECK(three.violation_count == 0);
    CHECK_THROWS_AS(conj4_exhaustive(6), DomainError);

    Rng rng(8);
    auto rows = pattern_rows(4);
    for (int t = 0; t < 300; ++t) {
        std::vector<std::vector<int>> m;
        for (int r = 0; r < 3; ++r) m.push_back(rows[rng.below(rows.size())]);
        auto minors = column_deleted_minors(m);
        REQUIRE(minors.size() == 4);
        for (std::size_t c = 0; c < 4; ++c) {
            algebra::RatMatrix sq(3, 3);
            for (std::size_t r = 0; r < 3; ++r)
                for (std::size_t k = 0, col = 0; k < 4; ++k)
                    if (k != c) sq(r, col++) = m[r][k];
            algebra::RatMatrix sw = sq;
            for (std::size_t k = 0; k < 3; ++k) std::swap(sw(0, k), sw(1, k));
            BigRational d = algebra::bareiss_det(sq);
            CHECK(algebra::bareiss_det(sw) == -d);
            CHECK(BigRational(abs(d)) == BigRational(static_cast<long>(minors[c])));
        }
    }
    auto rnd = conj4_random(6, 2000, 4);
    CHECK(rnd.violation_count == 0);
    CHECK_FALSE(rnd.exhaustive);
}

TEST_CASE("unique-solution subsets") {
    auto two = verify_obs4(2);
    const std::set<std::vector<BigRational>> allowed = {
        rats({0, 0}), rats({1, 0}), rats({0, 1}), rats({1, 1}), rats({1, 2}), rats({2, 1}),
        {1, BigRational(1, 2)}, {BigRational(1, 2), 1}};
    for (auto& p : two.points) CHECK(allowed.count(p) == 1);
    CHECK(two.ok());
    auto three = verify_obs4(3);
    CHECK(three.ok());
    CHECK(three.max_abs == 4);
    CHECK(three.subsets == binom(21, 3));
}
