#include "canon/error.hpp"
#include "canon/neighbourhoods.hpp"
#include "canon/rng.hpp"

#include <doctest.h>

using namespace canon;
using namespace canon::nbhd;
using E = CanonicalEquation;

namespace {

BigRational q(const char* s) { return BigRational(s); }

CanonicalSystem brute_induced(const std::vector<BigRational>& v) {
    std::size_t m = v.size();
    CanonicalSystem s(m);
    for (std::uint32_t i = 1; i <= m; ++i) {
        if (v[i - 1] == 1) s.insert(E::unit(i));
        for (std::uint32_t j = 1; j <= m; ++j)
            for (std::uint32_t k = 1; k <= m; ++k) {
                if (BigRational(v[i - 1] + v[j - 1]) == v[k - 1]) s.insert(E::add(i, j, k));
                if (BigRational(v[i - 1] * v[j - 1]) == v[k - 1]) s.insert(E::mul(i, j, k));
            }
    }
    return s;
}

bool brute_arithmetic(const std::vector<BigRational>& order, const std::vector<BigRational>& image) {
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (order[i] == 1 && image[i] != 1) return false;
        for (std::size_t j = 0; j < order.size(); ++j)
            for (std::size_t k = 0; k < order.size(); ++k) {
                if (BigRational(order[i] + order[j]) == order[k] && BigRational(image[i] + image[j]) != image[k])
                    return false;
                if (BigRational(order[i] * order[j]) == order[k] && BigRational(image[i] * image[j]) != image[k])
                    return false;
            }
    }
    return true;
}

}  // namespace

TEST_CASE("variable order and induced systems") {
    Neighbourhood a{{1, 2}, 2};
    CHECK(variable_order(a) == std::vector<BigRational>{2, 1});
    auto s = induced_system(a);
    CHECK(s == CanonicalSystem(2, {E::unit(2), E::add(2, 2, 1), E::mul(1, 2, 1), E::mul(2, 2, 2)}));

    CHECK(induced_system({{0}, 0}) == CanonicalSystem(1, {E::add(1, 1, 1), E::mul(1, 1, 1)}));
    auto half = induced_system({{q("1/2"), 1}, q("1/2")});
    CHECK(half.contains(E::add(1, 1, 2)));
    CHECK(half.contains(E::unit(2)));
    CHECK(induced_system({{5}, 5}).empty());
}

TEST_CASE("induced systems agree with a direct enumeration") {
    Rng rng(12);
    for (int t = 0; t < 300; ++t) {
        std::set<BigRational> pool;
        std::size_t m = 1 + rng.below(4);
        while (pool.size() < m) {
            switch (rng.below(4)) {
                case 0: pool.insert(BigRational(static_cast<long>(rng.between(-2, 4)))); break;
                case 1: pool.insert(BigRational(1, 2)); break;
                default: pool.insert(rng.rational(6, 3)); break;
            }
        }
        std::vector<BigRational> el(pool.begin(), pool.end());
        Neighbourhood a{el, el[rng.below(el.size())]};
        auto order = variable_order(a);
        CHECK(order.front() == a.target);
        CHECK(std::is_sorted(order.begin() + 1, order.end()));
        CHECK(induced_system(a) == brute_induced(order));
        CHECK(is_arithmetic_map(order, order));
        std::vector<BigRational> image(order.size());
        for (auto& x : image) x = rng.rational(4, 2);
        CHECK(is_arithmetic_map(order, image) == brute_arithmetic(order, image));
    }
}

TEST_CASE("fixedness") {
    auto moved = is_fixed({{5}, 5});
    CHECK(moved.verdict == Verdict::Moved);
    REQUIRE(moved.image);
    CHECK((*moved.image)[0] != 5);
    CHECK(is_arithmetic_map(moved.order, *moved.image));

    CHECK(is_fixed({{0, 1}, 0}).verdict == Verdict::Fixed);
    CHECK(is_fixed({{1, 2}, 2}).verdict == Verdict::Fixed);
    CHECK(is_fixed({{q("1/2"), 1}, q("1/2")}).verdict == Verdict::Fixed);
    CHECK(is_fixed({{2, 3}, 3}).verdict == Verdict::Moved);
    CHECK(std::string(verdict_name(Verdict::Unknown)) == "unknown");

    Rng rng(3);
    for (int t = 0; t < 40; ++t) {
        std::set<BigRational> pool;
        std::size_t m = 1 + rng.below(3);
        while (pool.size() < m) pool.insert(rng.rational(5, 3));
        std::vector<BigRational> el(pool.begin(), pool.end());
        auto c = is_fixed({el, el[0]});
        CHECK(c.verdict != Verdict::Unknown);
        if (c.verdict == Verdict::Moved) {
            REQUIRE(c.image);
            CHECK((*c.image)[0] != c.order[0]);
            CHECK(brute_arithmetic(c.order, *c.image));
        }
    }
}

TEST_CASE("small fixed-value sets and omega") {
    CHECK(compute_Ktilde(1).values == std::set<BigRational>{0, 1});
    auto two = compute_Ktilde(2);
    CHECK(two.values == std::set<BigRational>{0, q("1/2"), 1, 2});
    CHECK(two.unknown == 0);
    CHECK(compute_Ktilde(2, {}, 2).to_json() == two.to_json());

    CHECK(omega(2, 3) == 2u);
    CHECK(omega(0, 3) == 1u);
    CHECK(omega(q("1/4"), 3) == 3u);
    CHECK_FALSE(omega(5, 3).has_value());
    CHECK_THROWS_AS(omega(2, 4), DomainError);
}

TEST_CASE("size bound") {
    auto r3 = theorem10_bound_check(3);
    CHECK(r3.bound == BigInt(4096 * 4096 * 1 + 2));
    REQUIRE(r3.card);
    CHECK(r3.ok);
    CHECK(*r3.card >= 4);

    auto r4 = theorem10_bound_check(4);
    BigInt expect;
    mpz_ui_pow_ui(expect.get_mpz_t(), 5, 20);
    CHECK(r4.bound == BigInt(expect + 2));
    CHECK_FALSE(r4.card.has_value());
    CHECK_THROWS_AS(theorem10_bound_check(2), DomainError);
}
