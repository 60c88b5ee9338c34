#include "canon/error.hpp"
#include "canon/gallery.hpp"
#include "canon/rng.hpp"

#include <doctest.h>

using namespace canon;
using namespace canon::gallery;

namespace {

bool is_square(const BigInt& n) {
    if (n < 0) return false;
    BigInt r = sqrt(n);
    return BigInt(r * r) == n;
}

const Check* find(const GalleryReport& r, const std::string& prefix) {
    for (auto& c : r.checks)
        if (c.name.rfind(prefix, 0) == 0) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("divisibility witness") {
    for (long x : {1L, 5L, -6L, 7L, 35L, -1001L}) {
        auto [a, b] = lemma1_witness(BigInt(x));
        CHECK(BigInt(a * x) == BigInt((2 * b - 1) * (3 * b - 1)));
    }
    Rng rng(4);
    for (int k = 0; k < 200; ++k) {
        BigInt x = BigInt(static_cast<long>(rng.between(1, 1000000))) * BigInt(static_cast<long>(rng.between(1, 1000000)));
        if (rng.below(2)) x = -x;
        auto [a, b] = lemma1_witness(x);
        CHECK(BigInt(a * x) == BigInt((2 * b - 1) * (3 * b - 1)));
    }
    CHECK_THROWS(lemma1_witness(BigInt(0)));
    CHECK(lemma1_check(200).ok());
}

TEST_CASE("square witness matches a brute-force search") {
    auto brute = [](long x) {
        BigInt D = BigInt(x) * x * x * (2 + x);
        for (long y = 1;; ++y)
            if (is_square(BigInt(1 + D * y * y))) return y;
    };
    CHECK(lemma2_witness(2).y == 3);
    CHECK(lemma2_witness(3).y == 21);
    auto w4 = lemma2_witness(4);
    CHECK(w4.D == 384);
    CHECK(w4.y == 245);
    for (long x = 2; x <= 4; ++x) {
        auto w = lemma2_witness(x);
        CHECK(w.y == brute(x));
        CHECK(BigInt(w.z * w.z) == BigInt(1 + w.D * w.y * w.y));
    }
    CHECK(lemma2_witness(2).lemma3_bound == 3);
    CHECK(lemma2_check().ok());
}

TEST_CASE("prime-based items") {
    auto good = theorem2_verify(BigInt(273));
    CHECK(good.ok());
    auto bad = theorem2_verify(BigInt(274));
    CHECK_FALSE(bad.ok());

    CHECK(theorem3_system().size() == 8);
    CHECK(theorem3_verify(BigInt(5), true).ok());
    CHECK_THROWS_AS(theorem3_verify(BigInt(9), true), DomainError);

    CHECK(theorem4_verify().ok());
    CHECK(theorem5_verify(BigInt(13)).ok());
}

TEST_CASE("unit scan") {
    auto r = observation2_scan(30, 10);
    CHECK(r.units > 0);
    CHECK(r.violations == 0);
}

TEST_CASE("large-solution constructions") {
    auto z = z21_verify();
    CHECK(z.ok());
    CHECK(z21_scaled_build().arity() == 18);
    CHECK(sevenvar_system().size() == 6);
    CHECK(sevenvar_system().arity() == 7);
    CHECK(sevenvar_field_check(256, 20).ok());
}

TEST_CASE("run_item dispatch") {
    for (auto& name : item_names()) {
        auto r = run_item(name);
        CHECK_MESSAGE(r.ok(), name);
        CHECK(r.item == name);
        auto j = r.to_json();
        CHECK(j["ok"] == true);
        CHECK(j["checks"].size() == r.checks.size());
    }
    CHECK_THROWS_AS(run_item("nope"), ParseError);
    CHECK_FALSE(run_item("thm2", {{"k", "274"}}).ok());
    auto th3 = run_item("thm3", {{"p", "5"}, {"desk", "true"}});
    auto* c = find(th3, "tuple solves");
    REQUIRE(c != nullptr);
    CHECK(c->status == CheckStatus::Pass);
}
