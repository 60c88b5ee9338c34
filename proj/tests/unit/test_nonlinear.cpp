#include "canon/bounds.hpp"
#include "canon/nonlinear.hpp"
#include "canon/rng.hpp"

#include <doctest.h>

using namespace canon;
using namespace canon::nonlinear;
using E = CanonicalEquation;

namespace {

std::vector<BigRational> rats(std::initializer_list<const char*> v) {
    std::vector<BigRational> out;
    for (auto s : v) out.emplace_back(s);
    return out;
}

void check_catalog_shape(const Catalog& cat) {
    for (std::size_t a = 0; a < cat.entries.size(); ++a) {
        for (std::size_t b = 0; b < cat.entries.size(); ++b)
            if (a != b) CHECK_FALSE(cat.entries[a].system.subset_of(cat.entries[b].system));
        for (auto& p : cat.entries[a].solutions)
            if (p.exact()) {
                auto v = p.exact_values();
                CHECK(satisfies(cat.entries[a].system, std::span<const QuadExt>(v)));
            }
    }
    for (auto& ind : cat.induced) {
        bool covered = false;
        for (auto& e : cat.entries) covered = covered || ind.system.subset_of(e.system);
        CHECK(covered);
    }
}

}  // namespace

TEST_CASE("reduced equation table") {
    auto& t = reduced_table();
    REQUIRE(t.size() == 16);
    CHECK(t[0].text == "x=2");
    CHECK(t[12].text == "x*y=1");
    CHECK(t[15].text == "y+1=x");
}

TEST_CASE("each reduced equation is its lifted equation with x1 = 1") {
    Rng rng(1);
    for (auto& r : reduced_table()) {
        auto lifted = algebra::system_polys(CanonicalSystem(3, {r.lifted}))[0];
        std::optional<BigRational> ratio;
        for (int k = 0; k < 12; ++k) {
            std::vector<BigRational> xy{rng.rational(20, 7), rng.rational(20, 7)};
            std::vector<BigRational> full{1, xy[0], xy[1]};
            BigRational a = r.poly.eval(std::span<const BigRational>(xy));
            BigRational b = lifted.eval(std::span<const BigRational>(full));
            CHECK((a == 0) == (b == 0));
            if (a != 0) {
                BigRational q = b / a;
                if (ratio) CHECK(q == *ratio);
                ratio = q;
            }
        }
    }
}

TEST_CASE("pair scan") {
    auto rep = conj1_n3_pair_scan(Domain::C);
    CHECK(rep.pairs.size() == 120);
    CHECK(rep.violations == 0);
    CHECK(rep.positive_dimensional == 0);
    CHECK(rep.ok());
    auto& t = reduced_table();
    auto index = [&](const char* s) {
        for (std::size_t k = 0; k < t.size(); ++k)
            if (t[k].text == s) return k + 1;
        return std::size_t{0};
    };
    for (auto& p : rep.pairs) {
        if (p.i == index("x*x=y") && p.j == index("x+y=1")) {
            CHECK(p.points == 2);
            CHECK(p.max_modulus == doctest::Approx((3 + std::sqrt(5.0)) / 2));
        }
        if (p.i == index("x=2") && p.j == index("x=1/2")) CHECK(p.kind == algebra::SolutionKind::Inconsistent);
    }
    CHECK(conj1_n3_pair_scan(Domain::R).ok());
    auto triples = conj1_n3_pair_scan(Domain::C, true);
    CHECK(triples.subsets_checked == 696);
    CHECK(triples.ok());
}

TEST_CASE("small catalogs") {
    auto one = catalog_maximal(1, Domain::C);
    CHECK(one.value_sets() == std::set<ValueSet>{{QuadExt(0)}, {QuadExt(1)}});
    auto two = catalog_maximal(2, Domain::C);
    std::set<std::vector<BigRational>> pts;
    for (auto& e : two.entries)
        for (auto& p : e.solutions) pts.insert(p.rational_values());
    std::set<std::vector<BigRational>> expected;
    for (auto v : {rats({"0", "0"}), rats({"0", "1"}), rats({"1", "0"}), rats({"1/2", "1"}), rats({"1", "1/2"}),
                   rats({"1", "1"}), rats({"1", "2"}), rats({"2", "1"})})
        expected.insert(v);
    CHECK(pts == expected);
    check_catalog_shape(two);
    CHECK(catalog_maximal(2, Domain::C, {}, 3).to_json() == two.to_json());
    for (unsigned n : {1u, 2u}) {
        auto rep = verify_conj1_small(catalog_maximal(n, Domain::R));
        CHECK(rep.ok());
        CHECK(rep.bound == bound_conj1(n));
    }
}

TEST_CASE("catalog over the reals for three variables") {
    auto cat = catalog_maximal(3, Domain::R);
    CHECK(cat.complete());
    CHECK(family_W().size() == 23);
    CHECK(family_W_complex_extra().size() == 2);
    CHECK(cat.value_sets() == family_W());
    CHECK(compare_family(cat, family_W()).ok());
    check_catalog_shape(cat);
    auto rep = verify_conj1_small(cat);
    CHECK(rep.ok());
    CHECK(rep.max_modulus <= 4);
}

TEST_CASE("the two-variable point list covers every consistent subset") {
    auto full = rats({"0", "0", "0", "1", "1", "0", "1/2", "1", "1", "1/2", "1", "1", "1", "2", "2", "1"});
    std::vector<std::vector<BigRational>> list;
    for (std::size_t k = 0; k < full.size(); k += 2) list.push_back({full[k], full[k + 1]});
    auto ok = verify_e2_list(list);
    CHECK(ok.subsets == 16384);
    CHECK(ok.ok());
    list.pop_back();  // (2, 1) is needed
    CHECK_FALSE(verify_e2_list(list).ok());
}

TEST_CASE("doubling witness and squaring chain") {
    CHECK(doubling_witness(4) == std::vector<BigRational>{1, 2, 4, 16});
    for (unsigned n = 2; n <= 5; ++n) CHECK(doubling_witness_check(n));
    CHECK(chain_21d(3) == CanonicalSystem(3, {E::add(1, 1, 2), E::mul(1, 1, 2), E::mul(2, 2, 3)}));
    for (unsigned n = 3; n <= 5; ++n) CHECK(chain_21d_check(n));
}

TEST_CASE("ideal growth probe") {
    auto a = probe_conj21(4, 60, 9, Conj21Variant::WithUnits);
    CHECK(a.ok());
    CHECK(a.max_abs_value <= 16);
    CHECK(a.to_json() == probe_conj21(4, 60, 9, Conj21Variant::WithUnits, 2).to_json());
    auto b = probe_conj21(4, 60, 9, Conj21Variant::WithoutUnits);
    CHECK(b.ok());
    CHECK(b.max_abs_value <= 256);
    CHECK(b.zero_dimensional + b.positive_dimensional + b.budget_exceeded == 60);
}

TEST_CASE("greedy large-solution probe") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto r = probe_conj1(4, seed, Domain::R);
        CHECK_FALSE(r.violation());
        CHECK(r.to_json() == probe_conj1(4, seed, Domain::R).to_json());
        if (r.found) {
            CHECK(r.system.contains(E::unit(1)));
            CHECK(r.orders_tried >= 1);
        }
    }
    auto c = probe_conj1(4, 3, Domain::C);
    CHECK_FALSE(c.violation());
    for (auto& e : probe_pool(4)) CHECK(e.max_index() <= 4);
}
