#include "canon/error.hpp"
#include "canon/retraction.hpp"
#include "canon/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace canon;
using namespace canon::retraction;

namespace {

double dist(Point2 a, Point2 b) { return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y)); }

bool in_box(Point2 p, double slack = 1e-12) {
    return std::abs(p.x) <= 2 + slack && std::abs(p.y) <= 2 + slack;
}

// Dyadic values with few bits so that x*x and 2*x are exact doubles.
double dyadic(Rng& rng, double lo, double hi) {
    double x = lo + (hi - lo) * rng.unit();
    return std::ldexp(std::round(std::ldexp(x, 12)), -12);
}

}  // namespace

TEST_CASE("clamps") {
    CHECK(f1(-5) == 0);
    CHECK(f1(0.5) == 0.5);
    CHECK(f1(7) == 1);
    CHECK(sigma(-3) == -2);
    CHECK(sigma(0) == 0);
    CHECK(sigma(2.5) == 2);
    Rng rng(1);
    for (int k = 0; k < 10000; ++k) {
        double a = (rng.unit() - 0.5) * 20, b = (rng.unit() - 0.5) * 20;
        CHECK(std::abs(f1(a) - f1(b)) <= std::abs(a - b));
        CHECK(std::abs(sigma(a) - sigma(b)) <= std::abs(a - b));
        CHECK(f1(a) >= 0);
        CHECK(f1(a) <= 1);
        CHECK(std::abs(sigma(a)) <= 2);
    }
}

TEST_CASE("membership") {
    CHECK(in_T({0.5, 0.25}));
    CHECK(in_T({3, 6}));
    CHECK(in_T({3, 9}));
    CHECK(in_T({9, 3}));
    CHECK(in_T({100, 1}));
    CHECK(in_T({-7, 0}));
    CHECK(in_T({2, -2}));
    CHECK_FALSE(in_T({100, 100}));
    CHECK_FALSE(in_T({10, 0.5}));
    CHECK_FALSE(in_T({3, std::nextafter(9.0, 10.0)}));
    CHECK_FALSE(in_T({std::nextafter(2.0, 3.0), 3}));
    // 0.1 squared in binary is not the double nearest 0.01
    CHECK(in_T({0.1 * 30, 0.1 * 0.1 * 900}) == (0.1 * 0.1 * 900 == (0.1 * 30) * (0.1 * 30)));
}

TEST_CASE("values on T") {
    auto p = f2_on_T({1.5, 2.25});
    CHECK(p.x == doctest::Approx(std::sqrt(1.75)).epsilon(1e-14));
    CHECK(p.y == doctest::Approx(1.75).epsilon(1e-14));
    auto id = f2_on_T({0.5, 0.25});
    CHECK(id.x == 0.5);
    CHECK(id.y == 0.25);
    auto z = f2_on_T({3, 6});
    CHECK(z.x == 0);
    CHECK(z.y == 0);
    // (2, 4) sits on y = 2x and y = x^2; both pieces give the same value
    auto c = f2_on_T({2, 4});
    CHECK(dist(c, on_line(2)) <= 1e-12);
    CHECK(dist(c, on_parab(2)) <= 1e-12);
    CHECK_THROWS_AS(f2_on_T({100, 100}), DomainError);
}

TEST_CASE("the blend is defined off T only") {
    CHECK_THROWS_AS(rho({0.5, 0.25}), DomainError);
    CHECK_THROWS_AS(g({3, 6}), DomainError);
    CHECK(rho({100, 100}) > 0);
    CHECK(std::isfinite(rho({100, 100})));
    CHECK(in_box(f2({100, 100})));
    CHECK(in_box(f2({10, 0.5})));
    auto target = f2_on_T({1.5, 2.25});
    auto near = g({1.5, 2.25 + 1e-8});
    CHECK(dist(near, target) < 1e-6);
}

TEST_CASE("identity on the box and range everywhere") {
    Rng rng(5);
    for (int k = 0; k < 20000; ++k) {
        Point2 b{(rng.unit() - 0.5) * 4, (rng.unit() - 0.5) * 4};
        auto v = f2(b);
        CHECK(v.x == b.x);
        CHECK(v.y == b.y);
        double scale = std::pow(10.0, static_cast<double>(rng.below(5)));
        Point2 q{(rng.unit() - 0.5) * 2 * scale, (rng.unit() - 0.5) * 2 * scale};
        CHECK(in_box(f2(q)));
    }
}

TEST_CASE("relations on the curves are preserved") {
    Rng rng(8);
    for (int k = 0; k < 5000; ++k) {
        double x = dyadic(rng, -40, 40);
        auto p = f2({x, x * x});
        CHECK(std::abs(p.y - p.x * p.x) <= 1e-9);
        auto pt = f2({x * x, x});
        CHECK(std::abs(pt.x - pt.y * pt.y) <= 1e-9);
        auto l = f2({x, 2 * x});
        CHECK(std::abs(l.y - 2 * l.x) <= 1e-9);
        auto lt = f2({2 * x, x});
        CHECK(std::abs(lt.x - 2 * lt.y) <= 1e-9);
        CHECK(f2({x, 1}).y == 1);
        CHECK(f2({1, x}).x == 1);
        CHECK(f2({x, 0}).y == 0);
        CHECK(f2({0, x}).x == 0);
    }
}

TEST_CASE("limits from off T") {
    Rng rng(21);
    for (int k = 0; k < 500; ++k) {
        double x = dyadic(rng, -6, 6);
        Point2 on{x, x * x};
        if (!in_T(on)) continue;
        auto target = f2_on_T(on);
        double prev = INFINITY;
        bool measured = false;
        for (double eps : {1e-4, 1e-6, 1e-8}) {
            Point2 off{on.x + eps * 0.6, on.y - eps * 0.8};
            if (in_T(off)) continue;
            double gap = dist(g(off), target);
            CHECK(gap <= prev + 1e-12);
            prev = gap;
            measured = true;
        }
        if (measured) CHECK(prev < 1e-5);
        else CHECK(std::abs(x) <= std::sqrt(2.0));
    }
}

TEST_CASE("self-check and sampled report") {
    auto s = branch_agreement_self_check();
    CHECK(s.ok);
    CHECK(s.points > 0);
    CHECK(s.max_disagreement <= 1e-12);
    CHECK(s.non_shrinking == 0);

    CheckOptions opt;
    opt.samples = 20000;
    opt.continuity_points = 500;
    auto r = check(opt);
    CHECK(r.ok());
    CHECK(r.max_norm <= 2 + 1e-12);
    CHECK(r.identity_failures == 0);
    CHECK(r.unit_failures == 0);
    CHECK(r.max_relation_error <= 1e-9);
    CHECK(r.to_json() == check(opt).to_json());

    std::istringstream csv(sample_csv(50, 2));
    std::string line;
    std::size_t rows = 0;
    while (std::getline(csv, line))
        if (!line.empty() && line != "x,y,fx,fy") ++rows;
    CHECK(rows == 50);
}
