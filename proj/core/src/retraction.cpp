#include "canon/retraction.hpp"

#include "canon/bigint.hpp"
#include "canon/canonical.hpp"
#include "canon/error.hpp"
#include "canon/rng.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace canon::retraction {

namespace {

const double kSqrt2 = std::sqrt(2.0);

bool in_box(Point2 p) { return std::abs(p.x) <= 2 && std::abs(p.y) <= 2; }

// b == a*a exactly.
bool is_square_of(double b, double a) {
    if (std::fma(a, a, -b) != 0) return false;
    BigRational qa(a), qb(b);
    return BigRational(qa * qa) == qb;
}

double dist(Point2 a, Point2 b) { return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y)); }

Point2 swap(Point2 p) { return {p.y, p.x}; }

}  // namespace

double f1(double x) { return x < 0 ? 0 : x > 1 ? 1 : x; }

double sigma(double x) { return x < -2 ? -2 : x > 2 ? 2 : x; }

bool in_T(Point2 p) {
    const double x = p.x, y = p.y;
    return in_box(p) || y == 1 || x == 1 || y == 0 || x == 0 || y == 2 * x || x == 2 * y || is_square_of(y, x) ||
           is_square_of(x, y);
}

Point2 on_row1(double x) { return {sigma(x), 1}; }
Point2 on_col1(double y) { return {1, sigma(y)}; }
Point2 on_row0(double x) { return {sigma(x), 0}; }
Point2 on_col0(double y) { return {0, sigma(y)}; }

Point2 on_line(double x) {
    if (x < -1) return {-1, -2};
    if (x <= 1) return {x, 2 * x};
    if (x <= 2) return {2 - x, 4 - 2 * x};
    return {0, 0};
}

Point2 on_line_t(double y) { return swap(on_line(y)); }

Point2 on_parab(double x) {
    if (x < -kSqrt2) return {-kSqrt2, 2};
    if (x <= kSqrt2) return {x, x * x};
    if (x <= 2) return {std::sqrt(4 - x * x), 4 - x * x};
    return {0, 0};
}

Point2 on_parab_t(double y) { return swap(on_parab(y)); }

Point2 f2_on_T(Point2 p) {
    const double x = p.x, y = p.y;
    std::vector<Point2> v;
    if (in_box(p)) v.push_back(p);
    if (y == 1) v.push_back(on_row1(x));
    if (x == 1) v.push_back(on_col1(y));
    if (y == 0) v.push_back(on_row0(x));
    if (x == 0) v.push_back(on_col0(y));
    if (y == 2 * x) v.push_back(on_line(x));
    if (x == 2 * y) v.push_back(on_line_t(y));
    if (is_square_of(y, x)) v.push_back(on_parab(x));
    if (is_square_of(x, y)) v.push_back(on_parab_t(y));
    if (v.empty()) throw DomainError("point is not in T");
    for (auto& w : v)
        if (dist(w, v[0]) > 1e-12) throw Error("pieces of T disagree at a shared point");
    return v[0];
}

double rho(Point2 p) {
    if (in_T(p)) throw DomainError("rho is defined off T only");
    const double x = p.x, y = p.y;
    return 1 / (std::abs(x - sigma(x)) + std::abs(y - sigma(y))) + 1 / std::abs(y - 1) + 1 / std::abs(x - 1) +
           1 / std::abs(y) + 1 / std::abs(x) + 1 / std::abs(y - 2 * x) + 1 / std::abs(x - 2 * y) +
           1 / std::abs(y - x * x) + 1 / std::abs(x - y * y);
}

Point2 g(Point2 p) {
    const double r = rho(p);
    const double x = p.x, y = p.y;
    struct Term {
        Point2 v;
        double w;
    };
    const Term terms[] = {
        {{sigma(x), sigma(y)}, 1 / (std::abs(x - sigma(x)) + std::abs(y - sigma(y)))},
        {on_row1(x), 1 / std::abs(y - 1)},
        {on_col1(y), 1 / std::abs(x - 1)},
        {on_row0(x), 1 / std::abs(y)},
        {on_col0(y), 1 / std::abs(x)},
        {on_line(x), 1 / std::abs(y - 2 * x)},
        {on_line_t(y), 1 / std::abs(x - 2 * y)},
        {on_parab(x), 1 / std::abs(y - x * x)},
        {on_parab_t(y), 1 / std::abs(x - y * y)},
    };
    Point2 out;
    for (auto& t : terms) {
        out.x += t.v.x * t.w;
        out.y += t.v.y * t.w;
    }
    return {out.x / r, out.y / r};
}

Point2 f2(Point2 p) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw DomainError("non-finite point");
    return in_T(p) ? f2_on_T(p) : g(p);
}

SelfCheck branch_agreement_self_check(double tol) {
    SelfCheck sc;
    auto note = [&](Point2 a, Point2 b) {
        ++sc.points;
        sc.max_disagreement = std::max(sc.max_disagreement, dist(a, b));
    };
    // Each piece is continuous across its own breakpoints.
    using Piece = Point2 (*)(double);
    const std::pair<Piece, std::vector<double>> pieces[] = {
        {on_row1, {-2, 2}},  {on_col1, {-2, 2}},          {on_row0, {-2, 2}},          {on_col0, {-2, 2}},
        {on_line, {-1, 1, 2}}, {on_line_t, {-1, 1, 2}}, {on_parab, {-kSqrt2, kSqrt2, 2}}, {on_parab_t, {-kSqrt2, kSqrt2, 2}},
    };
    for (auto& [f, breaks] : pieces)
        for (double b : breaks)
            for (double side : {-1.0, 1.0}) {
                double prev = INFINITY, gap = 0;
                for (double d : {1e-4, 1e-8, 1e-12}) {
                    gap = dist(f(b + side * d), f(b));
                    if (gap > prev + 1e-15) ++sc.non_shrinking;
                    prev = gap;
                }
                ++sc.points;
                sc.max_breakpoint_gap = std::max(sc.max_breakpoint_gap, gap);
            }
    // Pieces meeting outside the open box agree, and meet the identity on its boundary.
    note(on_line(2), on_parab(2));
    note(on_line_t(2), on_parab_t(2));
    for (double b : {-2.0, 2.0}) {
        note(on_row1(b), {b, 1});
        note(on_col1(b), {1, b});
        note(on_row0(b), {b, 0});
        note(on_col0(b), {0, b});
    }
    note(on_line(-1), {-1, -2});
    note(on_line(1), {1, 2});
    note(on_line_t(-1), {-2, -1});
    note(on_line_t(1), {2, 1});
    note(on_parab(-kSqrt2), {-kSqrt2, 2});
    note(on_parab(kSqrt2), {kSqrt2, 2});
    note(on_parab_t(-kSqrt2), {2, -kSqrt2});
    note(on_parab_t(kSqrt2), {2, kSqrt2});
    // Shared points decided through f2_on_T itself.
    for (Point2 p : {Point2{2, 4}, Point2{4, 2}, Point2{1, 1}, Point2{0, 0}, Point2{2, 1}, Point2{1, 2}}) {
        try {
            f2_on_T(p);
            ++sc.points;
        } catch (const Error&) {
            sc.max_disagreement = std::max(sc.max_disagreement, 1.0);
        }
    }
    sc.ok = sc.max_disagreement <= tol && sc.non_shrinking == 0 && sc.max_breakpoint_gap < 1e-5;
    return sc;
}

bool CheckReport::ok() const {
    return self.ok && range_ok && identity_failures == 0 && max_relation_error <= opt.tol && unit_failures == 0 &&
           worst_final_gap < opt.continuity_gap && non_monotone == 0 && lipschitz_ok;
}

nlohmann::json CheckReport::to_json() const {
    return {{"samples", opt.samples},
            {"seed", opt.seed},
            {"tol", opt.tol},
            {"self_check",
             {{"points", self.points},
              {"max_disagreement", self.max_disagreement},
              {"max_breakpoint_gap", self.max_breakpoint_gap},
              {"non_shrinking", self.non_shrinking},
              {"ok", self.ok}}},
            {"range", {{"max_norm", max_norm}, {"ok", range_ok}}},
            {"identity_failures", identity_failures},
            {"relations", {{"checks", relation_checks}, {"max_error", max_relation_error}}},
            {"unit_failures", unit_failures},
            {"continuity",
             {{"points", opt.continuity_points}, {"worst_final_gap", worst_final_gap}, {"non_monotone", non_monotone}}},
            {"lipschitz_ok", lipschitz_ok},
            {"ok", ok()}};
}

namespace {

Point2 random_point(Rng& rng) {
    auto u = [&](double lo, double hi) { return lo + (hi - lo) * rng.unit(); };
    switch (rng.below(4)) {
        case 0: return {u(-10, 10), u(-10, 10)};
        case 1: return {u(-1000, 1000), u(-1000, 1000)};
        case 2: return {u(-3, 3), u(-3, 3)};
        default: {
            // Near a piece of T.
            double t = u(-6, 6), e = std::pow(10.0, -u(1, 10)) * (rng.below(2) ? 1 : -1);
            switch (rng.below(8)) {
                case 0: return {t, 1 + e};
                case 1: return {1 + e, t};
                case 2: return {t, e};
                case 3: return {e, t};
                case 4: return {t, 2 * t + e};
                case 5: return {2 * t + e, t};
                case 6: return {t, t * t + e};
                default: return {t * t + e, t};
            }
        }
    }
}

// A point of T together with its parameter piece.
Point2 random_T_point(Rng& rng) {
    auto u = [&](double lo, double hi) { return lo + (hi - lo) * rng.unit(); };
    double t = std::ldexp(std::round(u(-6, 6) * 1024), -10);  // dyadic, so squares are exact
    switch (rng.below(9)) {
        case 0: return {t, 1};
        case 1: return {1, t};
        case 2: return {t, 0};
        case 3: return {0, t};
        case 4: return {t, 2 * t};
        case 5: return {2 * t, t};
        case 6: return {t, t * t};
        case 7: return {t * t, t};
        default: {
            double s = u(-2, 2);
            switch (rng.below(4)) {
                case 0: return {2, s};
                case 1: return {-2, s};
                case 2: return {s, 2};
                default: return {s, -2};
            }
        }
    }
}

}  // namespace

CheckReport check(const CheckOptions& opt) {
    CheckReport rep;
    rep.opt = opt;
    rep.self = branch_agreement_self_check();
    Rng rng(opt.seed);

    rep.lipschitz_ok = true;
    for (std::size_t i = 0; i < opt.samples; ++i) {
        Point2 p = random_point(rng);
        Point2 v = f2(p);
        rep.max_norm = std::max({rep.max_norm, std::abs(v.x), std::abs(v.y)});
        double a = p.x, b = p.y;
        if (std::abs(f1(a) - f1(b)) > std::abs(a - b) + 1e-15 || std::abs(sigma(a) - sigma(b)) > std::abs(a - b) + 1e-15)
            rep.lipschitz_ok = false;
    }
    rep.range_ok = rep.max_norm <= 2 + 1e-12;

    const std::size_t side = std::max<std::size_t>(1, opt.samples / 10);
    for (std::size_t i = 0; i < side; ++i) {
        Point2 p{-2 + 4 * rng.unit(), -2 + 4 * rng.unit()};
        Point2 v = f2(p);
        if (v.x != p.x || v.y != p.y) ++rep.identity_failures;
        double t = -1000 + 2000 * rng.unit();
        if (f2({t, 1}).y != 1 || f2({1, t}).x != 1) ++rep.unit_failures;
    }

    // Relations of E_2 holding at p must hold at f2(p).
    const auto eqs = universe_equations(2, Universe::E);
    for (std::size_t i = 0; i < side; ++i) {
        Point2 p = random_T_point(rng);
        Point2 v = f2(p);
        std::vector<BigRational> at{BigRational(p.x), BigRational(p.y)};
        const double img[] = {v.x, v.y};
        for (auto& e : eqs) {
            if (!evaluate(e, std::span<const BigRational>(at))) continue;
            ++rep.relation_checks;
            double err = 0;
            switch (e.kind) {
                case EqKind::Unit: err = std::abs(img[e.i - 1] - 1); break;
                case EqKind::Add: err = std::abs(img[e.i - 1] + img[e.j - 1] - img[e.k - 1]); break;
                case EqKind::Mul: err = std::abs(img[e.i - 1] * img[e.j - 1] - img[e.k - 1]); break;
            }
            rep.max_relation_error = std::max(rep.max_relation_error, err);
        }
    }

    for (std::size_t i = 0; i < opt.continuity_points; ++i) {
        Point2 p = random_T_point(rng);
        Point2 base = f2_on_T(p);
        double angle = 2 * M_PI * rng.unit();
        double prev = INFINITY, gap = 0;
        for (double eps : {1e-4, 1e-6, 1e-8}) {
            Point2 q{p.x + eps * std::cos(angle), p.y + eps * std::sin(angle)};
            gap = dist(f2(q), base);
            if (gap > prev + 1e-12) ++rep.non_monotone;
            prev = gap;
        }
        rep.worst_final_gap = std::max(rep.worst_final_gap, gap);
    }
    return rep;
}

std::string sample_csv(std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    std::ostringstream out;
    out.precision(17);
    out << "x,y,fx,fy\n";
    for (std::size_t i = 0; i < count; ++i) {
        Point2 p = random_point(rng);
        Point2 v = f2(p);
        out << p.x << ',' << p.y << ',' << v.x << ',' << v.y << '\n';
    }
    return out.str();
}

}  // namespace canon::retraction
