#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace canon::retraction {

struct Point2 {
    double x = 0, y = 0;
};

double f1(double x);
double sigma(double x);

// Membership in T = [-2,2]^2 ∪ {y=1, x=1, y=0, x=0, y=2x, x=2y, y=x^2, x=y^2},
// decided exactly on the binary values of the inputs.
bool in_T(Point2 p);

// Values on the pieces of T, by parameter.
Point2 on_row1(double x);      // f2(x, 1)
Point2 on_col1(double y);      // f2(1, y)
Point2 on_row0(double x);      // f2(x, 0)
Point2 on_col0(double y);      // f2(0, y)
Point2 on_line(double x);      // f2(x, 2x)
Point2 on_line_t(double y);    // f2(2y, y)
Point2 on_parab(double x);     // f2(x, x^2)
Point2 on_parab_t(double y);   // f2(y^2, y)

// Throws DomainError off T, Error when two pieces through p disagree.
Point2 f2_on_T(Point2 p);
// Off T only.
double rho(Point2 p);
Point2 g(Point2 p);
Point2 f2(Point2 p);

struct SelfCheck {
    std::size_t points = 0;
    double max_disagreement = 0;
    // Breakpoints are approached from both sides with steps 1e-4, 1e-8, 1e-12;
    // the gap must shrink and end below 1e-5 (near x = 2 on the parabola it
    // only shrinks like the square root of the step).
    double max_breakpoint_gap = 0;
    std::size_t non_shrinking = 0;
    bool ok = false;
};
// Evaluates every piece at the junctions where pieces meet.
SelfCheck branch_agreement_self_check(double tol = 1e-12);

struct CheckOptions {
    std::size_t samples = 1'000'000;
    std::uint64_t seed = 3;
    double tol = 1e-9;
    std::size_t continuity_points = 10'000;
    double continuity_gap = 1e-5;
};

struct CheckReport {
    CheckOptions opt;
    SelfCheck self;
    double max_norm = 0;
    bool range_ok = false;
    std::size_t identity_failures = 0;
    double max_relation_error = 0;
    std::size_t relation_checks = 0;
    std::size_t unit_failures = 0;
    double worst_final_gap = 0;
    std::size_t non_monotone = 0;
    bool lipschitz_ok = false;
    bool ok() const;
    nlohmann::json to_json() const;
};

CheckReport check(const CheckOptions& opt = {});

// CSV rows "x,y,fx,fy" for `count` random points.
std::string sample_csv(std::size_t count, std::uint64_t seed);

}  // namespace canon::retraction
