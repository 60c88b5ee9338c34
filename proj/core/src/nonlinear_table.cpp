#include "canon/nonlinear.hpp"

#include "canon/error.hpp"
#include "canon/parallel.hpp"

#include <algorithm>
#include <complex>

namespace canon::nonlinear {

using algebra::MonomialOrder;
using algebra::SolutionKind;

Domain parse_domain(std::string_view s) {
    if (s == "R" || s == "r") return Domain::R;
    if (s == "C" || s == "c") return Domain::C;
    throw ParseError("domain must be R or C, got '" + std::string(s) + "'");
}

const char* domain_name(Domain d) { return d == Domain::R ? "R" : "C"; }

namespace {

ReducedEquation make(std::string text, MultiPoly lhs, MultiPoly rhs, CanonicalEquation lifted) {
    return ReducedEquation{std::move(text), lhs - rhs, lifted};
}

std::vector<ReducedEquation> build_table() {
    const auto x = MultiPoly::variable(2, 0);
    const auto y = MultiPoly::variable(2, 1);
    auto c = [](long v, long d = 1) { return MultiPoly::constant(2, BigRational(v, d)); };
    using E = CanonicalEquation;
    std::vector<ReducedEquation> t;
    t.push_back(make("x=2", x, c(2), E::add(1, 1, 2)));
    t.push_back(make("y=2", y, c(2), E::add(1, 1, 3)));
    t.push_back(make("x=1/2", x, c(1, 2), E::add(2, 2, 1)));
    t.push_back(make("y=1/2", y, c(1, 2), E::add(3, 3, 1)));
    t.push_back(make("x=0", x, c(0), E::add(2, 2, 2)));
    t.push_back(make("y=0", y, c(0), E::add(3, 3, 3)));
    t.push_back(make("x*x=y", x * x, y, E::mul(2, 2, 3)));
    t.push_back(make("x*x=1", x * x, c(1), E::mul(2, 2, 1)));
    t.push_back(make("x+x=y", x + x, y, E::add(2, 2, 3)));
    t.push_back(make("y*y=x", y * y, x, E::mul(3, 3, 2)));
    t.push_back(make("y*y=1", y * y, c(1), E::mul(3, 3, 1)));
    t.push_back(make("y+y=x", y + y, x, E::add(3, 3, 2)));
    t.push_back(make("x*y=1", x * y, c(1), E::mul(2, 3, 1)));
    t.push_back(make("x+y=1", x + y, c(1), E::add(2, 3, 1)));
    t.push_back(make("x+1=y", x + c(1), y, E::add(1, 2, 3)));
    t.push_back(make("y+1=x", y + c(1), x, E::add(1, 3, 2)));
    return t;
}

const BigRational kPairBound(4);

struct SubsetOutcome {
    SolutionKind kind = SolutionKind::Inconsistent;
    std::size_t points = 0;
    bool out = false;
    double max_modulus = 0;
};

SubsetOutcome scan_subset(const std::vector<MultiPoly>& polys, Domain domain, const algebra::SolveOptions& opt) {
    SubsetOutcome r;
    r.kind = algebra::classify(polys, opt.gb_budget);
    if (r.kind != SolutionKind::ZeroDimensional) return r;
    auto sols = algebra::enumerate_solutions(polys, opt);
    if (domain == Domain::R) sols = algebra::real_points(sols);
    r.points = sols.size();
    for (auto& p : sols.points) {
        for (auto& c : p.coords) r.max_modulus = std::max(r.max_modulus, std::abs(c.approx()));
        if (!p.abs_le(kPairBound)) r.out = true;
    }
    return r;
}

}  // namespace

const std::vector<ReducedEquation>& reduced_table() {
    static const std::vector<ReducedEquation> table = build_table();
    return table;
}

nlohmann::json PairScanReport::to_json() const {
    nlohmann::json j;
    j["domain"] = domain_name(domain);
    j["pairs_checked"] = pairs.size();
    j["violations"] = violations;
    j["positive_dimensional"] = positive_dimensional;
    auto& rows = j["pairs"] = nlohmann::json::array();
    const auto& t = reduced_table();
    for (auto& p : pairs) {
        const char* kind = p.kind == SolutionKind::Inconsistent      ? "inconsistent"
                           : p.kind == SolutionKind::ZeroDimensional ? "finite"
                                                                     : "positive-dimensional";
        rows.push_back({{"i", p.i},
                        {"j", p.j},
                        {"pair", t[p.i - 1].text + ", " + t[p.j - 1].text},
                        {"kind", kind},
                        {"points", p.points},
                        {"max_modulus", p.max_modulus},
                        {"out_of_bound", p.out_of_bound}});
    }
    if (subsets_checked > 0) {
        j["subsets"] = {{"checked", subsets_checked},
                        {"violations", subset_violations},
                        {"positive_dimensional", subsets_positive}};
    }
    j["ok"] = ok();
    return j;
}

PairScanReport conj1_n3_pair_scan(Domain domain, bool with_triples, const algebra::SolveOptions& opt) {
    const auto& t = reduced_table();
    PairScanReport rep;
    rep.domain = domain;
    for (std::size_t i = 1; i <= t.size(); ++i)
        for (std::size_t j = i + 1; j <= t.size(); ++j) {
            auto o = scan_subset({t[i - 1].poly, t[j - 1].poly}, domain, opt);
            PairVerdict v{i, j, o.kind, o.points, o.out, o.max_modulus};
            if (o.out) ++rep.violations;
            if (o.kind == SolutionKind::PositiveDimensional) ++rep.positive_dimensional;
            rep.pairs.push_back(v);
        }
    if (!with_triples) return rep;
    std::vector<std::vector<std::size_t>> subsets;
    for (std::size_t a = 0; a < t.size(); ++a) {
        subsets.push_back({a});
        for (std::size_t b = a + 1; b < t.size(); ++b) {
            subsets.push_back({a, b});
            for (std::size_t c = b + 1; c < t.size(); ++c) subsets.push_back({a, b, c});
        }
    }
    for (auto& s : subsets) {
        std::vector<MultiPoly> polys;
        for (auto k : s) polys.push_back(t[k].poly);
        auto o = scan_subset(polys, domain, opt);
        ++rep.subsets_checked;
        if (o.out) ++rep.subset_violations;
        if (o.kind == SolutionKind::PositiveDimensional) ++rep.subsets_positive;
    }
    return rep;
}

}  // namespace canon::nonlinear
