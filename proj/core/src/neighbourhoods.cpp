#include "canon/neighbourhoods.hpp"

#include "canon/error.hpp"
#include "canon/nonlinear.hpp"
#include "canon/parallel.hpp"
#include "canon/rng.hpp"

#include <algorithm>

namespace canon::nbhd {

using algebra::MultiPoly;
using algebra::SolutionKind;

namespace {

bool within_box(const BigRational& v, long box) {
    return abs(v.get_num()) <= box && v.get_den() <= box;
}

std::vector<std::string> strs(const std::vector<BigRational>& v) {
    std::vector<std::string> out;
    for (auto& x : v) out.push_back(to_string(x));
    return out;
}

// A rational point of `polys` with x_1 != target inside the box, if the
// enumeration finds one.
std::optional<std::vector<BigRational>> moved_point(const std::vector<MultiPoly>& polys, const BigRational& target,
                                                    long box, const algebra::SolveOptions& opt) {
    auto sols = algebra::enumerate_solutions(polys, opt);
    for (auto& p : sols.points) {
        if (!p.is_rational()) continue;
        auto v = p.rational_values();
        if (v[0] == target) continue;
        if (std::all_of(v.begin(), v.end(), [&](const BigRational& x) { return within_box(x, box); })) return v;
    }
    return std::nullopt;
}

}  // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Fixed: return "fixed";
        case Verdict::Moved: return "moved";
        case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

std::vector<BigRational> variable_order(const Neighbourhood& a) {
    if (std::find(a.elements.begin(), a.elements.end(), a.target) == a.elements.end())
        throw DomainError("target must belong to the set");
    std::vector<BigRational> rest;
    for (auto& e : a.elements)
        if (e != a.target) rest.push_back(e);
    std::sort(rest.begin(), rest.end());
    if (std::adjacent_find(rest.begin(), rest.end()) != rest.end() || rest.size() + 1 != a.elements.size())
        throw DomainError("neighbourhood elements must be distinct");
    rest.insert(rest.begin(), a.target);
    return rest;
}

CanonicalSystem induced_system(const Neighbourhood& a) {
    auto v = variable_order(a);
    return satisfied_subset(std::span<const BigRational>(v), Universe::E);
}

bool is_arithmetic_map(const std::vector<BigRational>& order, const std::vector<BigRational>& image) {
    if (order.size() != image.size()) return false;
    auto sys = satisfied_subset(std::span<const BigRational>(order), Universe::E);
    return satisfies(sys, std::span<const BigRational>(image));
}

nlohmann::json FixednessCertificate::to_json() const {
    nlohmann::json j{{"verdict", verdict_name(verdict)}, {"order", strs(order)}, {"evidence", evidence}};
    std::vector<std::string> eqs;
    for (auto& e : system.equations()) eqs.push_back(e.str());
    j["system"] = eqs;
    if (image) j["image"] = strs(*image);
    return j;
}

FixednessCertificate is_fixed(const Neighbourhood& a, const FixedOptions& opt) {
    FixednessCertificate c;
    c.order = variable_order(a);
    c.system = satisfied_subset(std::span<const BigRational>(c.order), Universe::E);
    const std::size_t m = c.order.size();
    const auto polys = algebra::system_polys(c.system);
    auto settle_moved = [&](std::vector<BigRational> img, std::string how) {
        if (!satisfies(c.system, std::span<const BigRational>(img)) || img[0] == a.target)
            throw Error("witness map failed verification");
        c.verdict = Verdict::Moved;
        c.image = std::move(img);
        c.evidence = std::move(how);
    };
    try {
        auto kind = algebra::classify(polys, opt.solve.gb_budget);
        if (kind == SolutionKind::ZeroDimensional) {
            auto sols = algebra::enumerate_solutions(polys, opt.solve);
            for (auto& p : sols.points) {
                if (!p.is_rational()) continue;
                auto v = p.rational_values();
                if (v[0] != a.target) {
                    settle_moved(v, "rational point of the finite solution set");
                    return c;
                }
            }
            c.verdict = Verdict::Fixed;
            c.evidence = "every rational point of the finite solution set has x1 = target";
            return c;
        }
        auto gb = algebra::buchberger(polys, algebra::MonomialOrder::GrevLex, opt.solve.gb_budget);
        auto x1 = MultiPoly::variable(m, 0) - MultiPoly::constant(m, a.target);
        if (algebra::in_ideal(x1, gb)) {
            c.verdict = Verdict::Fixed;
            c.evidence = "x1 - target lies in the ideal";
            return c;
        }
        // Slice the free variables at rational values, small ones first.
        auto free_vars = algebra::independent_variables(gb);
        std::vector<BigRational> seeds{0, 1, -1, 2, BigRational(1, 2), 3, -2};
        Rng rng(opt.seed);
        for (unsigned t = 0; t < opt.slice_attempts; ++t) {
            auto sliced = gb.gens;
            for (std::size_t k = 0; k < free_vars.size(); ++k) {
                BigRational val = t < seeds.size() ? seeds[(t + k) % seeds.size()] : rng.rational(opt.witness_box, opt.witness_box);
                sliced.push_back(MultiPoly::variable(m, free_vars[k]) - MultiPoly::constant(m, val));
            }
            if (algebra::classify(sliced, opt.solve.gb_budget) != SolutionKind::ZeroDimensional) continue;
            if (auto v = moved_point(sliced, a.target, opt.witness_box, opt.solve)) {
                settle_moved(*v, "rational point found by slicing the solution set");
                return c;
            }
        }
        c.verdict = Verdict::Unknown;
        c.evidence = "no rational witness found within the search box";
    } catch (const BudgetExceeded&) {
        c.verdict = Verdict::Unknown;
        c.evidence = "solver budget exceeded";
    }
    return c;
}

nlohmann::json KtildeResult::to_json() const {
    std::vector<BigRational> sorted(values.begin(), values.end());
    return {{"n", n}, {"values", strs(sorted)}, {"card", values.size()}, {"candidates", candidates}, {"unknown", unknown}};
}

KtildeResult compute_Ktilde(unsigned n, const FixedOptions& opt, unsigned jobs) {
    if (n == 0 || n > 3) throw DomainError("compute_Ktilde supports 1 <= n <= 3");
    KtildeResult res;
    res.n = n;
    // Candidate neighbourhoods: rational points with distinct coordinates of
    // every zero-dimensional subset of E_m, m <= n.
    std::set<std::vector<BigRational>> tuples;
    for (unsigned m = 1; m <= n; ++m) {
        nonlinear::CollectStats st;
        auto induced = nonlinear::collect_points(m, nonlinear::Domain::C, &st, opt.solve, jobs);
        if (st.budget_exceeded) throw BudgetExceeded("catalog incomplete: solver budget exceeded");
        for (auto& is : induced)
            for (auto& p : is.points) {
                if (!p.is_rational()) continue;
                auto v = p.rational_values();
                auto sorted = v;
                std::sort(sorted.begin(), sorted.end());
                if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
                tuples.insert(v);
            }
    }
    std::vector<std::vector<BigRational>> list(tuples.begin(), tuples.end());
    std::vector<Verdict> verdicts(list.size());
    parallel_for(list.size(), jobs, [&](std::size_t i) {
        verdicts[i] = is_fixed(Neighbourhood{list[i], list[i][0]}, opt).verdict;
    });
    res.candidates = list.size();
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (verdicts[i] == Verdict::Fixed) res.values.insert(list[i][0]);
        if (verdicts[i] == Verdict::Unknown) ++res.unknown;
    }
    return res;
}

std::optional<unsigned> omega(const BigRational& r, unsigned max_n, const FixedOptions& opt) {
    if (max_n > 3) throw DomainError("omega is exhaustive only for max_n <= 3");
    for (unsigned m = 1; m <= max_n; ++m)
        if (compute_Ktilde(m, opt).values.count(r)) return m;
    return std::nullopt;
}

nlohmann::json Theorem10Report::to_json() const {
    nlohmann::json j{{"n", n}, {"bound", to_string(bound)}, {"ok", ok}};
    if (card) j["card"] = *card;
    return j;
}

Theorem10Report theorem10_bound_check(unsigned n, const FixedOptions& opt) {
    if (n < 3) throw DomainError("size bound check needs n >= 3");
    Theorem10Report r;
    r.n = n;
    r.bound = pow_int(BigInt(n + 1), n * n + n) + 2;
    if (n == 3) {
        r.card = compute_Ktilde(3, opt).values.size();
        r.ok = BigInt(static_cast<unsigned long>(*r.card)) <= r.bound;
    }
    return r;
}

}  // namespace canon::nbhd
