#include "canon/nonlinear.hpp"

#include "canon/bounds.hpp"
#include "canon/error.hpp"
#include "canon/parallel.hpp"

#include <algorithm>
#include <complex>
#include <map>

namespace canon::nonlinear {

using algebra::SolutionKind;

namespace {

std::string system_str(const CanonicalSystem& s) {
    std::string out = "{";
    for (auto& e : s.equations()) {
        if (out.size() > 1) out += "; ";
        out += e.str();
    }
    return out + "}";
}

bool in_domain(const SolutionPoint& p, Domain d) { return d == Domain::C || p.is_real(); }

double max_modulus(const SolutionPoint& p) {
    double m = 0;
    for (auto& c : p.coords) m = std::max(m, std::abs(c.approx()));
    return m;
}

double max_modulus(const ValueSet& v) {
    double m = 0;
    for (auto& x : v) m = std::max(m, std::abs(x.to_complex()));
    return m;
}

ValueSet values_of(const SolutionPoint& p) {
    auto v = p.exact_values();
    return ValueSet(v.begin(), v.end());
}

QuadExt q(long a, long ad, long b, long bd, long d) {
    return QuadExt(BigRational(a, ad), BigRational(b, bd), BigInt(d));
}

QuadExt r(long a, long d = 1) { return QuadExt(BigRational(a, d)); }

// Picks n-element combinations of [0, m) in lexicographic order.
template <class F>
void for_each_combination(std::size_t m, std::size_t k, F&& f) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > m) return;
    for (;;) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::string value_set_str(const ValueSet& v) {
    std::string out = "{";
    for (auto& x : v) {
        if (out.size() > 1) out += ", ";
        out += x.str();
    }
    return out + "}";
}

std::vector<InducedSystem> collect_points(unsigned n, Domain domain, CollectStats* stats,
                                          const algebra::SolveOptions& opt, unsigned jobs) {
    if (n == 0 || n > 3) throw DomainError("catalog requires 1 <= n <= 3");
    const auto eqs = universe_equations(n, Universe::E);
    std::vector<std::vector<std::size_t>> subsets;
    for (std::size_t k = 1; k <= n; ++k)
        for_each_combination(eqs.size(), k, [&](const std::vector<std::size_t>& idx) { subsets.push_back(idx); });

    struct Slot {
        bool zero = false, budget = false;
        std::vector<std::pair<CanonicalSystem, SolutionPoint>> found;
    };
    std::vector<Slot> slots(subsets.size());
    parallel_for(subsets.size(), jobs, [&](std::size_t s) {
        CanonicalSystem sys(n);
        for (auto i : subsets[s]) sys.insert(eqs[i]);
        auto& slot = slots[s];
        try {
            if (algebra::classify(algebra::system_polys(sys), opt.gb_budget) != SolutionKind::ZeroDimensional) return;
            slot.zero = true;
            auto sols = algebra::enumerate_solutions(sys, opt);
            for (std::size_t p = 0; p < sols.size(); ++p) {
                if (!in_domain(sols.points[p], domain)) continue;
                slot.found.emplace_back(algebra::satisfied_subset(sols, p, Universe::E), sols.points[p]);
            }
        } catch (const BudgetExceeded&) {
            slot.budget = true;
        }
    });

    std::map<CanonicalSystem, std::map<std::string, SolutionPoint>> grouped;
    CollectStats st;
    st.subsets = subsets.size() + 1;  // the empty system is positive-dimensional
    for (auto& slot : slots) {
        st.zero_dimensional += slot.zero;
        st.budget_exceeded += slot.budget;
        for (auto& [sys, pt] : slot.found) grouped[sys].emplace(pt.str(), pt);
    }
    if (stats) *stats = st;
    std::vector<InducedSystem> out;
    for (auto& [sys, pts] : grouped) {
        InducedSystem is{sys, {}};
        for (auto& [_, p] : pts) is.points.push_back(p);
        out.push_back(std::move(is));
    }
    return out;
}

std::set<ValueSet> Catalog::value_sets() const {
    std::set<ValueSet> out;
    for (auto& e : entries) out.insert(e.values);
    return out;
}

std::set<CanonicalSystem> Catalog::systems() const {
    std::set<CanonicalSystem> out;
    for (auto& e : entries) out.insert(e.system);
    return out;
}

nlohmann::json Catalog::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["domain"] = domain_name(domain);
    j["subsets"] = stats.subsets;
    j["zero_dimensional_subsets"] = stats.zero_dimensional;
    j["budget_exceeded"] = stats.budget_exceeded;
    j["complete"] = complete();
    j["induced_systems"] = induced.size();
    auto& arr = j["maximal"] = nlohmann::json::array();
    for (auto& e : entries) {
        nlohmann::json row;
        row["values"] = value_set_str(e.values);
        row["system"] = system_str(e.system);
        auto& sols = row["solutions"] = nlohmann::json::array();
        for (auto& p : e.solutions) sols.push_back(p.str());
        arr.push_back(std::move(row));
    }
    std::set<std::string> vs;
    for (auto& v : value_sets()) vs.insert(value_set_str(v));
    j["value_sets"] = vs;
    return j;
}

std::set<ValueSet> family_W() {
    return {
        {r(1)},
        {r(0)},
        {r(1), r(0)},
        {r(1), r(2)},
        {r(1), r(1, 2)},
        {r(1), r(2), r(1, 2)},
        {r(1), r(0), r(2)},
        {r(1), r(0), r(1, 2)},
        {r(1), r(0), r(-1)},
        {r(1), r(2), r(-1)},
        {r(1), r(2), r(3)},
        {r(1), r(2), r(4)},
        {r(1), r(1, 2), r(-1, 2)},
        {r(1), r(1, 2), r(1, 4)},
        {r(1), r(1, 2), r(3, 2)},
        {r(1), r(-1), r(-2)},
        {r(1), r(1, 3), r(2, 3)},
        {r(1), r(2), q(0, 1, 1, 1, 2)},
        {r(1), r(1, 2), q(0, 1, 1, 2, 2)},
        {r(1), q(0, 1, 1, 1, 2), q(0, 1, 1, 2, 2)},
        {r(1), q(-1, 2, 1, 2, 5), q(1, 2, 1, 2, 5)},
        {r(1), q(1, 2, 1, 2, 5), q(3, 2, 1, 2, 5)},
        {r(1), q(-1, 2, -1, 2, 5), q(3, 2, 1, 2, 5)},
    };
}

std::set<ValueSet> family_W_complex_extra() {
    return {
        {r(1), q(-1, 2, 1, 2, -3), q(1, 2, 1, 2, -3)},
        {r(1), q(1, 2, -1, 2, -3), q(1, 2, 1, 2, -3)},
    };
}

std::set<CanonicalSystem> systems_from_value_sets(unsigned n, const std::set<ValueSet>& sets) {
    std::set<CanonicalSystem> out;
    for (auto& s : sets) {
        std::vector<QuadExt> elems(s.begin(), s.end());
        if (elems.size() > n) continue;
        std::vector<std::size_t> pick(n, 0);
        for (;;) {
            std::vector<char> hit(elems.size(), 0);
            for (auto p : pick) hit[p] = 1;
            if (std::all_of(hit.begin(), hit.end(), [](char c) { return c; })) {
                std::vector<QuadExt> v;
                for (auto p : pick) v.push_back(elems[p]);
                out.insert(satisfied_subset(std::span<const QuadExt>(v), Universe::E));
            }
            std::size_t i = 0;
            while (i < n && ++pick[i] == elems.size()) pick[i++] = 0;
            if (i == n) break;
        }
    }
    return out;
}

Catalog catalog_maximal(unsigned n, Domain domain, const algebra::SolveOptions& opt, unsigned jobs) {
    Catalog cat;
    cat.n = n;
    cat.domain = domain;
    cat.induced = collect_points(n, domain, &cat.stats, opt, jobs);

    std::set<ValueSet> preferred = family_W();
    for (auto& v : family_W_complex_extra()) preferred.insert(v);

    for (std::size_t a = 0; a < cat.induced.size(); ++a) {
        const auto& sa = cat.induced[a].system;
        bool dominated = false;
        for (std::size_t b = 0; b < cat.induced.size() && !dominated; ++b)
            if (b != a && cat.induced[b].system.size() > sa.size() && sa.subset_of(cat.induced[b].system))
                dominated = true;
        if (dominated) continue;

        CatalogEntry e;
        e.system = sa;
        if (algebra::classify(algebra::system_polys(sa), opt.gb_budget) == SolutionKind::ZeroDimensional) {
            auto sols = algebra::enumerate_solutions(sa, opt);
            for (auto& p : sols.points)
                if (in_domain(p, domain)) e.solutions.push_back(p);
        } else {
            e.solutions = cat.induced[a].points;
        }
        std::optional<ValueSet> best;
        for (auto& p : e.solutions) {
            if (!p.exact()) continue;
            auto v = values_of(p);
            bool better = !best || (preferred.count(v) && !preferred.count(*best)) ||
                          (preferred.count(v) == preferred.count(*best) &&
                           std::make_pair(max_modulus(v), v) < std::make_pair(max_modulus(*best), *best));
            if (better) best = v;
        }
        if (best) e.values = *best;
        cat.entries.push_back(std::move(e));
    }
    return cat;
}

nlohmann::json FamilyComparison::to_json() const {
    return {{"expected", expected}, {"found", found}, {"missing", missing}, {"unexpected", unexpected}, {"ok", ok()}};
}

FamilyComparison compare_family(const Catalog& cat, const std::set<ValueSet>& sets) {
    auto expected = systems_from_value_sets(cat.n, sets);
    auto found = cat.systems();
    FamilyComparison c;
    c.expected = expected.size();
    c.found = found.size();
    for (auto& s : expected)
        if (!found.count(s)) c.missing.push_back(system_str(s));
    for (auto& s : found)
        if (!expected.count(s)) c.unexpected.push_back(system_str(s));
    return c;
}

Conj1SmallReport verify_conj1_small(const Catalog& cat) {
    Conj1SmallReport rep;
    rep.n = cat.n;
    rep.domain = cat.domain;
    rep.bound = bound_conj1(cat.n);
    const BigRational bound(rep.bound);

    rep.bounded = !cat.entries.empty();
    for (auto& e : cat.entries)
        for (auto& p : e.solutions) {
            rep.max_modulus = std::max(rep.max_modulus, max_modulus(p));
            if (!p.abs_le(bound)) rep.bounded = false;
        }

    // Each collected point v must be replaceable coordinatewise by a member of
    // {v_i, 0, 1, 2, 1/2} within the bound while still solving S(v).
    std::vector<QuadExt> constants;
    for (auto c : {r(0), r(1), r(2), r(1, 2)})
        if (c.abs_le(bound)) constants.push_back(c);
    rep.replacements_found = true;
    for (auto& is : cat.induced) {
        for (auto& p : is.points) {
            std::vector<std::vector<QuadExt>> options(cat.n);
            for (std::size_t i = 0; i < cat.n; ++i) {
                if (p.coords[i].exact && p.coords[i].value.abs_le(bound)) options[i].push_back(p.coords[i].value);
                for (auto& c : constants)
                    if (std::find(options[i].begin(), options[i].end(), c) == options[i].end()) options[i].push_back(c);
            }
            std::vector<std::size_t> pick(cat.n, 0);
            bool found = false;
            for (;;) {
                std::vector<QuadExt> cand;
                for (std::size_t i = 0; i < cat.n; ++i) cand.push_back(options[i][pick[i]]);
                if (satisfies(is.system, std::span<const QuadExt>(cand))) {
                    found = true;
                    break;
                }
                std::size_t i = 0;
                while (i < cat.n && ++pick[i] == options[i].size()) pick[i++] = 0;
                if (i == cat.n) break;
            }
            if (!found) rep.replacements_found = false;
        }
    }
    return rep;
}

E2Report verify_e2_list(const std::vector<std::vector<BigRational>>& list) {
    const auto eqs = universe_equations(2, Universe::E);
    std::vector<std::uint32_t> masks;
    for (auto& pt : list) {
        std::uint32_t m = 0;
        for (std::size_t e = 0; e < eqs.size(); ++e)
            if (evaluate(eqs[e], std::span<const BigRational>(pt))) m |= 1u << e;
        masks.push_back(m);
    }
    E2Report rep;
    const std::uint32_t total = 1u << eqs.size();
    for (std::uint32_t s = 0; s < total; ++s) {
        ++rep.subsets;
        bool covered = std::any_of(masks.begin(), masks.end(), [&](std::uint32_t m) { return (s & ~m) == 0; });
        if (covered) {
            ++rep.consistent;
            continue;
        }
        CanonicalSystem sys(2);
        for (std::size_t e = 0; e < eqs.size(); ++e)
            if (s >> e & 1) sys.insert(eqs[e]);
        if (algebra::is_consistent_C(sys)) {
            ++rep.consistent;
            ++rep.uncovered;
        }
    }
    return rep;
}

std::vector<BigRational> doubling_witness(unsigned n) {
    if (n < 2) throw DomainError("doubling witness needs n >= 2");
    std::vector<BigRational> w{BigRational(1), BigRational(2)};
    while (w.size() < n) w.push_back(w.back() * w.back());
    return w;
}

bool doubling_witness_check(unsigned n, const algebra::SolveOptions& opt) {
    if (n < 2 || n > 5) throw DomainError("doubling witness check supports 2 <= n <= 5");
    auto w = doubling_witness(n);
    auto sys = satisfied_subset(std::span<const BigRational>(w), Universe::E);
    auto sols = algebra::enumerate_solutions(sys, opt);
    return sols.size() == 1 && sols.points[0].is_rational() && sols.points[0].rational_values() == w;
}

CanonicalSystem chain_21d(unsigned n) {
    if (n < 2) throw DomainError("chain needs n >= 2");
    CanonicalSystem s(n);
    s.insert(CanonicalEquation::add(1, 1, 2));
    s.insert(CanonicalEquation::mul(1, 1, 2));
    for (unsigned i = 2; i < n; ++i) s.insert(CanonicalEquation::mul(i, i, i + 1));
    return s;
}

bool chain_21d_check(unsigned n, const algebra::SolveOptions& opt) {
    auto sols = algebra::enumerate_solutions(chain_21d(n), opt);
    if (sols.size() != 2) return false;
    std::vector<BigRational> zero(n, BigRational(0));
    std::vector<BigRational> big{BigRational(2)};
    while (big.size() < n) big.push_back(big.back() * big.back());
    std::set<std::vector<BigRational>> want{zero, big}, got;
    for (auto& p : sols.points) {
        if (!p.is_rational()) return false;
        got.insert(p.rational_values());
    }
    return got == want;
}

}  // namespace canon::nonlinear
