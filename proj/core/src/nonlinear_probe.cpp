#include "canon/nonlinear.hpp"

#include "canon/bounds.hpp"
#include "canon/error.hpp"
#include "canon/parallel.hpp"
#include "canon/rng.hpp"

#include <algorithm>
#include <complex>

namespace canon::nonlinear {

using algebra::DimensionClass;
using algebra::GroebnerBasis;
using algebra::MonomialOrder;
using algebra::SolutionKind;

namespace {

constexpr auto kOrder = MonomialOrder::GrevLex;

double point_modulus(const SolutionPoint& p) {
    double m = 0;
    for (auto& c : p.coords) m = std::max(m, std::abs(c.approx()));
    return m;
}

std::vector<MultiPoly> dedupe(std::vector<MultiPoly> in) {
    std::vector<MultiPoly> out;
    for (auto& p : in) {
        if (p.is_zero()) continue;
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    }
    return out;
}

struct Conj21Slot {
    bool budget = false;
    int dim = -2;
    double max_abs = 0;
    bool violation = false;
    std::string system;
};

std::string polys_str(const std::vector<MultiPoly>& ps) {
    std::string s = "[";
    for (auto& p : ps) {
        if (s.size() > 1) s += ", ";
        s += p.str();
    }
    return s + "]";
}

}  // namespace

nlohmann::json Conj21Report::to_json() const {
    return {{"n", n},
            {"iterations", iterations},
            {"seed", seed},
            {"variant", variant == Conj21Variant::WithUnits ? "with-units" : "without-units"},
            {"pool_size", pool_size},
            {"max_abs_value", max_abs_value},
            {"bound", to_string(bound)},
            {"zero_dimensional", zero_dimensional},
            {"positive_dimensional", positive_dimensional},
            {"budget_exceeded", budget_exceeded},
            {"violations", violations},
            {"flags", flags},
            {"violating_systems", violating_systems},
            {"ok", ok()}};
}

Conj21Report probe_conj21(unsigned n, std::size_t iterations, std::uint64_t seed, Conj21Variant variant,
                          unsigned jobs, const algebra::SolveOptions& opt) {
    if (n < 2 || n > 8) throw DomainError("probe21 supports 2 <= n <= 8");
    const bool units = variant == Conj21Variant::WithUnits;
    const std::size_t nv = units ? n - 1 : n;

    std::vector<MultiPoly> vars;
    if (units) vars.push_back(MultiPoly::constant(nv, 1));
    for (std::size_t i = 0; i < nv; ++i) vars.push_back(MultiPoly::variable(nv, i));
    std::vector<MultiPoly> raw;
    if (units)
        for (std::size_t i = 0; i < nv; ++i) raw.push_back(MultiPoly::variable(nv, i) - MultiPoly::constant(nv, 1));
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i; j < vars.size(); ++j)
            for (std::size_t k = 0; k < vars.size(); ++k) {
                raw.push_back(vars[i] + vars[j] - vars[k]);
                raw.push_back(vars[i] * vars[j] - vars[k]);
            }
    const auto pool = dedupe(std::move(raw));

    Conj21Report rep;
    rep.n = n;
    rep.iterations = iterations;
    rep.seed = seed;
    rep.variant = variant;
    rep.pool_size = pool.size();
    rep.bound = units ? bound_conj1(n) : bound_21d(n);
    rep.max_abs_value = units ? 1 : 0;
    const BigRational bound(rep.bound);

    std::vector<Conj21Slot> slots(iterations);
    parallel_for(iterations, jobs, [&](std::size_t it) {
        auto& slot = slots[it];
        Rng rng(trial_seed(seed, it));
        auto q = pool;
        rng.shuffle(q);
        std::vector<MultiPoly> syst;
        std::optional<GroebnerBasis> gb;
        try {
            for (auto& f : q) {
                if (gb && algebra::in_ideal(f, *gb)) continue;
                auto next = gb ? algebra::extend(*gb, f, opt.gb_budget) : algebra::buchberger({f}, kOrder, opt.gb_budget);
                if (next.is_one()) continue;
                gb = std::move(next);
                syst.push_back(f);
                if (algebra::dimension(*gb) == 0) break;
            }
            slot.dim = gb ? algebra::dimension(*gb) : static_cast<int>(nv);
            if (slot.dim > 0) {
                slot.system = polys_str(syst);
                return;
            }
            auto sols = algebra::enumerate_solutions(gb->gens, opt);
            for (auto& p : sols.points) {
                slot.max_abs = std::max(slot.max_abs, point_modulus(p));
                if (!p.abs_le(bound)) slot.violation = true;
            }
            if (slot.violation) slot.system = polys_str(syst);
        } catch (const BudgetExceeded&) {
            slot.budget = true;
        }
    });

    for (auto& s : slots) {
        if (s.budget) {
            ++rep.budget_exceeded;
            continue;
        }
        if (s.dim > 0) {
            ++rep.positive_dimensional;
            rep.flags.push_back("positive-dimensional with the whole pool: " + s.system);
            continue;
        }
        ++rep.zero_dimensional;
        rep.max_abs_value = std::max(rep.max_abs_value, s.max_abs);
        if (s.violation) {
            ++rep.violations;
            rep.violating_systems.push_back(s.system);
        }
    }
    return rep;
}

// ---- greedy large-solution probe --------------------------------------------

std::vector<CanonicalEquation> probe_pool(unsigned n) {
    if (n < 4) throw DomainError("probe1 requires n >= 4");
    auto removed = [](const CanonicalEquation& e) {
        if (e.kind == EqKind::Unit) return true;
        const auto i = e.i, j = e.j, k = e.k;
        if (e.kind == EqKind::Mul) return i == 1 || k == i || k == j;
        if (i == 1 && k == j) return true;                 // x1 + xj = xj
        if (i == 1 && j == 1 && k != 2) return true;       // x1 + x1 = xk
        if (i == j && k == 1 && i != 3) return true;       // xi + xi = x1
        if ((k == i || k == j) && !(i == 4 && j == 4)) return true;
        return false;
    };
    std::vector<CanonicalEquation> out;
    for (auto& e : universe_equations(n, Universe::E))
        if (!removed(e)) out.push_back(e);
    return out;
}

namespace {

struct Conj1Context {
    unsigned n;
    Domain domain;
    const Conj1ProbeOptions& opt;
    Rng& rng;
    std::size_t heuristic = 0;
    std::size_t budget = 0;

    std::size_t nv() const { return n - 1; }

    MultiPoly var(std::uint32_t i) const {
        return i == 1 ? MultiPoly::constant(nv(), 1) : MultiPoly::variable(nv(), i - 2);
    }

    MultiPoly poly(const CanonicalEquation& e) const {
        switch (e.kind) {
            case EqKind::Unit: return var(e.i) - MultiPoly::constant(nv(), 1);
            case EqKind::Add: return var(e.i) + var(e.j) - var(e.k);
            case EqKind::Mul: return var(e.i) * var(e.j) - var(e.k);
        }
        return {};
    }

    // Product of x_i - x_j and x_i - 1 over the unknowns.
    MultiPoly separation() const {
        auto d = MultiPoly::constant(nv(), 1);
        for (std::size_t i = 0; i < nv(); ++i) {
            d = d * (MultiPoly::variable(nv(), i) - MultiPoly::constant(nv(), 1));
            for (std::size_t j = i + 1; j < nv(); ++j) d = d * (MultiPoly::variable(nv(), i) - MultiPoly::variable(nv(), j));
        }
        return d;
    }

    static MultiPoly widen(const MultiPoly& p, std::size_t nvars) {
        return MultiPoly::from_terms(nvars, p.order(), p.terms());
    }

    bool distinct_at(const algebra::SolutionSet& s, std::size_t idx) const {
        for (std::size_t i = 0; i < nv(); ++i) {
            auto xi = MultiPoly::variable(nv(), i);
            if (algebra::vanishes_at(s, idx, xi - MultiPoly::constant(nv(), 1))) return false;
            for (std::size_t j = i + 1; j < nv(); ++j)
                if (algebra::vanishes_at(s, idx, xi - MultiPoly::variable(nv(), j))) return false;
        }
        return true;
    }

    bool point_found(const std::vector<MultiPoly>& polys, bool distinct) {
        auto sols = algebra::enumerate_solutions(polys, opt.solve);
        for (std::size_t p = 0; p < sols.size(); ++p) {
            if (domain == Domain::R && !sols.points[p].is_real()) continue;
            if (!distinct || distinct_at(sols, p)) return true;
        }
        return false;
    }

    // Does the system have a solution in the domain (with 1, x_2, ..., x_n
    // pairwise different when `distinct`)?
    bool feasible(const std::vector<MultiPoly>& polys, bool distinct) {
        try {
            if (distinct) {
                auto widened = std::vector<MultiPoly>{};
                for (auto& p : polys) widened.push_back(widen(p, nv() + 1));
                auto t = MultiPoly::variable(nv() + 1, nv());
                widened.push_back(t * widen(separation(), nv() + 1) - MultiPoly::constant(nv() + 1, 1));
                if (algebra::buchberger(widened, kOrder, opt.solve.gb_budget).is_one()) return false;
                if (domain == Domain::C) return true;
            }
            auto gb = algebra::buchberger(polys, kOrder, opt.solve.gb_budget);
            if (gb.is_one()) return false;
            if (domain == Domain::C) return true;
            auto cls = algebra::dimension_class(gb);
            if (cls == DimensionClass::Zero) return point_found(gb.gens, distinct);
            auto free_vars = algebra::independent_variables(gb);
            for (unsigned a = 0; a < opt.slice_attempts; ++a) {
                auto sliced = gb.gens;
                for (auto v : free_vars)
                    sliced.push_back(MultiPoly::variable(nv(), v) - MultiPoly::constant(nv(), rng.rational(8, 4)));
                if (algebra::classify(sliced, opt.solve.gb_budget) != SolutionKind::ZeroDimensional) continue;
                if (point_found(sliced, distinct)) return true;
            }
            ++heuristic;
            return false;
        } catch (const BudgetExceeded&) {
            ++budget;
            return false;
        }
    }
};

}  // namespace

nlohmann::json Conj1ProbeReport::to_json() const {
    nlohmann::json j{{"n", n},
                     {"seed", seed},
                     {"domain", domain_name(domain)},
                     {"found", found},
                     {"orders_tried", orders_tried},
                     {"final_exact", final_exact},
                     {"within_bound", within_bound},
                     {"heuristic_decisions", heuristic_decisions},
                     {"budget_exceeded", budget_exceeded},
                     {"verdict", verdict},
                     {"violation", violation()}};
    std::vector<std::string> eqs;
    for (auto& e : system.equations()) eqs.push_back(e.str());
    j["system"] = eqs;
    if (smallest_solution) {
        j["smallest_solution"] = *smallest_solution;
        j["smallest_norm"] = smallest_norm;
    }
    return j;
}

Conj1ProbeReport probe_conj1(unsigned n, std::uint64_t seed, Domain domain, const Conj1ProbeOptions& opt) {
    const auto pool = probe_pool(n);
    Rng rng(seed);
    Conj1Context ctx{n, domain, opt, rng};
    Conj1ProbeReport rep;
    rep.n = n;
    rep.seed = seed;
    rep.domain = domain;

    auto same_left = [](const CanonicalEquation& a, const CanonicalEquation& b) {
        return a.kind == b.kind && a.i == b.i && a.j == b.j;
    };
    auto involves_one = [](const CanonicalEquation& e) { return e.i == 1 || e.j == 1 || e.k == 1; };

    std::vector<std::size_t> with_one;
    for (std::size_t i = 0; i < pool.size(); ++i)
        if (involves_one(pool[i])) with_one.push_back(i);

    for (unsigned attempt = 0; attempt < opt.restart_limit; ++attempt) {
        ++rep.orders_tried;
        // Start from an equation involving 1, then a random order.
        std::size_t first = with_one[rng.below(with_one.size())];
        std::vector<std::size_t> order;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (i != first) order.push_back(i);
        rng.shuffle(order);
        order.insert(order.begin(), first);

        // Greedy: add pool equations while some solution survives.
        std::vector<CanonicalEquation> chosen{pool[first]};
        std::vector<MultiPoly> polys{ctx.poly(pool[first])};
        std::vector<char> dropped(pool.size(), 0);
        auto drop_like = [&](const CanonicalEquation& s) {
            if (!opt.drop_same_left_side) return;
            for (std::size_t i = 0; i < pool.size(); ++i)
                if (same_left(pool[i], s)) dropped[i] = 1;
        };
        dropped[first] = 1;
        drop_like(pool[first]);
        for (std::size_t pos = 1; pos < order.size(); ++pos) {
            auto h = order[pos];
            if (dropped[h]) continue;
            auto trial = polys;
            trial.push_back(ctx.poly(pool[h]));
            if (!ctx.feasible(trial, true)) continue;
            polys = std::move(trial);
            chosen.push_back(pool[h]);
            dropped[h] = 1;
            drop_like(pool[h]);
        }

        // Reject if x_i = 1 or x_i = x_j stays solvable.
        bool restart = false;
        for (std::size_t i = 0; i < ctx.nv() && !restart; ++i) {
            auto xi = MultiPoly::variable(ctx.nv(), i);
            auto trial = polys;
            trial.push_back(xi - MultiPoly::constant(ctx.nv(), 1));
            if (ctx.feasible(trial, false)) restart = true;
            for (std::size_t j = i + 1; j < ctx.nv() && !restart; ++j) {
                auto t2 = polys;
                t2.push_back(xi - MultiPoly::variable(ctx.nv(), j));
                if (ctx.feasible(t2, false)) restart = true;
            }
        }
        if (restart) continue;

        rep.found = true;
        rep.system = CanonicalSystem(n);
        rep.system.insert(CanonicalEquation::unit(1));
        for (auto& e : chosen) rep.system.insert(e);
        try {
            auto gb = algebra::buchberger(polys, kOrder, opt.solve.gb_budget);
            if (algebra::dimension_class(gb) != DimensionClass::Zero) {
                rep.verdict = "unresolved: final system is not zero-dimensional";
                break;
            }
            rep.final_exact = true;
            auto sols = algebra::enumerate_solutions(gb.gens, opt.solve);
            const BigRational bound(bound_conj1(n));
            std::optional<std::size_t> best;
            double best_norm = 0;
            for (std::size_t p = 0; p < sols.size(); ++p) {
                const auto& pt = sols.points[p];
                if (domain == Domain::R && !pt.is_real()) continue;
                double m = std::max(1.0, point_modulus(pt));
                if (!best || m < best_norm) best = p, best_norm = m;
                if (pt.abs_le(bound)) rep.within_bound = true;
            }
            if (best) {
                std::vector<std::string> coords{"1"};
                const auto& pt = sols.points[*best];
                if (pt.exact())
                    for (auto& v : pt.exact_values()) coords.push_back(v.str());
                else
                    for (auto& c : pt.coords) {
                        auto z = c.approx();
                        coords.push_back(std::to_string(z.real()) + (z.imag() != 0 ? "+" + std::to_string(z.imag()) + "i" : ""));
                    }
                rep.smallest_solution = coords;
                rep.smallest_norm = best_norm;
            }
            rep.verdict = rep.within_bound ? "a solution lies within the bound" : "no solution within the bound";
        } catch (const BudgetExceeded&) {
            ++ctx.budget;
            rep.final_exact = false;
            rep.verdict = "unresolved: budget exceeded on the final system";
        }
        break;
    }
    if (!rep.found) rep.verdict = "no qualifying system found for this seed";
    rep.heuristic_decisions = ctx.heuristic;
    rep.budget_exceeded = ctx.budget;
    return rep;
}

}  // namespace canon::nonlinear
