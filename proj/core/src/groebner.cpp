#include "canon/groebner.hpp"

#include "canon/config.hpp"
#include "canon/error.hpp"

#include <algorithm>
#include <set>

namespace canon::algebra {

namespace {

struct Pair {
    std::size_t i, j;  // i < j, indices into Engine::polys
    Monomial lcm;
};

class Engine {
public:
    Engine(std::size_t nvars, MonomialOrder order, std::uint64_t budget)
        : nvars_(nvars), order_(order), budget_(budget) {}

    // Returns false once a non-zero constant has been found.
    bool add(MultiPoly h) {
        h = reduce(h);
        if (h.is_zero()) return true;
        if (h.is_constant()) {
            unit_ = true;
            return false;
        }
        insert(h.monic());
        return true;
    }

    void run() {
        while (!unit_ && !pairs_.empty()) {
            auto best = pairs_.begin();
            for (auto it = pairs_.begin(); it != pairs_.end(); ++it) {
                int c = compare(it->lcm, best->lcm, order_, nvars_);
                if (c < 0 || (c == 0 && std::tie(it->j, it->i) < std::tie(best->j, best->i))) best = it;
            }
            Pair p = *best;
            pairs_.erase(best);
            if (++reductions_ > budget_) throw BudgetExceeded("budget exceeded");
            MultiPoly s = spoly(polys_[p.i], polys_[p.j], p.lcm);
            if (!add(std::move(s))) return;
        }
    }

    GroebnerBasis result() const {
        GroebnerBasis gb;
        gb.nvars = nvars_;
        gb.order = order_;
        if (unit_) {
            gb.gens.push_back(MultiPoly::constant(nvars_, 1, order_));
            return gb;
        }
        std::vector<MultiPoly> minimal;
        for (std::size_t a = 0; a < polys_.size(); ++a) {
            if (!active_[a]) continue;
            minimal.push_back(polys_[a]);
        }
        // Drop duplicates of leading monomials (keep the first).
        std::vector<MultiPoly> kept;
        for (auto& g : minimal) {
            bool redundant = false;
            for (auto& k : kept)
                if (k.lm().divides(g.lm(), nvars_)) redundant = true;
            if (!redundant) kept.push_back(g);
        }
        for (std::size_t a = 0; a < kept.size(); ++a) {
            std::vector<MultiPoly> others;
            for (std::size_t b = 0; b < kept.size(); ++b)
                if (b != a) others.push_back(kept[b]);
            MultiPoly lead_part = MultiPoly::from_terms(nvars_, order_, {kept[a].lead()});
            MultiPoly tail = kept[a] - lead_part;
            kept[a] = (lead_part + normal_form(tail, others)).monic();
        }
        std::sort(kept.begin(), kept.end(), [&](const MultiPoly& x, const MultiPoly& y) {
            return compare(x.lm(), y.lm(), order_, nvars_) < 0;
        });
        gb.gens = std::move(kept);
        return gb;
    }

private:
    MultiPoly reduce(const MultiPoly& f) const {
        std::vector<MultiPoly> basis;
        for (std::size_t a = 0; a < polys_.size(); ++a)
            if (active_[a]) basis.push_back(polys_[a]);
        return normal_form(f, basis);
    }

    MultiPoly spoly(const MultiPoly& f, const MultiPoly& g, const Monomial& l) const {
        MultiPoly s = f.mul_term(f.lm().quotient_of(l), 1 / f.lc());
        s.sub_mul_term(1 / g.lc(), g.lm().quotient_of(l), g);
        return s;
    }

    // Gebauer–Möller update.
    void insert(const MultiPoly& h) {
        std::size_t hi = polys_.size();
        const Monomial& hm = h.lm();
        polys_.push_back(h);
        active_.push_back(true);

        struct Cand {
            std::size_t g;
            Monomial lcm;
            bool coprime;
        };
        std::vector<Cand> c;
        for (std::size_t g = 0; g < hi; ++g)
            if (active_[g]) c.push_back({g, hm.lcm(polys_[g].lm()), hm.coprime(polys_[g].lm(), nvars_)});

        // Chain criterion among the new pairs, popping from the front of c.
        std::vector<Cand> d;
        for (std::size_t a = 0; a < c.size(); ++a) {
            bool keep = c[a].coprime;
            if (!keep) {
                keep = true;
                for (std::size_t b = a + 1; b < c.size() && keep; ++b)
                    if (c[b].lcm.divides(c[a].lcm, nvars_)) keep = false;
                for (std::size_t b = 0; b < d.size() && keep; ++b)
                    if (d[b].lcm.divides(c[a].lcm, nvars_)) keep = false;
            }
            if (keep) d.push_back(c[a]);
        }
        std::vector<Cand> e;
        for (auto& x : d)
            if (!x.coprime) e.push_back(x);

        std::vector<Pair> kept;
        for (auto& p : pairs_) {
            bool drop = hm.divides(p.lcm, nvars_) && !(polys_[p.i].lm().lcm(hm) == p.lcm) &&
                        !(polys_[p.j].lm().lcm(hm) == p.lcm);
            if (!drop) kept.push_back(p);
        }
        for (auto& x : e) kept.push_back({x.g, hi, x.lcm});
        pairs_ = std::move(kept);

        for (std::size_t g = 0; g < hi; ++g)
            if (active_[g] && hm.divides(polys_[g].lm(), nvars_)) active_[g] = false;
    }

    std::size_t nvars_;
    MonomialOrder order_;
    std::uint64_t budget_;
    std::uint64_t reductions_ = 0;
    bool unit_ = false;
    std::vector<MultiPoly> polys_;
    std::vector<bool> active_;
    std::vector<Pair> pairs_;
};

std::size_t common_nvars(const std::vector<MultiPoly>& gens) {
    if (gens.empty()) throw DomainError("buchberger requires at least one generator");
    std::size_t n = gens[0].nvars();
    for (auto& g : gens)
        if (g.nvars() != n) throw DomainError("generators over different variable sets");
    return n;
}

}  // namespace

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis) {
    MultiPoly p = f;
    MultiPoly r(f.nvars(), f.order());
    const std::size_t n = f.nvars();
    while (!p.is_zero()) {
        const Term& lt = p.lead();
        const MultiPoly* div = nullptr;
        for (const auto& g : basis) {
            if (!g.is_zero() && g.lm().divides(lt.m, n)) {
                div = &g;
                break;
            }
        }
        if (div) {
            BigRational c = lt.c / div->lc();
            Monomial q = div->lm().quotient_of(lt.m);
            p.sub_mul_term(c, q, *div);
        } else {
            r.append_smaller(p.pop_lead());
        }
    }
    return r;
}

GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, MonomialOrder order, std::uint64_t budget) {
    std::size_t n = common_nvars(gens);
    Engine eng(n, order, budget);
    // Feed low-degree generators first; deterministic for a given input order.
    std::vector<MultiPoly> sorted;
    for (auto& g : gens) sorted.push_back(g.with_order(order));
    std::stable_sort(sorted.begin(), sorted.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        if (a.is_zero() || b.is_zero()) return !a.is_zero() && b.is_zero();
        return compare(a.lm(), b.lm(), order, n) < 0;
    });
    for (auto& g : sorted)
        if (!eng.add(g)) return eng.result();
    eng.run();
    return eng.result();
}

GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, MonomialOrder order) {
    return buchberger(gens, order, default_config().gb_budget);
}

GroebnerBasis extend(const GroebnerBasis& gb, const std::vector<MultiPoly>& fs, std::uint64_t budget) {
    if (gb.is_one()) return gb;
    Engine eng(gb.nvars, gb.order, budget);
    // The existing basis needs no internal pairs; adding it element by element
    // lets the criteria discard them, the remaining ones reduce to zero cheaply.
    for (auto& g : gb.gens) eng.add(g);
    for (auto& f : fs)
        if (!eng.add(f.with_order(gb.order))) return eng.result();
    eng.run();
    return eng.result();
}

GroebnerBasis extend(const GroebnerBasis& gb, const MultiPoly& f, std::uint64_t budget) {
    return extend(gb, std::vector<MultiPoly>{f}, budget);
}

namespace {

std::vector<std::uint64_t> lead_supports(const GroebnerBasis& gb) {
    std::vector<std::uint64_t> s;
    for (auto& g : gb.gens) {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < gb.nvars; ++i)
            if (g.lm().e[i]) m |= std::uint64_t{1} << i;
        s.push_back(m);
    }
    return s;
}

void best_independent(const std::vector<std::uint64_t>& supports, std::size_t nvars, std::size_t next,
                      std::uint64_t cur, std::size_t size, std::uint64_t& best, std::size_t& best_size) {
    if (size + (nvars - next) <= best_size && best_size > 0) return;
    if (size > best_size || (size == best_size && best_size == 0)) {
        best = cur;
        best_size = size;
    }
    for (std::size_t v = next; v < nvars; ++v) {
        std::uint64_t u = cur | (std::uint64_t{1} << v);
        bool ok = true;
        for (auto s : supports)
            if ((s & ~u) == 0) {
                ok = false;
                break;
            }
        if (ok) best_independent(supports, nvars, v + 1, u, size + 1, best, best_size);
    }
}

}  // namespace

std::vector<std::size_t> independent_variables(const GroebnerBasis& gb) {
    if (gb.is_one()) return {};
    auto supports = lead_supports(gb);
    std::uint64_t best = 0;
    std::size_t best_size = 0;
    best_independent(supports, gb.nvars, 0, 0, 0, best, best_size);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < gb.nvars; ++i)
        if (best & (std::uint64_t{1} << i)) out.push_back(i);
    return out;
}

int dimension(const GroebnerBasis& gb) {
    if (gb.is_one()) return -1;
    return static_cast<int>(independent_variables(gb).size());
}

DimensionClass dimension_class(const GroebnerBasis& gb) {
    if (gb.is_one()) return DimensionClass::Empty;
    // Zero-dimensional iff every variable has a pure power among the leads.
    std::vector<bool> pure(gb.nvars, false);
    for (auto& g : gb.gens) {
        int v = g.lm().single_variable(gb.nvars);
        if (v >= 0) pure[static_cast<std::size_t>(v)] = true;
    }
    for (bool b : pure)
        if (!b) return DimensionClass::Positive;
    return DimensionClass::Zero;
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb) {
    if (dimension_class(gb) != DimensionClass::Zero) throw DomainError("ideal is not zero-dimensional");
    const std::size_t n = gb.nvars;
    auto cmp = [&](const Monomial& a, const Monomial& b) { return compare(a, b, gb.order, n) < 0; };
    std::set<Monomial, decltype(cmp)> seen(cmp);
    std::vector<Monomial> frontier{Monomial{}};
    seen.insert(Monomial{});
    while (!frontier.empty()) {
        Monomial m = frontier.back();
        frontier.pop_back();
        for (std::size_t v = 0; v < n; ++v) {
            Monomial next = m * Monomial::var(v);
            if (seen.count(next)) continue;
            bool divisible = false;
            for (auto& g : gb.gens)
                if (g.lm().divides(next, n)) {
                    divisible = true;
                    break;
                }
            if (divisible) continue;
            seen.insert(next);
            frontier.push_back(next);
            if (seen.size() > 200000) throw BudgetExceeded("budget exceeded");
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace canon::algebra
