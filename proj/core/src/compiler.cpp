#include "canon/compiler.hpp"

#include "canon/bounds.hpp"
#include "canon/error.hpp"
#include "canon/parallel.hpp"
#include "canon/rng.hpp"

#include <algorithm>
#include <set>

namespace canon::compiler {

namespace {

// Exponent vectors of the box 0 <= s_i <= d_i in lexicographic order.
std::vector<Exponents> box(const std::vector<unsigned>& d) {
    std::vector<Exponents> out;
    Exponents s(d.size(), 0);
    for (;;) {
        out.push_back(s);
        std::size_t i = d.size();
        while (i > 0) {
            --i;
            if (s[i] < d[i]) {
                ++s[i];
                std::fill(s.begin() + static_cast<long>(i) + 1, s.end(), 0u);
                break;
            }
            if (i == 0) return out;
        }
        if (d.empty()) return out;
    }
}

// x^s = x^{s - e_i} * x_i with s - e_i lexicographically largest.
std::pair<Exponents, std::size_t> largest_divisor(const Exponents& s) {
    Exponents best;
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!s[i]) continue;
        Exponents cand = s;
        --cand[i];
        if (best.empty() || best < cand) {
            best = std::move(cand);
            best_i = i;
        }
    }
    return {best, best_i};
}

unsigned degree(const Exponents& e) {
    unsigned s = 0;
    for (unsigned v : e) s += v;
    return s;
}

// Builds the variables and equations, keeping meanings in step.
class Builder {
public:
    explicit Builder(std::size_t n) : n_(n) {
        for (std::size_t i = 0; i < n; ++i) meaning_.push_back(Polynomial::variable(n, i));
    }

    std::uint32_t fresh(Polynomial meaning) {
        meaning_.push_back(std::move(meaning));
        return static_cast<std::uint32_t>(meaning_.size());
    }

    void emit(const CanonicalEquation& e) { eqs_.push_back(e); }

    std::size_t size() const { return meaning_.size(); }

    CompilationResult finish(std::vector<std::uint32_t> q) {
        CompilationResult r;
        r.n = n_;
        r.total_vars = meaning_.size();
        r.canonical = CanonicalSystem(meaning_.size());
        for (auto& e : eqs_) r.canonical.insert(e);
        r.q = std::move(q);
        std::set<Polynomial> distinct(meaning_.begin(), meaning_.end());
        r.distinct_meanings = distinct.size();
        r.var_meaning = std::move(meaning_);
        return r;
    }

    const Polynomial& meaning(std::uint32_t v) const { return meaning_.at(v - 1); }

private:
    std::size_t n_;
    std::vector<Polynomial> meaning_;
    std::vector<CanonicalEquation> eqs_;
};

// Variables for each integer in [-M, M] with the chain c+1 = c + 1 and
// negatives through the zero variable. Returns index by c + M.
std::vector<std::uint32_t> constants(Builder& b, long M) {
    const std::size_t n = b.size();
    std::vector<std::uint32_t> var(static_cast<std::size_t>(2 * M + 1));
    for (long c = -M; c <= M; ++c) var[static_cast<std::size_t>(c + M)] = b.fresh(Polynomial::constant(n, c));
    auto at = [&](long c) { return var[static_cast<std::size_t>(c + M)]; };
    b.emit(CanonicalEquation::add(at(0), at(0), at(0)));
    if (M >= 1) b.emit(CanonicalEquation::unit(at(1)));
    for (long c = 1; c < M; ++c) b.emit(CanonicalEquation::add(at(c), at(1), at(c + 1)));
    for (long c = 1; c <= M; ++c) b.emit(CanonicalEquation::add(at(-c), at(c), at(0)));
    return var;
}

void add_full_h(CompilationResult& r, std::size_t cap) {
    const std::size_t N = r.var_meaning.size();
    if (N > cap) throw DomainError("full-h mode limited to " + std::to_string(cap) + " variables");
    std::map<Polynomial, std::vector<std::uint32_t>> by_meaning;
    for (std::size_t i = 0; i < N; ++i) by_meaning[r.var_meaning[i]].push_back(static_cast<std::uint32_t>(i + 1));
    Polynomial one = Polynomial::constant(r.n, 1);
    if (auto it = by_meaning.find(one); it != by_meaning.end())
        for (auto v : it->second) r.canonical.insert(CanonicalEquation::unit(v));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i; j < N; ++j) {
            auto a = static_cast<std::uint32_t>(i + 1), b = static_cast<std::uint32_t>(j + 1);
            if (auto it = by_meaning.find(r.var_meaning[i] + r.var_meaning[j]); it != by_meaning.end())
                for (auto k : it->second) r.canonical.insert(CanonicalEquation::add(a, b, k));
            if (auto it = by_meaning.find(r.var_meaning[i] * r.var_meaning[j]); it != by_meaning.end())
                for (auto k : it->second) r.canonical.insert(CanonicalEquation::mul(a, b, k));
        }
}

bool is_q_constraint(const CanonicalEquation& e, const std::set<std::uint32_t>& qs) {
    return e.kind == EqKind::Add && e.i == e.j && e.j == e.k && qs.count(e.i);
}

}  // namespace

Profile profile(const PolySystem& sys) {
    if (sys.polys.empty()) throw DomainError("empty polynomial system");
    Profile pr;
    pr.m = sys.polys.size();
    pr.max_coeff = 0;
    pr.degrees.assign(sys.n, 0);
    for (auto& f : sys.polys) {
        if (f.nvars() != sys.n) throw DomainError("variable count mismatch");
        pr.max_coeff = std::max(pr.max_coeff, f.max_abs_coeff());
        for (std::size_t i = 0; i < sys.n; ++i) pr.degrees[i] = std::max(pr.degrees[i], f.degree_in(i));
    }
    for (unsigned d : pr.degrees)
        if (d == 0) throw DomainError("variable degree zero violates standing assumption");
    return pr;
}

BigInt count_T(const BigInt& max_coeff, const std::vector<unsigned>& degrees, std::uint64_t exponent_cap) {
    BigInt prod = 1;
    for (unsigned d : degrees) prod *= d + 1;
    if (prod > BigInt(std::to_string(exponent_cap))) throw Error("bound overflow");
    return pow_int(2 * max_coeff + 1, prod.get_ui());
}

NewVarCount count_new_vars(const BigInt& M, std::size_t m, std::size_t n, const std::vector<unsigned>& degrees) {
    BigInt prod = 1;
    for (unsigned d : degrees) prod *= d + 1;
    NewVarCount c;
    BigInt bm(std::to_string(m)), bn(std::to_string(n));
    c.p = 2 * (M - bm) - bn + (2 * bm + 1) * prod;
    c.constants = 2 * M + 1;
    c.monomials = prod - 1 - bn;
    c.scaled = bm * (prod - 1);
    c.partial_sums = bm * (prod - 1);
    if (c.constants + c.monomials + c.scaled + c.partial_sums != c.p) throw Error("step tallies disagree with p");
    return c;
}

nlohmann::json CompilationResult::summary() const {
    return {{"n", n},
            {"p", p.get_str()},
            {"total_vars", total_vars},
            {"distinct_meanings", distinct_meanings},
            {"equations", canonical.size()},
            {"q", q},
            {"coarse", coarse}};
}

CompilationResult compile(const PolySystem& sys, const CompileOptions& opt) {
    Profile pr = profile(sys);
    NewVarCount count = count_new_vars(pr.max_coeff, pr.m, sys.n, pr.degrees);
    if (!pr.max_coeff.fits_slong_p() || pr.max_coeff > 100000)
        throw DomainError("coefficients too large for the constant chain");
    const long M = pr.max_coeff.get_si();
    const std::size_t n = sys.n;

    Builder b(n);
    auto cvar = constants(b, M);
    auto const_var = [&](const BigInt& c) { return cvar[static_cast<std::size_t>(c.get_si() + M)]; };

    auto all = box(pr.degrees);
    std::vector<Exponents> L(all.begin() + 1, all.end());  // drops the zero vector
    std::map<Exponents, std::uint32_t> mono_var;
    for (std::size_t i = 0; i < n; ++i) {
        Exponents e(n, 0);
        e[i] = 1;
        mono_var[e] = static_cast<std::uint32_t>(i + 1);
    }
    // L is increasing in the lexicographic order, so every divisor comes first.
    for (auto& s : L) {
        if (degree(s) < 2) continue;
        std::uint32_t v = b.fresh(Polynomial::monomial(s, 1));
        auto [lower, xi] = largest_divisor(s);
        b.emit(CanonicalEquation::mul(mono_var.at(lower), static_cast<std::uint32_t>(xi + 1), v));
        mono_var[s] = v;
    }

    std::vector<std::uint32_t> q;
    std::vector<std::vector<std::uint32_t>> scaled(sys.polys.size());
    for (std::size_t j = 0; j < sys.polys.size(); ++j)
        for (auto& s : L) {
            BigInt a = sys.polys[j].coeff(s);
            std::uint32_t v = b.fresh(Polynomial::monomial(s, a));
            b.emit(CanonicalEquation::mul(const_var(a), mono_var.at(s), v));
            scaled[j].push_back(v);
        }
    for (std::size_t j = 0; j < sys.polys.size(); ++j) {
        const auto& f = sys.polys[j];
        BigInt a0 = f.coeff(Exponents(n, 0));
        std::uint32_t prev = const_var(a0);
        Polynomial acc = Polynomial::constant(n, a0);
        for (std::size_t t = 0; t < L.size(); ++t) {
            acc = acc + b.meaning(scaled[j][t]);
            std::uint32_t v = b.fresh(acc);
            b.emit(CanonicalEquation::add(prev, scaled[j][t], v));
            prev = v;
        }
        q.push_back(prev);
    }
    for (auto v : q) b.emit(CanonicalEquation::add(v, v, v));

    if (BigInt(std::to_string(b.size())) != BigInt(std::to_string(n)) + count.p)
        throw Error("emitted variable count differs from n + p");
    CompilationResult r = b.finish(std::move(q));
    r.p = count.p;
    if (opt.full_h) add_full_h(r, opt.full_h_cap);
    return r;
}

CompilationResult compile_coarse(const PolySystem& sys, const CompileOptions& opt) {
    Profile pr = profile(sys);
    BigInt total = count_T(pr.max_coeff, pr.degrees);
    if (total > BigInt(std::to_string(opt.coarse_cap))) throw DomainError("coarse construction too large");
    const long M = pr.max_coeff.get_si();
    const std::size_t n = sys.n;
    const std::size_t base = static_cast<std::size_t>(2 * M + 1);
    auto mons = box(pr.degrees);  // position 0 is the constant monomial
    const std::size_t P = mons.size();
    const std::size_t N = total.get_ui();

    // Polynomials of T are coded by their coefficient digits (shifted by M).
    auto code_of = [&](const std::vector<long>& coef) {
        std::size_t c = 0;
        for (std::size_t t = P; t-- > 0;) c = c * base + static_cast<std::size_t>(coef[t] + M);
        return c;
    };
    auto digits_of = [&](std::size_t c) {
        std::vector<long> coef(P);
        for (std::size_t t = 0; t < P; ++t) {
            coef[t] = static_cast<long>(c % base) - M;
            c /= base;
        }
        return coef;
    };
    auto mono_pos = [&](const Exponents& e) {
        return static_cast<std::size_t>(std::lower_bound(mons.begin(), mons.end(), e) - mons.begin());
    };

    std::vector<std::uint32_t> var_of(N, 0);
    Builder b(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<long> coef(P, 0);
        Exponents e(n, 0);
        e[i] = 1;
        coef[mono_pos(e)] = 1;
        var_of[code_of(coef)] = static_cast<std::uint32_t>(i + 1);
    }
    for (std::size_t c = 0; c < N; ++c) {
        if (var_of[c]) continue;
        auto coef = digits_of(c);
        Polynomial meaning(n);
        for (std::size_t t = 0; t < P; ++t) meaning.add_term(mons[t], coef[t]);
        var_of[c] = b.fresh(std::move(meaning));
    }
    auto var = [&](const std::vector<long>& coef) { return var_of[code_of(coef)]; };
    auto constant_coef = [&](long v) {
        std::vector<long> coef(P, 0);
        coef[0] = v;
        return coef;
    };

    for (std::size_t c = 0; c < N; ++c) {
        auto coef = digits_of(c);
        std::vector<std::size_t> support;
        for (std::size_t t = 0; t < P; ++t)
            if (coef[t]) support.push_back(t);
        std::uint32_t v = var_of[c];
        if (v <= n) continue;
        if (support.empty()) {
            b.emit(CanonicalEquation::add(v, v, v));
        } else if (support.size() == 1 && support[0] == 0) {
            long a = coef[0];
            if (a == 1) b.emit(CanonicalEquation::unit(v));
            else if (a > 1) b.emit(CanonicalEquation::add(var(constant_coef(a - 1)), var(constant_coef(1)), v));
            else b.emit(CanonicalEquation::add(v, var(constant_coef(-a)), var(constant_coef(0))));
        } else if (support.size() == 1) {
            std::size_t t = support[0];
            long a = coef[t];
            if (a != 1) {
                std::vector<long> mono(P, 0);
                mono[t] = 1;
                b.emit(CanonicalEquation::mul(var(constant_coef(a)), var(mono), v));
            } else {
                // x^s = x^{s - e_i} * x_i for the lexicographically largest divisor.
                auto [chosen, chosen_i] = largest_divisor(mons[t]);
                std::vector<long> lower(P, 0);
                lower[mono_pos(chosen)] = 1;
                b.emit(CanonicalEquation::mul(var(lower), static_cast<std::uint32_t>(chosen_i + 1), v));
            }
        } else {
            std::size_t lead = support.back();
            std::vector<long> head(P, 0), rest = coef;
            head[lead] = coef[lead];
            rest[lead] = 0;
            b.emit(CanonicalEquation::add(var(head), var(rest), v));
        }
    }

    std::vector<std::uint32_t> q;
    for (auto& f : sys.polys) {
        std::vector<long> coef(P, 0);
        for (auto& [e, c] : f.terms()) coef[mono_pos(e)] = c.get_si();
        q.push_back(var(coef));
    }
    for (auto v : q) b.emit(CanonicalEquation::add(v, v, v));
    if (b.size() != N) throw Error("emitted variable count differs from card T");
    CompilationResult r = b.finish(std::move(q));
    r.p = total - BigInt(std::to_string(n));
    r.coarse = true;
    if (opt.full_h) add_full_h(r, opt.full_h_cap);
    return r;
}

bool structurally_grounded(const CompilationResult& r) {
    const std::size_t N = r.total_vars;
    std::set<std::uint32_t> qs(r.q.begin(), r.q.end());
    std::vector<char> known(N + 1, 0);
    for (std::size_t i = 1; i <= r.n; ++i) known[i] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& e : r.canonical.equations()) {
            if (is_q_constraint(e, qs)) continue;
            auto learn = [&](std::uint32_t v) {
                if (!known[v]) {
                    known[v] = 1;
                    changed = true;
                }
            };
            switch (e.kind) {
                case EqKind::Unit: learn(e.i); break;
                case EqKind::Add:
                    if (e.i == e.j && e.j == e.k) learn(e.i);
                    else if (e.i == e.j) {
                        if (known[e.i]) learn(e.k);
                        else if (known[e.k]) learn(e.i);
                    } else {
                        int count = known[e.i] + known[e.j] + known[e.k];
                        if (count >= 2) {
                            learn(e.i);
                            learn(e.j);
                            learn(e.k);
                        }
                    }
                    break;
                case EqKind::Mul:
                    if (known[e.i] && known[e.j]) learn(e.k);
                    break;
            }
        }
    }
    for (std::size_t i = 1; i <= N; ++i)
        if (!known[i]) return false;
    return true;
}

bool identities_hold(const CompilationResult& r) {
    std::set<std::uint32_t> qs(r.q.begin(), r.q.end());
    const auto& mean = r.var_meaning;
    Polynomial one = Polynomial::constant(r.n, 1);
    for (const auto& e : r.canonical.equations()) {
        if (is_q_constraint(e, qs)) continue;
        switch (e.kind) {
            case EqKind::Unit:
                if (mean[e.i - 1] != one) return false;
                break;
            case EqKind::Add:
                if (mean[e.i - 1] + mean[e.j - 1] != mean[e.k - 1]) return false;
                break;
            case EqKind::Mul:
                if (mean[e.i - 1] * mean[e.j - 1] != mean[e.k - 1]) return false;
                break;
        }
    }
    return true;
}

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json fails = nlohmann::json::array();
    for (auto& f : failures) {
        std::vector<std::string> a;
        for (auto& v : f.assignment) a.push_back(to_string(v));
        fails.push_back({{"reason", f.reason}, {"assignment", a}});
    }
    return {{"ok", ok()},
            {"structural_ok", structural_ok},
            {"identities_ok", identities_ok},
            {"q_count_ok", q_count_ok},
            {"trials", trials},
            {"failures", fails}};
}

VerifyReport verify_compilation(const PolySystem& sys, const CompilationResult& r, std::size_t trials,
                                std::uint64_t seed, unsigned jobs) {
    if (trials == 0) throw DomainError("trials must be at least 1");
    VerifyReport rep;
    rep.trials = trials;
    rep.structural_ok = structurally_grounded(r);
    rep.identities_ok = identities_hold(r);
    std::set<std::uint32_t> qs(r.q.begin(), r.q.end());
    std::size_t q_eqs = 0;
    for (auto& e : r.canonical.equations()) q_eqs += is_q_constraint(e, qs);
    rep.q_count_ok = q_eqs == qs.size() && r.q.size() == sys.polys.size();

    std::vector<std::optional<VerifyFailure>> slots(trials);
    parallel_for(trials, jobs, [&](std::size_t t) {
        Rng rng(trial_seed(seed, t));
        std::vector<BigRational> x;
        for (std::size_t i = 0; i < sys.n; ++i) x.push_back(rng.rational(100, 100));
        std::vector<BigRational> ext;
        ext.reserve(r.total_vars);
        for (auto& mpoly : r.var_meaning) ext.push_back(mpoly.eval(x));
        for (const auto& e : r.canonical.equations()) {
            if (is_q_constraint(e, qs)) continue;
            if (!evaluate(e, std::span<const BigRational>(ext))) {
                slots[t] = VerifyFailure{"identity " + e.str() + " fails", x};
                return;
            }
        }
        bool all_zero = std::all_of(sys.polys.begin(), sys.polys.end(),
                                    [&](const Polynomial& f) { return f.eval(x) == 0; });
        bool canon_holds = satisfies(r.canonical, std::span<const BigRational>(ext));
        if (all_zero != canon_holds) slots[t] = VerifyFailure{"zero sets disagree", x};
    });
    for (auto& s : slots)
        if (s) rep.failures.push_back(std::move(*s));
    return rep;
}

PolySystem random_poly_system(Rng& rng, const RandomSystemLimits& lim) {
    PolySystem sys;
    sys.n = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(lim.max_n)));
    const std::size_t m = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(lim.max_m)));
    const long M = static_cast<long>(rng.between(1, lim.max_coeff));
    std::vector<unsigned> d(sys.n);
    for (auto& di : d) di = static_cast<unsigned>(rng.between(1, lim.max_degree));
    auto mons = box(d);
    auto nonzero = [&] {
        long c = static_cast<long>(rng.between(1, M));
        return rng.below(2) ? c : -c;
    };
    for (std::size_t j = 0; j < m; ++j) {
        Polynomial f(sys.n);
        for (auto& e : mons) {
            long c = static_cast<long>(rng.between(-M, M));
            if (c != 0) f.add_term(e, c);
        }
        sys.polys.push_back(std::move(f));
    }
    Polynomial& first = sys.polys[rng.below(m)];
    for (std::size_t i = 0; i < sys.n; ++i) {
        Exponents e(sys.n, 0);
        e[i] = d[i];
        if (first.coeff(e) == 0) first.add_term(e, nonzero());
    }
    if (first.max_abs_coeff() < M) {
        Exponents e(sys.n, 0);
        first.add_term(e, -first.coeff(e) + (rng.below(2) ? M : -M));
    }
    return sys;
}

}  // namespace canon::compiler
