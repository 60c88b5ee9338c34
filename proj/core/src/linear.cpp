#include "canon/linear.hpp"

#include "canon/bounds.hpp"
#include "canon/error.hpp"
#include "canon/parallel.hpp"
#include "canon/rng.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

namespace canon::linear {

using algebra::bareiss_det;
using algebra::rref;

namespace {

std::vector<BigRational> equation_row(const CanonicalEquation& e, std::size_t n) {
    std::vector<BigRational> row(n + 1, BigRational(0));
    switch (e.kind) {
        case EqKind::Unit:
            row[e.i - 1] += 1;
            row[n] = 1;
            break;
        case EqKind::Add:
            row[e.i - 1] += 1;
            row[e.j - 1] += 1;
            row[e.k - 1] -= 1;
            break;
        case EqKind::Mul: throw DomainError("multiplication in an additive system");
    }
    return row;
}

AffineDescription describe(const RatMatrix& aug) {
    const std::size_t n = aug.cols() - 1;
    auto r = rref(aug);
    AffineDescription d;
    if (!r.pivots.empty() && r.pivots.back() == n) return d;
    std::vector<char> is_pivot(n, 0);
    for (auto p : r.pivots) is_pivot[p] = 1;
    d.point.assign(n, BigRational(0));
    for (std::size_t row = 0; row < r.pivots.size(); ++row) d.point[r.pivots[row]] = r.m(row, n);
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<BigRational> v(n, BigRational(0));
        v[f] = 1;
        for (std::size_t row = 0; row < r.pivots.size(); ++row) v[r.pivots[row]] = -r.m(row, f);
        d.basis.push_back(std::move(v));
    }
    d.kind = d.basis.empty() ? AffineKind::Point : AffineKind::Subspace;
    return d;
}

BigRational inf_norm(const std::vector<BigRational>& x) {
    BigRational m = 0;
    for (auto& v : x)
        if (abs(v) > m) m = abs(v);
    return m;
}

std::vector<std::string> strings(const std::vector<BigRational>& v) {
    std::vector<std::string> out;
    for (auto& x : v) out.push_back(to_string(x));
    return out;
}

}  // namespace

RatMatrix augmented_matrix(const CanonicalSystem& sys) {
    const std::size_t n = sys.arity();
    RatMatrix m(0, n + 1);
    for (auto& e : sys.equations()) m.append_row(equation_row(e, n));
    return m;
}

RatMatrix substituted_rows(const CanonicalSystem& sys) {
    if (!sys.contains(CanonicalEquation::unit(1))) throw DomainError("x1 = 1 required");
    const std::size_t n = sys.arity();
    RatMatrix m(0, n);
    for (auto& e : sys.equations()) {
        if (e == CanonicalEquation::unit(1)) continue;
        auto full = equation_row(e, n);
        std::vector<BigRational> row(full.begin() + 1, full.end());
        row.back() = full[n] - full[0];
        m.append_row(row);
    }
    return m;
}

AffineDescription solve_W(const CanonicalSystem& sys) {
    if (sys.has_mul()) throw DomainError("multiplication in an additive system");
    return describe(augmented_matrix(sys));
}

Refinement refine_to_point(const CanonicalSystem& sys) {
    CanonicalSystem cur = sys;
    Refinement out;
    for (;;) {
        auto d = solve_W(cur);
        if (d.kind == AffineKind::Inconsistent) throw DomainError("inconsistent system");
        if (d.kind == AffineKind::Point) {
            out.point = d.point;
            return out;
        }
        std::size_t m = 0;
        for (std::size_t i = 0; i < sys.arity() && !m; ++i)
            for (auto& v : d.basis)
                if (v[i] != 0) {
                    m = i + 1;
                    break;
                }
        auto step = CanonicalEquation::add(static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(m),
                                           static_cast<std::uint32_t>(m));
        cur.insert(step);
        out.zeroed.push_back(m);
    }
}

Theorem11Result theorem11_check(const CanonicalSystem& sys) {
    Theorem11Result r;
    r.point = refine_to_point(sys).point;
    Thm11Bound b(static_cast<unsigned>(sys.arity()));
    r.ok = std::all_of(r.point.begin(), r.point.end(), [&](const BigRational& v) { return b.admits(v); });
    return r;
}

std::optional<std::vector<BigInt>> integer_solution(const RatMatrix& A, const std::vector<BigRational>& b) {
    const std::size_t m = A.rows(), n = A.cols();
    std::vector<std::vector<BigInt>> H(m, std::vector<BigInt>(n));
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            if (A(r, c).get_den() != 1) throw DomainError("integer matrix required");
            H[r][c] = A(r, c).get_num();
        }
    std::vector<std::vector<BigInt>> U(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) U[i][i] = 1;
    // new col_a = s*a + t*b, new col_b = -(B/g)*a + (A/g)*b
    auto combine = [&](std::size_t ca, std::size_t cb, const BigInt& s, const BigInt& t, const BigInt& u,
                       const BigInt& v) {
        for (auto* M : {&H, &U})
            for (auto& row : *M) {
                BigInt x = row[ca], y = row[cb];
                row[ca] = s * x + t * y;
                row[cb] = u * x + v * y;
            }
    };
    std::vector<std::ptrdiff_t> pivot_of_row(m, -1);
    std::size_t col = 0;
    for (std::size_t r = 0; r < m && col < n; ++r) {
        for (std::size_t c = col + 1; c < n; ++c) {
            if (H[r][c] == 0) continue;
            BigInt a = H[r][col], bb = H[r][c], g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), bb.get_mpz_t());
            combine(col, c, s, t, BigInt(-bb / g), BigInt(a / g));
        }
        if (H[r][col] != 0) pivot_of_row[r] = static_cast<std::ptrdiff_t>(col++);
    }
    std::vector<BigInt> y(n, 0);
    for (std::size_t r = 0; r < m; ++r) {
        if (b[r].get_den() != 1) throw DomainError("integer right side required");
        BigInt s = b[r].get_num();
        for (std::size_t c = 0; c < n; ++c)
            if (static_cast<std::ptrdiff_t>(c) != pivot_of_row[r]) s -= H[r][c] * y[c];
        if (pivot_of_row[r] < 0) {
            if (s != 0) return std::nullopt;
            continue;
        }
        auto pc = static_cast<std::size_t>(pivot_of_row[r]);
        if (!mpz_divisible_p(s.get_mpz_t(), H[r][pc].get_mpz_t())) return std::nullopt;
        y[pc] = s / H[r][pc];
    }
    std::vector<BigInt> x(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < n; ++c) x[i] += U[i][c] * y[c];
    return x;
}

Theorem12Result theorem12_integer_check(const CanonicalSystem& sys) {
    const std::size_t n = sys.arity();
    Theorem12Result res;
    auto d = solve_W(sys);
    res.rational_consistent = d.kind != AffineKind::Inconsistent;
    if (!res.rational_consistent) return res;

    RatMatrix aug = augmented_matrix(sys);
    RatMatrix A(0, n);
    std::vector<BigRational> b;
    for (std::size_t r = 0; r < aug.rows(); ++r) {
        auto row = aug.row(r);
        b.push_back(row.back());
        row.pop_back();
        A.append_row(row);
    }
    auto z = integer_solution(A, b);
    res.integer_consistent = z.has_value();
    if (!z) return res;

    // Largest maximal minor over an independent set of rows.
    RatMatrix indep(0, n + 1);
    for (std::size_t r = 0; r < aug.rows(); ++r) {
        RatMatrix trial = indep;
        trial.append_row(aug.row(r));
        if (algebra::rank(trial) > indep.rows()) indep = trial;
    }
    const std::size_t m = indep.rows();
    if (m == 0) {
        res.delta = BigInt(0);
    } else {
        std::vector<int> pick(n + 1, 0);
        std::fill(pick.begin(), pick.begin() + static_cast<long>(m), 1);
        BigInt best = 0;
        std::uint64_t combos = 0;
        do {
            if (++combos > 200000) {
                best = -1;
                break;
            }
            RatMatrix sq(m, m);
            std::size_t cc = 0;
            for (std::size_t c = 0; c <= n; ++c)
                if (pick[c]) {
                    for (std::size_t r = 0; r < m; ++r) sq(r, cc) = indep(r, c);
                    ++cc;
                }
            BigInt v = BigRational(abs(bareiss_det(sq))).get_num();
            if (v > best) best = v;
        } while (std::prev_permutation(pick.begin(), pick.end()));
        if (best >= 0) res.delta = best;
    }

    // Free variables range over [-B, B]; pivots follow.
    Thm11Bound bound(static_cast<unsigned>(n));
    const long B = bound.floor_value().get_si();
    auto r = rref(aug);
    std::vector<char> is_pivot(n, 0);
    for (auto p : r.pivots) is_pivot[p] = 1;
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < n; ++i)
        if (!is_pivot[i]) free.push_back(i);
    std::vector<long> order{0};
    for (long v = 1; v <= B; ++v) {
        order.push_back(v);
        order.push_back(-v);
    }
    std::vector<BigInt> x(n, 0);
    std::uint64_t budget = 20'000'000;
    std::function<bool(std::size_t)> dfs = [&](std::size_t depth) -> bool {
        if (budget-- == 0) return false;
        if (depth == free.size()) {
            for (std::size_t row = 0; row < r.pivots.size(); ++row) {
                BigRational v = r.m(row, n);
                for (auto f : free) v -= r.m(row, f) * BigRational(x[f]);
                if (v.get_den() != 1 || abs(v.get_num()) > B) return false;
                x[r.pivots[row]] = v.get_num();
            }
            return true;
        }
        for (long v : order) {
            x[free[depth]] = v;
            if (dfs(depth + 1)) return true;
        }
        return false;
    };
    if (dfs(0)) {
        res.point = x;
        res.ok = true;
    } else {
        res.point = *z;
        res.ok = std::all_of(z->begin(), z->end(), [&](const BigInt& v) { return bound.admits(BigRational(v)); });
    }
    return res;
}

nlohmann::json Conj3Report::to_json() const {
    nlohmann::json v = nlohmann::json::array(), c = nlohmann::json::array();
    for (auto& x : violations) v.push_back(strings(x));
    for (auto& x : contradictions) c.push_back(strings(x));
    return {{"n", n},
            {"trials", trials},
            {"seed", seed},
            {"max_norm", to_string(max_norm)},
            {"bound", to_string(bound_conj3(n))},
            {"violations", v},
            {"theorem11_contradictions", c},
            {"start_row", "x1 = 1"}};
}

Conj3Report probe_conj3(unsigned n, std::size_t iterations, std::uint64_t seed, unsigned jobs) {
    if (n < 2) throw DomainError("n must be at least 2");
    if (iterations == 0) throw DomainError("iterations must be at least 1");
    std::vector<std::vector<BigRational>> sols(iterations);
    parallel_for(iterations, jobs, [&](std::size_t t) {
        Rng rng(trial_seed(seed, t));
        // Echelon copy for rank tests, raw rows for the solve.
        std::vector<std::vector<BigRational>> ech, raw;
        std::vector<std::size_t> lead;
        auto try_add = [&](std::vector<BigRational> row) {
            auto orig = row;
            for (std::size_t e = 0; e < ech.size(); ++e) {
                if (row[lead[e]] == 0) continue;
                BigRational f = row[lead[e]] / ech[e][lead[e]];
                for (std::size_t c = 0; c < n; ++c) row[c] -= f * ech[e][c];
            }
            auto it = std::find_if(row.begin(), row.end(), [](const BigRational& v) { return v != 0; });
            if (it == row.end()) return;
            lead.push_back(static_cast<std::size_t>(it - row.begin()));
            ech.push_back(std::move(row));
            raw.push_back(std::move(orig));
        };
        std::vector<BigRational> e1(n, BigRational(0));
        e1[0] = 1;
        try_add(e1);
        while (raw.size() < n) {
            std::vector<BigRational> row(n, BigRational(0));
            row[rng.below(n)] += 1;
            row[rng.below(n)] += 1;
            row[rng.below(n)] -= 1;
            try_add(std::move(row));
        }
        RatMatrix A(0, n);
        for (auto& r : raw) A.append_row(r);
        std::vector<BigRational> rhs(n, BigRational(0));
        rhs[0] = 1;
        sols[t] = algebra::cramer_solve(A, rhs);
    });
    Conj3Report rep;
    rep.n = n;
    rep.trials = iterations;
    rep.seed = seed;
    rep.max_norm = 1;
    BigRational c3(bound_conj3(n));
    Thm11Bound t11(n);
    for (auto& x : sols) {
        BigRational nm = inf_norm(x);
        if (nm > rep.max_norm) rep.max_norm = nm;
        if (nm > c3) rep.violations.push_back(x);
        if (!t11.admits(nm)) rep.contradictions.push_back(x);
    }
    return rep;
}

std::vector<std::vector<int>> pattern_rows(unsigned n) {
    std::vector<std::vector<int>> out;
    for (unsigned a = 0; a < n; ++a) {
        std::vector<int> r(n, 0);
        r[a] = 1;
        out.push_back(r);
    }
    for (auto pat : {std::pair{-1, 2}, std::pair{2, -1}})
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = a + 1; b < n; ++b) {
                std::vector<int> r(n, 0);
                r[a] = pat.first;
                r[b] = pat.second;
                out.push_back(r);
            }
    for (auto pat : {std::array{-1, 1, 1}, std::array{1, -1, 1}, std::array{1, 1, -1}})
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = a + 1; b < n; ++b)
                for (unsigned c = b + 1; c < n; ++c) {
                    std::vector<int> r(n, 0);
                    r[a] = pat[0];
                    r[b] = pat[1];
                    r[c] = pat[2];
                    out.push_back(r);
                }
    return out;
}

std::vector<long long> column_deleted_minors(const std::vector<std::vector<int>>& rows) {
    const std::size_t k = rows.size();
    const std::size_t n = k + 1;
    std::vector<long long> out;
    long long buf[64];
    for (std::size_t del = 0; del < n; ++del) {
        for (std::size_t r = 0; r < k; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c)
                if (c != del) buf[r * k + cc++] = rows[r].at(c);
        }
        long long d = k == 0 ? 1 : algebra::small_det(buf, static_cast<int>(k));
        out.push_back(d < 0 ? -d : d);
    }
    return out;
}

nlohmann::json Conj4Report::to_json() const {
    return {{"n", n},
            {"matrices", matrices},
            {"max_minor", max_minor},
            {"bound", (1LL << (n - 1))},
            {"violation_count", violation_count},
            {"violations", violations},
            {"mode", exhaustive ? "exhaustive" : "random"}};
}

namespace {

struct Conj4Acc {
    std::uint64_t matrices = 0, violation_count = 0;
    long long max_minor = 0;
    std::vector<std::vector<std::vector<int>>> violations;

    void take(const std::vector<std::vector<int>>& m, long long bound) {
        ++matrices;
        for (long long v : column_deleted_minors(m)) {
            max_minor = std::max(max_minor, v);
            if (v > bound) {
                if (violations.size() < 10) violations.push_back(m);
                ++violation_count;
                break;
            }
        }
    }
    void merge(const Conj4Acc& o) {
        matrices += o.matrices;
        violation_count += o.violation_count;
        max_minor = std::max(max_minor, o.max_minor);
        for (auto& v : o.violations)
            if (violations.size() < 10) violations.push_back(v);
    }
};

}  // namespace

Conj4Report conj4_exhaustive(unsigned n, unsigned jobs) {
    if (n < 2) throw DomainError("n must be at least 2");
    if (n > kConj4ExhaustiveCap) throw DomainError("exhaustive scan capped at n = 5; use random mode");
    const auto rows = pattern_rows(n);
    const std::size_t R = rows.size(), k = n - 1;
    const long long bound = 1LL << (n - 1);
    std::vector<Conj4Acc> acc(R);
    parallel_for(R, jobs, [&](std::size_t first) {
        std::vector<std::size_t> idx(k, 0);
        idx[0] = first;
        std::vector<std::vector<int>> m(k);
        for (;;) {
            for (std::size_t r = 0; r < k; ++r) m[r] = rows[idx[r]];
            acc[first].take(m, bound);
            std::size_t r = k;
            while (r > 1) {
                --r;
                if (++idx[r] < R) break;
                idx[r] = 0;
                if (r == 1) return;
            }
            if (k == 1) return;
        }
    });
    Conj4Acc total;
    for (auto& a : acc) total.merge(a);
    Conj4Report rep;
    rep.n = n;
    rep.matrices = total.matrices;
    rep.max_minor = total.max_minor;
    rep.violations = total.violations;
    rep.violation_count = total.violation_count;
    return rep;
}

Conj4Report conj4_random(unsigned n, std::uint64_t iterations, std::uint64_t seed) {
    if (n < 2 || n > 15) throw DomainError("n must lie in [2, 15]");
    const auto rows = pattern_rows(n);
    const long long bound = 1LL << (n - 1);
    Rng rng(seed);
    Conj4Acc acc;
    std::vector<std::vector<int>> m(n - 1);
    for (std::uint64_t it = 0; it < iterations; ++it) {
        for (auto& r : m) r = rows[rng.below(rows.size())];
        acc.take(m, bound);
    }
    Conj4Report rep;
    rep.n = n;
    rep.exhaustive = false;
    rep.matrices = acc.matrices;
    rep.max_minor = acc.max_minor;
    rep.violations = acc.violations;
    rep.violation_count = acc.violation_count;
    return rep;
}

nlohmann::json Obs4Report::to_json() const {
    nlohmann::json pts = nlohmann::json::array(), over = nlohmann::json::array();
    for (auto& p : points) pts.push_back(strings(p));
    for (auto& p : over_bound) over.push_back(strings(p));
    return {{"n", n},
            {"subsets", subsets},
            {"unique_solution_subsets", unique},
            {"max_abs", to_string(max_abs)},
            {"bound", to_string(bound_conj3(n))},
            {"points", pts},
            {"over_bound", over},
            {"replacement_failures", replacement_failures},
            {"ok", ok()}};
}

Obs4Report verify_obs4(unsigned n) {
    if (n < 1 || n > 4) throw DomainError("n must lie in [1, 4]");
    const auto W = universe_equations(n, Universe::W);
    Obs4Report rep;
    rep.n = n;
    rep.max_abs = 0;
    std::set<std::vector<BigRational>> seen;
    std::vector<int> pick(W.size(), 0);
    std::fill(pick.begin(), pick.begin() + n, 1);
    do {
        ++rep.subsets;
        RatMatrix aug(0, n + 1);
        for (std::size_t i = 0; i < W.size(); ++i)
            if (pick[i]) aug.append_row(equation_row(W[i], n));
        auto d = describe(aug);
        if (d.kind != AffineKind::Point) continue;
        ++rep.unique;
        seen.insert(d.point);
    } while (std::prev_permutation(pick.begin(), pick.end()));

    const BigRational bound(bound_conj3(n));
    for (auto& x : seen) {
        BigRational nm = inf_norm(x);
        if (nm > rep.max_abs) rep.max_abs = nm;
        if (nm > bound) rep.over_bound.push_back(x);
        // A replacement drawn from {0, 1, 2, 1/2, x_i} within the bound.
        CanonicalSystem S = satisfied_subset(std::span<const BigRational>(x), Universe::W);
        std::vector<std::vector<BigRational>> cand(n);
        for (unsigned i = 0; i < n; ++i) {
            for (BigRational v : {BigRational(0), BigRational(1), BigRational(2), BigRational(1, 2), x[i]})
                if (abs(v) <= bound && std::find(cand[i].begin(), cand[i].end(), v) == cand[i].end())
                    cand[i].push_back(v);
        }
        std::vector<BigRational> y(n);
        std::function<bool(unsigned)> search = [&](unsigned i) -> bool {
            if (i == n) return satisfies(S, std::span<const BigRational>(y));
            for (auto& v : cand[i]) {
                y[i] = v;
                if (search(i + 1)) return true;
            }
            return false;
        };
        if (!search(0)) ++rep.replacement_failures;
    }
    rep.points.assign(seen.begin(), seen.end());
    return rep;
}

}  // namespace canon::linear
