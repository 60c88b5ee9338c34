#include "canon/solve.hpp"

#include "canon/error.hpp"
#include "canon/matrix.hpp"
#include "canon/rng.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace canon::algebra {

namespace {

using Vec = std::vector<BigRational>;

// Z[x]/I in the basis of standard monomials.
class Quotient {
public:
    explicit Quotient(GroebnerBasis gb) : gb_(std::move(gb)), basis_(standard_monomials(gb_)) {}

    std::size_t dim() const { return basis_.size(); }
    std::size_t nvars() const { return gb_.nvars; }
    const GroebnerBasis& gb() const { return gb_; }

    Vec coords(const MultiPoly& f) const {
        MultiPoly r = normal_form(f.with_order(gb_.order), gb_.gens);
        Vec v(basis_.size(), BigRational(0));
        for (const auto& t : r.terms()) v[index_of(t.m)] = t.c;
        return v;
    }

    // Columns are coords(g * b_j).
    std::vector<Vec> mult_matrix(const MultiPoly& g) const {
        std::vector<Vec> cols;
        for (const auto& b : basis_) cols.push_back(coords(g.mul_term(b, 1)));
        return cols;
    }

    Vec one() const {
        Vec v(basis_.size(), BigRational(0));
        v[index_of(Monomial{})] = 1;
        return v;
    }

private:
    std::size_t index_of(const Monomial& m) const {
        auto it = std::lower_bound(basis_.begin(), basis_.end(), m, [&](const Monomial& a, const Monomial& b) {
            return compare(a, b, gb_.order, gb_.nvars) < 0;
        });
        if (it == basis_.end() || !(*it == m)) throw Error("normal form left the standard basis");
        return static_cast<std::size_t>(it - basis_.begin());
    }

    GroebnerBasis gb_;
    std::vector<Monomial> basis_;
};

Vec apply_cols(const std::vector<Vec>& cols, const Vec& v) {
    Vec out(cols.empty() ? 0 : cols[0].size(), BigRational(0));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (v[j] == 0) continue;
        for (std::size_t r = 0; r < out.size(); ++r)
            if (cols[j][r] != 0) out[r] += v[j] * cols[j][r];
    }
    return out;
}

struct Krylov {
    UPoly minimal;
    std::vector<Vec> powers;  // v_0 .. v_{deg-1}
};

// Minimal polynomial of the multiplication operator on the element 1.
Krylov krylov(const std::vector<Vec>& op, const Vec& start) {
    struct Row {
        Vec r, c;
        std::size_t pivot;
    };
    std::vector<Row> rows;
    Krylov out;
    Vec v = start;
    for (std::size_t k = 0;; ++k) {
        Vec r = v, c(k + 1, BigRational(0));
        c[k] = 1;
        for (auto& row : rows) {
            if (r[row.pivot] == 0) continue;
            BigRational f = r[row.pivot] / row.r[row.pivot];
            for (std::size_t i = 0; i < r.size(); ++i)
                if (row.r[i] != 0) r[i] -= f * row.r[i];
            for (std::size_t i = 0; i < row.c.size(); ++i) c[i] -= f * row.c[i];
        }
        std::size_t pivot = 0;
        while (pivot < r.size() && r[pivot] == 0) ++pivot;
        if (pivot == r.size()) {
            out.minimal = UPoly(c);
            return out;
        }
        rows.push_back({r, c, pivot});
        out.powers.push_back(v);
        v = apply_cols(op, v);
    }
}

// Roots of a square-free factor with exact values where the root is rational
// or quadratic over Q.
struct IsolatedRoots {
    std::vector<RootDisk> disks;
    std::vector<std::optional<QuadExt>> exact;
};

bool quad_in_disk(const QuadExt& v, const RootDisk& d) {
    // |v − c|² <= R² evaluated exactly.
    const BigRational& R = d.radius;
    if (v.is_rational()) {
        BigRational dr = v.a() - d.center.re;
        return dr * dr + d.center.im * d.center.im <= R * R;
    }
    BigRational dr = v.a() - d.center.re;
    if (v.d() > 0) {
        // (dr + b√d)² + im² = dr² + b²d + im² + 2 dr b √d
        BigRational alpha = dr * dr + v.b() * v.b() * BigRational(v.d()) + d.center.im * d.center.im - R * R;
        BigRational beta = 2 * dr * v.b();
        return sign_sqrt_expr(alpha, beta, v.d()) <= 0;
    }
    BigInt e = -v.d();
    // dr² + (b√e − im)² = dr² + b²e + im² − 2 b im √e
    BigRational alpha = dr * dr + v.b() * v.b() * BigRational(e) + d.center.im * d.center.im - R * R;
    BigRational beta = -2 * v.b() * d.center.im;
    return sign_sqrt_expr(alpha, beta, e) <= 0;
}

BigRational round_to(const BigRational& v, const BigInt& L) {
    BigRational s = v * L;
    BigInt num = s.get_num(), den = s.get_den();
    BigInt q;
    BigInt twice = 2 * num + den;
    mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), BigInt(2 * den).get_mpz_t());
    BigRational r(q, L);
    r.canonicalize();
    return r;
}

IsolatedRoots isolate_and_recognize(const UPoly& sqf, const SolveOptions& opt) {
    IsolatedRoots out;
    if (sqf.degree() <= 0) return out;
    UPoly prim = sqf.primitive();
    BigInt L = prim.lead().get_num();
    // Enough precision that rounding L·(sum|product) is unambiguous.
    double maxabs = 1;
    for (int i = 0; i < sqf.degree(); ++i)
        maxabs = std::max(maxabs, std::abs(BigRational(sqf.coeffs()[static_cast<std::size_t>(i)] / sqf.lead()).get_d()));
    unsigned need = static_cast<unsigned>(mpz_sizeinbase(L.get_mpz_t(), 2)) +
                    static_cast<unsigned>(std::ceil(std::log2(2 + maxabs))) + 6;
    unsigned bits = std::max(opt.box_precision_bits, need);
    out.disks = isolate_complex_roots(sqf, bits, opt.max_precision_bits);
    out.exact.assign(out.disks.size(), std::nullopt);
    const std::size_t n = out.disks.size();
    // Rational roots.
    for (std::size_t i = 0; i < n; ++i) {
        const auto& d = out.disks[i];
        if (d.reality != Reality::Real) continue;
        BigRational r = round_to(d.center.re, L);
        if (sqf.eval(r) == 0 && quad_in_disk(QuadExt(r), d)) out.exact[i] = QuadExt(r);
    }
    // Quadratic factors: conjugate pairs and pairs of irrational real roots.
    for (std::size_t i = 0; i < n; ++i) {
        if (out.exact[i]) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (out.exact[j] || out.exact[i]) continue;
            const auto& a = out.disks[i];
            const auto& b = out.disks[j];
            if ((a.reality == Reality::Real) != (b.reality == Reality::Real)) continue;
            ComplexRat s = a.center + b.center, p = a.center * b.center;
            if (a.reality == Reality::NonReal) {
                // Only mirrored disks can hold a conjugate pair.
                if (a.center.im * b.center.im >= 0) continue;
            }
            BigRational S = round_to(s.re, L), T = round_to(p.re, L);
            UPoly quad({T, -S, BigRational(1)});
            if (!divmod(sqf, quad).second.is_zero()) continue;
            BigRational disc = S * S - 4 * T;
            BigInt num = disc.get_num() * disc.get_den();
            BigInt sq, k;
            split_square(num, sq, k);
            if (sq == 1 || sq == 0) continue;  // rational roots handled above
            BigRational half = S / 2;
            BigRational coef(k, 2 * disc.get_den());
            coef.canonicalize();
            QuadExt plus(half, coef, sq), minus(half, -coef, sq);
            if (quad_in_disk(plus, a) && quad_in_disk(minus, b)) {
                out.exact[i] = plus;
                out.exact[j] = minus;
            } else if (quad_in_disk(minus, a) && quad_in_disk(plus, b)) {
                out.exact[i] = minus;
                out.exact[j] = plus;
            }
        }
    }
    return out;
}

// Enclosure disk of h(θ) for θ in the given root disk.
RootDisk enclose(const UPoly& h, const RootDisk& theta) {
    RootDisk out;
    out.center = eval_complex(h, theta.center);
    out.radius = theta.radius == 0 ? BigRational(0) : variation_bound(h, theta.center, theta.radius);
    return out;
}

bool disks_meet(const RootDisk& a, const RootDisk& b) {
    BigRational s = a.radius + b.radius;
    return (a.center - b.center).norm2() <= s * s;
}

struct RadicalData {
    Quotient q;
    std::vector<UPoly> coordinate_polys;  // square-free minimal polynomial per variable
};

RadicalData radicalize(const GroebnerBasis& gb0, const SolveOptions& opt) {
    Quotient q0(gb0);
    const std::size_t n = gb0.nvars;
    std::vector<UPoly> polys;
    std::vector<MultiPoly> extra;
    for (std::size_t i = 0; i < n; ++i) {
        auto op = q0.mult_matrix(MultiPoly::variable(n, i));
        UPoly mp = krylov(op, q0.one()).minimal;
        UPoly s = squarefree_part(mp);
        polys.push_back(s);
        if (s.degree() < mp.degree()) extra.push_back(to_multipoly(s, n, i, MonomialOrder::GrevLex));
    }
    if (extra.empty()) return {std::move(q0), std::move(polys)};
    return {Quotient(extend(gb0, extra, opt.gb_budget)), std::move(polys)};
}

}  // namespace

std::complex<double> Coordinate::approx() const { return exact ? value.to_complex() : box.center.approx(); }

bool Coordinate::abs_le(const BigRational& bound) const {
    if (exact) return value.abs_le(bound);
    BigRational c2 = box.center.norm2();
    BigRational lo = bound - box.radius;
    if (lo >= 0 && c2 <= lo * lo) return true;
    BigRational hi = bound + box.radius;
    if (c2 > hi * hi) return false;
    throw Error("refinement exhausted");
}

bool SolutionPoint::is_real() const {
    return std::all_of(coords.begin(), coords.end(), [](const Coordinate& c) { return c.is_real(); });
}

bool SolutionPoint::exact() const {
    BigInt d = 0;
    for (auto& c : coords) {
        if (!c.exact) return false;
        if (c.value.is_rational()) continue;
        if (d == 0) d = c.value.d();
        else if (d != c.value.d()) return false;
    }
    return true;
}

std::vector<QuadExt> SolutionPoint::exact_values() const {
    if (!exact()) throw DomainError("point is not exact");
    std::vector<QuadExt> v;
    for (auto& c : coords) v.push_back(c.value);
    return v;
}

bool SolutionPoint::is_rational() const {
    return std::all_of(coords.begin(), coords.end(), [](const Coordinate& c) { return c.is_rational(); });
}

std::vector<BigRational> SolutionPoint::rational_values() const {
    if (!is_rational()) throw DomainError("point is not rational");
    std::vector<BigRational> v;
    for (auto& c : coords) v.push_back(c.value.a());
    return v;
}

bool SolutionPoint::abs_le(const BigRational& bound) const {
    return std::all_of(coords.begin(), coords.end(), [&](const Coordinate& c) { return c.abs_le(bound); });
}

std::string SolutionPoint::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ", ";
        if (coords[i].exact) {
            s += coords[i].value.str();
        } else {
            auto z = coords[i].approx();
            char buf[96];
            if (coords[i].box.reality == Reality::Real) std::snprintf(buf, sizeof buf, "~%.12g", z.real());
            else std::snprintf(buf, sizeof buf, "~%.12g%+.12gi", z.real(), z.imag());
            s += buf;
        }
    }
    return s + ")";
}

std::vector<MultiPoly> system_polys(const CanonicalSystem& sys, MonomialOrder order) {
    const std::size_t n = sys.arity();
    std::vector<MultiPoly> out;
    auto x = [&](std::uint32_t i) { return MultiPoly::variable(n, i - 1, order); };
    for (const auto& e : sys.equations()) {
        switch (e.kind) {
            case EqKind::Unit: out.push_back(x(e.i) - MultiPoly::constant(n, 1, order)); break;
            case EqKind::Add: out.push_back(x(e.i) + x(e.j) - x(e.k)); break;
            case EqKind::Mul: out.push_back(x(e.i) * x(e.j) - x(e.k)); break;
        }
    }
    if (out.empty()) out.push_back(MultiPoly(n, order));
    return out;
}

SolutionKind classify(const std::vector<MultiPoly>& polys, std::uint64_t budget) {
    auto gb = buchberger(polys, MonomialOrder::GrevLex, budget);
    switch (dimension_class(gb)) {
        case DimensionClass::Empty: return SolutionKind::Inconsistent;
        case DimensionClass::Zero: return SolutionKind::ZeroDimensional;
        case DimensionClass::Positive: return SolutionKind::PositiveDimensional;
    }
    return SolutionKind::PositiveDimensional;
}

bool is_consistent_C(const CanonicalSystem& sys, std::uint64_t budget) {
    return !buchberger(system_polys(sys), MonomialOrder::GrevLex, budget).is_one();
}

SolutionSet enumerate_solutions(const CanonicalSystem& sys, const SolveOptions& opt) {
    return enumerate_solutions(system_polys(sys), opt);
}

SolutionSet enumerate_solutions(const std::vector<MultiPoly>& polys_in, const SolveOptions& opt) {
    if (polys_in.empty()) throw DomainError("no polynomials");
    std::vector<MultiPoly> polys;
    for (auto& p : polys_in) polys.push_back(p.with_order(MonomialOrder::GrevLex));
    const std::size_t n = polys[0].nvars();
    SolutionSet out;
    out.nvars = n;
    auto gb = buchberger(polys, MonomialOrder::GrevLex, opt.gb_budget);
    auto cls = dimension_class(gb);
    if (cls == DimensionClass::Empty) {
        out.kind = SolutionKind::Inconsistent;
        return out;
    }
    if (cls == DimensionClass::Positive) throw DomainError("not zero-dimensional");
    out.kind = SolutionKind::ZeroDimensional;

    RadicalData rad = radicalize(gb, opt);
    const Quotient& q = rad.q;
    const std::size_t D = q.dim();

    std::vector<std::vector<Vec>> var_ops;
    for (std::size_t i = 0; i < n; ++i) var_ops.push_back(q.mult_matrix(MultiPoly::variable(n, i)));

    // Separating form: x_last first, then one random combination.
    Vec sep(n, BigRational(0));
    sep[n - 1] = 1;
    Krylov kr;
    for (int attempt = 0;; ++attempt) {
        std::vector<Vec> op(D, Vec(D, BigRational(0)));
        for (std::size_t i = 0; i < n; ++i) {
            if (sep[i] == 0) continue;
            for (std::size_t c = 0; c < D; ++c)
                for (std::size_t r = 0; r < D; ++r)
                    if (var_ops[i][c][r] != 0) op[c][r] += sep[i] * var_ops[i][c][r];
        }
        kr = krylov(op, q.one());
        if (static_cast<std::size_t>(kr.minimal.degree()) == D) break;
        if (attempt == 1) throw Error("degenerate triangular form");
        Rng rng(opt.retry_seed);
        for (std::size_t i = 0; i + 1 < n; ++i) sep[i] = rng.between(-1000, 1000);
    }

    // x_i = h_i(ℓ): solve in the Krylov basis.
    RatMatrix K(D, D);
    for (std::size_t c = 0; c < D; ++c)
        for (std::size_t r = 0; r < D; ++r) K(r, c) = kr.powers[c][r];
    std::vector<Vec> rhs;
    for (std::size_t i = 0; i < n; ++i) rhs.push_back(q.coords(MultiPoly::variable(n, i)));
    auto sol = solve_square(K, rhs);
    if (!sol) throw Error("degenerate triangular form");

    auto rur = std::make_shared<Rur>();
    rur->nvars = n;
    rur->separator = sep;
    rur->minimal = kr.minimal;
    for (auto& c : *sol) rur->coords.push_back(UPoly(c));

    std::vector<IsolatedRoots> coord_roots;
    for (std::size_t i = 0; i < n; ++i) coord_roots.push_back(isolate_and_recognize(rad.coordinate_polys[i], opt));

    // Match each point's coordinate enclosure to exactly one coordinate root.
    unsigned bits = opt.box_precision_bits;
    for (;;) {
        rur->roots = isolate_complex_roots(rur->minimal, bits, opt.max_precision_bits);
        bool ambiguous = false;
        std::vector<SolutionPoint> pts;
        for (const auto& theta : rur->roots) {
            SolutionPoint pt;
            for (std::size_t i = 0; i < n && !ambiguous; ++i) {
                RootDisk enc = enclose(rur->coords[i], theta);
                const auto& cr = coord_roots[i];
                int hit = -1;
                for (std::size_t r = 0; r < cr.disks.size(); ++r) {
                    if (!disks_meet(enc, cr.disks[r])) continue;
                    if (hit >= 0) {
                        ambiguous = true;
                        break;
                    }
                    hit = static_cast<int>(r);
                }
                if (ambiguous) break;
                if (hit < 0) throw Error("coordinate enclosure met no root");
                Coordinate c;
                auto h = static_cast<std::size_t>(hit);
                if (cr.exact[h]) {
                    c.exact = true;
                    c.value = *cr.exact[h];
                }
                c.box = cr.disks[h];
                pt.coords.push_back(std::move(c));
            }
            if (ambiguous) break;
            pts.push_back(std::move(pt));
        }
        if (!ambiguous) {
            out.points = std::move(pts);
            break;
        }
        if (bits >= opt.max_precision_bits) throw Error("refinement exhausted");
        bits = std::min(opt.max_precision_bits, bits * 2);
    }
    // Realness of a point: every coordinate's disk is decided, but a point is
    // also real when θ is; both must agree.
    for (std::size_t k = 0; k < out.points.size(); ++k) {
        bool coords_real = out.points[k].is_real();
        bool theta_real = rur->roots[k].reality == Reality::Real;
        if (coords_real != theta_real) throw Error("inconsistent reality certificates");
    }
    for (auto& pt : out.points) {
        if (!pt.exact()) continue;
        auto v = pt.exact_values();
        for (auto& p : polys)
            if (!(p.eval(std::span<const QuadExt>(v)) == QuadExt(0)))
                throw Error("exact point failed re-verification: " + pt.str());
    }
    out.rur = std::move(rur);
    return out;
}

SolutionSet real_points(const SolutionSet& s) {
    if (s.kind == SolutionKind::PositiveDimensional) throw DomainError("not zero-dimensional");
    SolutionSet out = s;
    out.points.clear();
    for (auto& p : s.points)
        if (p.is_real()) out.points.push_back(p);
    return out;
}

bool vanishes_at(const SolutionSet& s, std::size_t index, const MultiPoly& f) {
    if (index >= s.points.size()) throw DomainError("point index out of range");
    const auto& pt = s.points[index];
    if (pt.exact()) {
        auto v = pt.exact_values();
        return f.eval(std::span<const QuadExt>(v)) == QuadExt(0);
    }
    if (!s.rur) throw DomainError("solution set carries no representation");
    const Rur& rur = *s.rur;
    // g(t) = f(h(t)) mod m(t); f vanishes at θ iff θ is a root of gcd(g, m).
    UPoly g;
    for (const auto& t : f.terms()) {
        UPoly term = UPoly::constant(t.c);
        for (std::size_t i = 0; i < rur.nvars; ++i)
            for (unsigned k = 0; k < t.m.e[i]; ++k) term = mulmod(term, rur.coords[i], rur.minimal);
        g = g + term;
    }
    g = divmod(g, rur.minimal).second;
    if (g.is_zero()) return true;
    UPoly G = gcd(g, rur.minimal);
    if (G.degree() <= 0) return false;
    UPoly H = divmod(rur.minimal, G).first;
    // Exactly one of G, H vanishes at θ; certify the other is non-zero.
    RootDisk theta = rur.roots[index];
    for (unsigned bits = 64;; bits *= 2) {
        auto nonzero = [&](const UPoly& p) {
            ComplexRat v = eval_complex(p, theta.center);
            BigRational var = variation_bound(p, theta.center, theta.radius);
            return v.norm2() > var * var;
        };
        if (nonzero(G)) return false;
        if (nonzero(H)) return true;
        if (bits > 16384) throw Error("refinement exhausted");
        auto refined = isolate_complex_roots(rur.minimal, bits, 1u << 15);
        // Same polynomial, same disjoint roots: pick the disk meeting the old one.
        for (auto& d : refined)
            if (disks_meet(d, rur.roots[index])) theta = d;
    }
}

CanonicalSystem satisfied_subset(const SolutionSet& s, std::size_t index, Universe u) {
    const auto& pt = s.points.at(index);
    if (pt.exact()) {
        auto v = pt.exact_values();
        return canon::satisfied_subset(std::span<const QuadExt>(v), u);
    }
    CanonicalSystem out(s.nvars);
    for (const auto& eq : universe_equations(s.nvars, u)) {
        CanonicalSystem one(s.nvars, {eq});
        if (vanishes_at(s, index, system_polys(one)[0])) out.insert(eq);
    }
    return out;
}

}  // namespace canon::algebra
