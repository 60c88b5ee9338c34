#include "canon/gallery.hpp"

#include "canon/bounds.hpp"
#include "canon/error.hpp"
#include "canon/groebner.hpp"
#include "canon/number_theory.hpp"
#include "canon/quad_ext.hpp"
#include "canon/solve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace canon::gallery {

using algebra::MultiPoly;
using E = CanonicalEquation;

namespace {

std::string s(const BigInt& v) { return to_string(v); }
std::string s(const BigRational& v) { return to_string(v); }

nlohmann::json strs(const std::vector<BigRational>& v) {
    auto j = nlohmann::json::array();
    for (auto& x : v) j.push_back(s(x));
    return j;
}

nlohmann::json strs(const std::vector<QuadExt>& v) {
    auto j = nlohmann::json::array();
    for (auto& x : v) j.push_back(x.str());
    return j;
}

BigInt parse_int(const std::string& t) {
    BigInt v;
    if (v.set_str(t, 10) != 0) throw ParseError("not an integer: '" + t + "'");
    return v;
}

std::string param(const std::map<std::string, std::string>& p, const std::string& key, const std::string& dflt) {
    auto it = p.find(key);
    return it == p.end() ? dflt : it->second;
}

}  // namespace

void GalleryReport::add(std::string name, bool pass, nlohmann::json witness) {
    checks.push_back({std::move(name), pass ? CheckStatus::Pass : CheckStatus::Fail, std::move(witness)});
}

void GalleryReport::skip(std::string name, nlohmann::json witness) {
    checks.push_back({std::move(name), CheckStatus::Skipped, std::move(witness)});
}

bool GalleryReport::ok() const {
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
}

nlohmann::json GalleryReport::to_json() const {
    nlohmann::json j;
    j["item"] = item;
    j["ok"] = ok();
    auto& arr = j["checks"] = nlohmann::json::array();
    for (auto& c : checks) {
        const char* st = c.status == CheckStatus::Pass ? "pass" : c.status == CheckStatus::Fail ? "fail" : "skipped";
        nlohmann::json row{{"name", c.name}, {"status", st}};
        if (!c.witness.is_null()) row["witness"] = c.witness;
        arr.push_back(std::move(row));
    }
    return j;
}

// ---- divisibility and square witnesses ------------------------------------

std::pair<BigInt, BigInt> lemma1_witness(const BigInt& x) {
    if (x == 0) throw DomainError("divisibility witness needs x != 0");
    unsigned long m = mpz_scan1(x.get_mpz_t(), 0);
    BigInt odd = x;
    mpz_fdiv_q_2exp(odd.get_mpz_t(), x.get_mpz_t(), m);  // 2y - 1, exact since 2^m | x
    BigInt y = (odd + 1) / 2;
    BigInt pm = pow2(m);
    BigInt r2 = (pow2(2 * m + 1) + 1) / 3;
    BigInt mod_odd = abs(odd);
    BigInt r1 = y % mod_odd;
    if (r1 < 0) r1 += mod_odd;
    BigInt b = algebra::crt({{r1, mod_odd}, {BigInt(r2 % pm), pm}});
    BigInt prod = (2 * b - 1) * (3 * b - 1);
    if (prod % x != 0) throw Error("divisibility witness construction failed");
    BigInt a = prod / x;
    return {a, b};
}

Lemma2Witness lemma2_witness(long x, long cap) {
    if (x < 2) throw DomainError("square witness needs x >= 2");
    if (x > cap)
        throw DomainError("x exceeds cap " + std::to_string(cap) +
                          ": fundamental Pell solutions for x^3(2+x) grow too fast to be useful at desk scale");
    Lemma2Witness w;
    w.D = pow_int(BigInt(x), 3) * (2 + x);
    auto [z, y] = algebra::pell_min(w.D);
    w.z = z;
    w.y = y;
    if (z * z != 1 + w.D * y * y) throw Error("pell solution does not verify");
    w.lemma3_bound = x + pow_int(BigInt(x), static_cast<unsigned long>(x - 2));
    return w;
}

GalleryReport lemma1_check(long range) {
    GalleryReport r;
    r.item = "lemma1";
    std::size_t bad = 0;
    nlohmann::json samples = nlohmann::json::array();
    for (long v = -range; v <= range; ++v) {
        if (v == 0) continue;
        auto [a, b] = lemma1_witness(BigInt(v));
        if (a * v != (2 * b - 1) * (3 * b - 1)) ++bad;
        if (v == 1 || v == 5 || v == -6) samples.push_back({{"x", v}, {"a", s(a)}, {"b", s(b)}});
    }
    r.add("a*x = (2b-1)(3b-1) for 1 <= |x| <= " + std::to_string(range), bad == 0,
          {{"failures", bad}, {"samples", samples}});
    return r;
}

GalleryReport lemma2_check(const std::vector<long>& xs) {
    GalleryReport r;
    r.item = "lemma2";
    for (long x : xs) {
        auto w = lemma2_witness(x, std::max<long>(6, x));
        bool square = w.z * w.z == 1 + w.D * w.y * w.y;
        r.add("x=" + std::to_string(x) + ": 1 + D y^2 is a square", square,
              {{"D", s(w.D)}, {"y", s(w.y)}, {"z", s(w.z)}});
        r.add("x=" + std::to_string(x) + ": y >= x + x^(x-2)", w.y >= w.lemma3_bound,
              {{"y", s(w.y)}, {"bound", s(w.lemma3_bound)}});
    }
    return r;
}

// ---- prime-driven constructions ---------------------------------------------

CanonicalSystem theorem2_system() {
    return CanonicalSystem(6, {E::unit(1), E::add(1, 1, 2), E::mul(3, 3, 4), E::add(2, 4, 5), E::mul(5, 6, 1)});
}

CanonicalSystem theorem3_system() {
    return CanonicalSystem(10, {E::unit(1), E::mul(2, 3, 1), E::add(3, 4, 2), E::mul(4, 5, 6), E::add(7, 7, 8),
                                E::add(1, 9, 8), E::add(7, 9, 10), E::mul(9, 10, 6)});
}

CanonicalSystem theorem4_system() {
    return CanonicalSystem(6, {E::unit(1), E::add(2, 3, 1), E::mul(2, 3, 4), E::mul(5, 5, 6), E::add(1, 6, 4)});
}

CanonicalSystem theorem5_system() {
    return CanonicalSystem(5, {E::unit(1), E::mul(2, 3, 1), E::add(2, 3, 4), E::mul(5, 5, 4)});
}

GalleryReport theorem2_verify(const BigInt& k) {
    if (k < 273) throw DomainError("k >= 273 required");
    GalleryReport r;
    r.item = "thm2";
    BigInt q = 2 + k * k;
    auto pr = algebra::primality(q);
    r.add("2 + k^2 is prime", pr.prime, {{"value", s(q)}, {"proven", pr.proven}});
    std::vector<BigRational> t{1, 2, BigRational(k), BigRational(k * k), BigRational(q), BigRational(1, 1) / q};
    r.add("tuple solves the system", satisfies(theorem2_system(), std::span<const BigRational>(t)), {{"tuple", strs(t)}});
    auto bound = bound_conj1(6);
    r.add("2 + k^2 > 2^(2^4)", q > bound, {{"value", s(q)}, {"bound", s(bound)}});
    return r;
}

GalleryReport theorem3_verify(const BigInt& p, bool desk_mode) {
    if (!algebra::is_prime(p)) throw DomainError("p must be prime");
    GalleryReport r;
    r.item = "thm3";
    auto [u, sv] = lemma1_witness(p * p - 1);
    r.add("(p^2-1) u = (2s-1)(3s-1)", (p * p - 1) * u == (2 * sv - 1) * (3 * sv - 1), {{"u", s(u)}, {"s", s(sv)}});
    BigRational P(p), inv = BigRational(1) / P;
    std::vector<BigRational> t{1, P, inv, BigRational(P - inv), BigRational(p * u), BigRational((p * p - 1) * u),
                               BigRational(sv), BigRational(2 * sv), BigRational(2 * sv - 1), BigRational(3 * sv - 1)};
    auto sys = theorem3_system();
    r.add("system has 8 equations", sys.size() == 8, {{"equations", sys.size()}});
    r.add("tuple solves the system", satisfies(sys, std::span<const BigRational>(t)), {{"tuple", strs(t)}});
    r.add("(x2 - x3) x5 = (2 x7 - 1)(3 x7 - 1) at the tuple",
          (t[1] - t[2]) * t[4] == (2 * t[6] - 1) * (3 * t[6] - 1));
    auto bound = bound_conj1(10);
    if (desk_mode)
        r.skip("p > 2^(2^8)", {{"p", s(p)}, {"note", "not required in desk mode"}});
    else
        r.add("p > 2^(2^8)", p > bound, {{"p", s(p)}});
    return r;
}

GalleryReport theorem4_verify() {
    GalleryReport r;
    r.item = "thm4";
    BigInt d = -(pow2(32) + pow2(16) + 1);
    auto primes = algebra::factorize(d);
    std::vector<std::string> fs;
    bool single = true;
    for (auto& pp : primes) {
        fs.push_back(s(pp.prime));
        single = single && pp.exponent == 1;
    }
    std::vector<std::string> want{"3", "7", "13", "97", "241", "673"};
    r.add("factorization of -2^32-2^16-1", fs == want && single, {{"primes", fs}});
    r.add("-2^32-2^16-1 is square-free", algebra::is_squarefree(d));

    std::vector<QuadExt> t{QuadExt(1), QuadExt(BigInt(pow2(16) + 1)), QuadExt(BigInt(-pow2(16))),
                           QuadExt(BigInt(-pow2(32) - pow2(16))), QuadExt(0, 1, d), QuadExt(d)};
    r.add("tuple solves the system", satisfies(theorem4_system(), std::span<const QuadExt>(t)), {{"tuple", strs(t)}});

    // x3 = 1 - x2, x6 = x2 x3 - 1 must be the square of an integer x5.
    std::size_t hits = 0;
    for (std::int64_t x2 = -65536; x2 <= 65536; ++x2) {
        std::int64_t x6 = x2 * (1 - x2) - 1;
        if (x6 < 0) continue;
        auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x6)));
        for (auto c = root - 1; c <= root + 1; ++c)
            if (c >= 0 && c * c == x6) ++hits;
    }
    r.add("no integer solution with |x2| <= 2^16", hits == 0, {{"solutions", hits}});
    // |x + y sqrt(d)|^2 = x^2 + |d| y^2 > 2^32 whenever y != 0.
    r.add("ring elements of modulus <= 2^16 are integers", abs(d) > pow2(32) - 1 && abs(d) > bound_conj1(6) * bound_conj1(6) - 1);
    return r;
}

Obs2Result observation2_scan(long q_max, long box) {
    Obs2Result res;
    for (long q = 2; q <= q_max; ++q) {
        if (!algebra::is_squarefree(BigInt(q))) continue;
        for (long a = -box; a <= box; ++a)
            for (long b = -box; b <= box; ++b)
                for (long c = -box; c <= box; ++c)
                    for (long d = -box; d <= box; ++d) {
                        if (b == 0 && d == 0) continue;
                        if (a * d + b * c != 0 || a * c + b * d * q != 1) continue;
                        ++res.units;
                        bool ok = (a >= 1 && b >= 1) || (a <= -1 && b <= -1) || (c >= 1 && d >= 1) || (c <= -1 && d <= -1);
                        if (!ok) ++res.violations;
                    }
    }
    return res;
}

GalleryReport theorem5_verify(const BigInt& p, long obs2_q, long obs2_box) {
    if (p < 13) throw DomainError("p >= 13 required");
    GalleryReport r;
    r.item = "thm5";
    BigInt D = 4 * pow_int(p, 4) - 1;
    std::vector<std::string> fs;
    for (auto& f : algebra::prime_factors(D)) fs.push_back(s(f));
    bool sqf = algebra::is_squarefree(D);
    r.add("4p^4 - 1 is square-free", sqf, {{"value", s(D)}, {"primes", fs}});
    if (!sqf) return r;
    BigInt two_p2 = 2 * p * p;
    QuadExt x2(BigRational(two_p2), 1, D), x3(BigRational(two_p2), -1, D);
    std::vector<QuadExt> t{QuadExt(1), x2, x3, QuadExt(BigInt(4 * p * p)), QuadExt(BigInt(2 * p))};
    r.add("tuple solves the system", satisfies(theorem5_system(), std::span<const QuadExt>(t)), {{"tuple", strs(t)}});
    r.add("x2 * x3 = 1", x2 * x3 == QuadExt(1));
    // x2, x3 in Z forces x2 = x3 = +-1, and +-2 = (a + b sqrt D)^2 needs ab = 0.
    bool integer_free = true;
    for (long sgn : {1L, -1L}) {
        BigInt target(2 * sgn);
        if (target >= 0 && is_perfect_square(target)) integer_free = false;  // b = 0
        if (target % D == 0 && target / D >= 0 && is_perfect_square(BigInt(target / D))) integer_free = false;  // a = 0
    }
    r.add("no solution with x2, x3 in Z", integer_free);
    // 1 + sqrt(D) > 256 <=> D > 255^2.
    r.add("1 + sqrt(4p^4 - 1) > 2^(2^3)", D > 255 * 255, {{"D", s(D)}});
    auto obs = observation2_scan(obs2_q, obs2_box);
    r.add("units of Z[sqrt q] have a same-sign part (q <= " + std::to_string(obs2_q) + ", box " +
              std::to_string(obs2_box) + ")",
          obs.violations == 0, {{"units", obs.units}, {"violations", obs.violations}});
    return r;
}

// ---- the 21-variable system --------------------------------------------------------

namespace {

CanonicalSystem z21_shape(bool scaled) {
    if (!scaled) {
        return CanonicalSystem(21, {E::unit(1),       E::add(1, 1, 2),   E::mul(2, 2, 3),    E::mul(3, 3, 4),
                                    E::mul(4, 4, 5),  E::mul(5, 5, 6),   E::mul(6, 6, 7),    E::mul(6, 7, 8),
                                    E::add(2, 6, 9),  E::mul(8, 9, 10),  E::mul(11, 11, 12), E::mul(10, 12, 13),
                                    E::add(1, 13, 14), E::mul(15, 15, 14),
                                    E::add(16, 16, 17), E::add(1, 18, 17), E::add(16, 18, 19), E::mul(18, 19, 20),
                                    E::mul(12, 21, 20)});
    }
    // base b = x3 = 4: x4 = b^2, x5 = b^3, x6 = 2 + b, x7 = b^3 (2 + b).
    return CanonicalSystem(18, {E::unit(1),       E::add(1, 1, 2),   E::mul(2, 2, 3),   E::mul(3, 3, 4),
                                E::mul(3, 4, 5),  E::add(2, 3, 6),   E::mul(5, 6, 7),   E::mul(8, 8, 9),
                                E::mul(7, 9, 10), E::add(1, 10, 11), E::mul(12, 12, 11),
                                E::add(13, 13, 14), E::add(1, 15, 14), E::add(13, 15, 16), E::mul(15, 16, 17),
                                E::mul(9, 18, 17)});
}

std::vector<MultiPoly> polys_of(const CanonicalSystem& sys, std::initializer_list<CanonicalEquation> only) {
    CanonicalSystem sub(sys.arity());
    for (auto& e : only) sub.insert(e);
    return algebra::system_polys(sub);
}

bool same_ideal(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b) {
    auto ga = algebra::buchberger(a, algebra::MonomialOrder::GrevLex);
    auto gb = algebra::buchberger(b, algebra::MonomialOrder::GrevLex);
    return ga.gens == gb.gens;
}

}  // namespace

CanonicalSystem z21_build() { return z21_shape(false); }
CanonicalSystem z21_scaled_build() { return z21_shape(true); }

GalleryReport z21_verify() {
    GalleryReport r;
    r.item = "z21";
    auto sys = z21_build();
    r.add("system has 21 variables and 19 equations", sys.arity() == 21 && sys.size() == 19);

    const std::size_t N = 21;
    auto x = [&](std::size_t i) { return MultiPoly::variable(N, i - 1); };
    auto c = [&](const BigInt& v) { return MultiPoly::constant(N, BigRational(v)); };

    // Chain part: each variable is fixed by earlier ones.
    BigInt b = pow2(16);
    BigInt x10 = pow_int(b, 3) * (2 + b);
    auto chain = polys_of(sys, {E::unit(1), E::add(1, 1, 2), E::mul(2, 2, 3), E::mul(3, 3, 4), E::mul(4, 4, 5),
                                E::mul(5, 5, 6), E::mul(6, 6, 7), E::mul(6, 7, 8), E::add(2, 6, 9), E::mul(8, 9, 10),
                                E::mul(11, 11, 12), E::mul(10, 12, 13), E::add(1, 13, 14), E::mul(15, 15, 14)});
    std::vector<MultiPoly> chain_defs{x(1) - c(1),         x(2) - c(2),           x(3) - c(4),
                                      x(4) - c(16),        x(5) - c(256),         x(6) - c(b),
                                      x(7) - c(b * b),     x(8) - c(b * b * b),   x(9) - c(2 + b),
                                      x(10) - c(x10),      x(12) - x(11) * x(11), x(13) - c(x10) * x(11) * x(11),
                                      x(14) - c(1) - c(x10) * x(11) * x(11),
                                      x(15) * x(15) - c(1) - c(x10) * x(11) * x(11)};
    r.add("x10 = 2^48 (2 + 2^16)", x10 == pow2(48) * (2 + pow2(16)), {{"x10", s(x10)}});
    r.add("bullet part <=> x15^2 = 1 + (2^16)^3 (2 + 2^16) x11^2", same_ideal(chain, chain_defs));

    auto diamond = polys_of(sys, {E::unit(1), E::mul(11, 11, 12), E::add(16, 16, 17), E::add(1, 18, 17),
                                  E::add(16, 18, 19), E::mul(18, 19, 20), E::mul(12, 21, 20)});
    auto f = (c(2) * x(16) - c(1)) * (c(3) * x(16) - c(1));
    std::vector<MultiPoly> diamond_defs{x(1) - c(1),
                                        x(12) - x(11) * x(11),
                                        x(17) - c(2) * x(16),
                                        x(18) - c(2) * x(16) + c(1),
                                        x(19) - c(3) * x(16) + c(1),
                                        x(20) - f,
                                        x(21) * x(11) * x(11) - f};
    r.add("diamond part <=> x21 x11^2 = (2 x16 - 1)(3 x16 - 1)", same_ideal(diamond, diamond_defs));

    // |x11| >= 2^16 + (2^16)^(2^16-2) > 2^(16 (2^16 - 2)) = 2^(2^20 - 32) > 2^(2^19).
    BigInt e1 = BigInt(16) * (pow2(16) - 2), e2 = pow2(20) - 32, e3 = pow2(19);
    r.add("exponent chain 16 (2^16 - 2) = 2^20 - 32 > 2^19", e1 == e2 && e2 > e3,
          {{"lhs", s(e2)}, {"rhs", s(e3)}});

    // Scaled analog at base 2^2.
    auto w = lemma2_witness(4);
    r.add("scaled analog: D = (2^2)^3 (2 + 2^2) = 384", w.D == 384, {{"D", s(w.D)}});
    auto [a, bb] = lemma1_witness(w.y * w.y);
    BigInt base = 4;
    std::vector<BigRational> t(18);
    t[0] = 1;
    t[1] = 2;
    t[2] = BigRational(base);
    t[3] = BigRational(base * base);
    t[4] = BigRational(base * base * base);
    t[5] = BigRational(2 + base);
    t[6] = BigRational(base * base * base * (2 + base));
    t[7] = BigRational(w.y);
    t[8] = BigRational(w.y * w.y);
    t[9] = t[6] * t[8];
    t[10] = 1 + t[9];
    t[11] = BigRational(w.z);
    t[12] = BigRational(bb);
    t[13] = 2 * t[12];
    t[14] = 2 * t[12] - 1;
    t[15] = 3 * t[12] - 1;
    t[16] = t[14] * t[15];
    t[17] = BigRational(a);
    r.add("scaled analog: Pell and CRT data solve the system",
          satisfies(z21_scaled_build(), std::span<const BigRational>(t)), {{"tuple", strs(t)}});
    r.add("scaled analog: x8 >= 4 + 4^2", w.y >= w.lemma3_bound, {{"x8", s(w.y)}, {"bound", s(w.lemma3_bound)}});
    return r;
}

// ---- the 7-variable field sketch -------------------------------------------------------

CanonicalSystem sevenvar_system() {
    return CanonicalSystem(7, {E::unit(1), E::mul(2, 2, 3), E::add(3, 4, 5), E::add(5, 6, 1), E::mul(3, 4, 7),
                               E::mul(6, 7, 1)});
}

GalleryReport sevenvar_field_check(unsigned precision_bits, long scan) {
    GalleryReport r;
    r.item = "sevenvar";
    auto sys = sevenvar_system();
    r.add("system has 6 equations", sys.size() == 6);

    // alpha = 2^33; beta is a root of m(b) = b^2 - (1 - alpha^2) b + alpha^-2, so
    // the tuple is checked in Q[b]/(m), which covers both real branches at once.
    BigRational alpha(pow2(33));
    BigRational A2 = alpha * alpha;
    BigRational disc = (1 - A2) * (1 - A2) - 4 / A2;
    r.add("alpha > 2^(2^5)", alpha > BigRational(bound_conj1(7)), {{"alpha", s(alpha)}});
    r.add("two real branches for beta", disc > 0);
    auto beta = MultiPoly::variable(1, 0);
    auto k = [](const BigRational& v) { return MultiPoly::constant(1, v); };
    auto minimal = beta * beta - k(1 - A2) * beta + k(1 / A2);
    std::vector<MultiPoly> t{k(1), k(alpha), k(A2), beta, k(A2) + beta, k(1 - A2) - beta, k(A2) * beta};
    bool solves = true;
    for (auto& e : sys.equations()) {
        MultiPoly res;
        switch (e.kind) {
            case EqKind::Unit: res = t[e.i - 1] - k(1); break;
            case EqKind::Add: res = t[e.i - 1] + t[e.j - 1] - t[e.k - 1]; break;
            case EqKind::Mul: res = t[e.i - 1] * t[e.j - 1] - t[e.k - 1]; break;
        }
        if (!algebra::normal_form(res, {minimal}).is_zero()) solves = false;
    }
    auto constraint = k(A2) * beta * (k(1 - A2) - beta) - k(1);
    r.add("alpha^2 beta (1 - alpha^2 - beta) = 1 on both branches", algebra::normal_form(constraint, {minimal}).is_zero());
    r.add("(1, alpha, alpha^2, beta, alpha^2 + beta, 1 - alpha^2 - beta, alpha^2 beta) solves the system", solves);
    nlohmann::json branches = nlohmann::json::array();
    bool small = true;
    mpf_class tol(1, precision_bits);
    mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), precision_bits / 8);
    mpf_class root(disc, precision_bits);
    root = sqrt(root);
    for (int sign : {1, -1}) {
        mpf_class b((mpf_class(1 - A2, precision_bits) + sign * root) / 2, precision_bits);
        mpf_class resid(mpf_class(A2, precision_bits) * b * (mpf_class(1 - A2, precision_bits) - b) - 1, precision_bits);
        if (mpf_class(abs(resid), precision_bits) > tol) small = false;
        mp_exp_t exp;
        branches.push_back({{"beta_digits", b.get_str(exp, 10, 20)},
                            {"beta_exponent10", static_cast<long>(exp)},
                            {"residual", mpf_class(abs(resid)).get_d()}});
    }
    r.add("numeric branches at " + std::to_string(precision_bits) + " bits", small, {{"branches", branches}});

    // x + y + z = 1, xyz = 1 with x = a/b, y = c/d: a c (b d - a d - c b) = b^2 d^2.
    std::vector<std::pair<long, long>> fr;
    for (long b = 1; b <= scan; ++b)
        for (long a = -scan; a <= scan; ++a)
            if (a != 0 && std::gcd(a, b) == 1) fr.emplace_back(a, b);
    std::size_t hits = 0;
    for (auto [a, b] : fr)
        for (auto [c, d] : fr)
            if (a * c * (b * d - a * d - c * b) == b * b * d * d) ++hits;
    r.add("x + y + z = xyz = 1 has no rational solution with |num|, den <= " + std::to_string(scan), hits == 0,
          {{"solutions", hits}});
    return r;
}

// ---- dispatch ------------------------------------------------------------------------

const std::vector<std::string>& item_names() {
    static const std::vector<std::string> names{"thm2", "thm3", "thm4", "thm5", "lemma1", "lemma2", "z21", "sevenvar"};
    return names;
}

GalleryReport run_item(const std::string& item, const std::map<std::string, std::string>& p) {
    if (item == "thm2") return theorem2_verify(parse_int(param(p, "k", "273")));
    if (item == "thm3") {
        auto desk = param(p, "desk", "true");
        return theorem3_verify(parse_int(param(p, "p", "5")), desk == "true" || desk == "1");
    }
    if (item == "thm4") return theorem4_verify();
    if (item == "thm5") return theorem5_verify(parse_int(param(p, "p", "13")));
    if (item == "lemma1") return lemma1_check(std::stol(param(p, "range", "1000")));
    if (item == "lemma2") return lemma2_check();
    if (item == "z21") return z21_verify();
    if (item == "sevenvar") return sevenvar_field_check(static_cast<unsigned>(std::stoul(param(p, "precision", "512"))));
    throw ParseError("unknown gallery item '" + item + "'");
}

}  // namespace canon::gallery
