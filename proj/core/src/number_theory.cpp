#include "canon/number_theory.hpp"

#include "canon/error.hpp"

#include <algorithm>
#include <map>

namespace canon::algebra {

namespace {

bool miller_rabin_witness(const BigInt& n, const BigInt& d, unsigned s, unsigned long a) {
    BigInt x;
    BigInt base(a);
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    BigInt n1 = n - 1;
    if (x == 1 || x == n1) return true;
    for (unsigned r = 1; r < s; ++r) {
        x = (x * x) % n;
        if (x == n1) return true;
    }
    return false;
}

// Deterministic for n < 3.3e24 with the first twelve primes as witnesses.
bool deterministic_mr(const BigInt& n) {
    static const unsigned long witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned long p : witnesses) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    BigInt d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d /= 2;
        ++s;
    }
    for (unsigned long a : witnesses)
        if (!miller_rabin_witness(n, d, s, a)) return false;
    return true;
}

BigInt pollard_brent(const BigInt& n, unsigned long c) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    BigInt y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto f = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
    do {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = f(y);
        unsigned long k = 0;
        do {
            ys = y;
            for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                y = f(y);
                BigInt diff = abs(x - y);
                q = (q * diff) % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
        } while (k < r && g == 1);
        r *= 2;
    } while (g == 1);
    if (g == n) {
        do {
            ys = f(ys);
            BigInt diff = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g;
}

void split(const BigInt& n, std::map<BigInt, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    for (unsigned long c = 1;; ++c) {
        BigInt f = pollard_brent(n, c);
        if (f != n && f != 1) {
            split(f, out);
            split(n / f, out);
            return;
        }
    }
}

}  // namespace

Primality primality(const BigInt& n) {
    BigInt m = abs(n);
    if (m < 2) return {false, true};
    if (mpz_sizeinbase(m.get_mpz_t(), 2) <= 64) return {deterministic_mr(m), true};
    // GMP runs Baillie-PSW followed by reps-24 Miller-Rabin rounds; 64 keeps
    // the composite-acceptance bound under 4^-64 = 2^-128.
    int r = mpz_probab_prime_p(m.get_mpz_t(), 64);
    return {r != 0, r == 2};
}

std::vector<PrimePower> factorize(const BigInt& n) {
    BigInt m = abs(n);
    if (m < 2) throw DomainError("factorize requires |n| >= 2");
    std::map<BigInt, unsigned> acc;
    for (unsigned long p = 2; p < 10000 && BigInt(p) * p <= m; p += (p == 2 ? 1 : 2)) {
        while (m % p == 0) {
            ++acc[BigInt(p)];
            m /= p;
        }
    }
    if (m > 1) split(m, acc);
    std::vector<PrimePower> out;
    for (auto& [p, e] : acc) out.push_back({p, e});
    return out;
}

std::vector<BigInt> prime_factors(const BigInt& n) {
    std::vector<BigInt> out;
    for (auto& pp : factorize(n)) out.push_back(pp.prime);
    return out;
}

bool is_squarefree(const BigInt& n) {
    BigInt m = abs(n);
    if (m == 0) return false;
    if (m == 1) return true;
    for (auto& pp : factorize(m))
        if (pp.exponent > 1) return false;
    return true;
}

BigInt crt(const std::vector<std::pair<BigInt, BigInt>>& congruences) {
    BigInt r = 0, mod = 1;
    for (auto& [res, m0] : congruences) {
        BigInt m = abs(m0);
        if (m == 0) throw DomainError("crt: zero modulus");
        BigInt res_m = res % m;
        if (res_m < 0) res_m += m;
        // Solve r + mod*t ≡ res_m (mod m).
        BigInt g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), mod.get_mpz_t(), m.get_mpz_t());
        BigInt diff = res_m - r;
        if (diff % g != 0) throw DomainError("crt: inconsistent congruences");
        BigInt m_g = m / g;
        BigInt k = (diff / g * s) % m_g;
        if (k < 0) k += m_g;
        r += mod * k;
        mod *= m_g;
        r %= mod;
        if (r < 0) r += mod;
    }
    return r;
}

std::pair<BigInt, BigInt> pell_min(const BigInt& D) {
    if (D < 2) throw DomainError("pell_min requires D >= 2");
    if (is_perfect_square(D)) throw DomainError("pell_min requires a non-square D");
    BigInt a0 = isqrt(D);
    BigInt m = 0, d = 1, a = a0;
    BigInt p_prev = 1, p = a0;  // convergent numerators
    BigInt q_prev = 0, q = 1;   // convergent denominators
    for (;;) {
        if (p * p - D * q * q == 1) return {p, q};
        m = d * a - m;
        d = (D - m * m) / d;
        a = (a0 + m) / d;
        BigInt pn = a * p + p_prev;
        BigInt qn = a * q + q_prev;
        p_prev = p;
        q_prev = q;
        p = pn;
        q = qn;
    }
}

}  // namespace canon::algebra
