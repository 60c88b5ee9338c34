#include "canon/roots.hpp"

#include "canon/error.hpp"

#include <cmath>
#include <numbers>

namespace canon::algebra {

namespace {

struct CF {
    mpf_class re, im;
};

CF cf(double r, double i, unsigned prec) { return {mpf_class(r, prec), mpf_class(i, prec)}; }

CF add(const CF& a, const CF& b, unsigned prec) {
    CF r{mpf_class(0, prec), mpf_class(0, prec)};
    r.re = a.re + b.re;
    r.im = a.im + b.im;
    return r;
}

CF sub(const CF& a, const CF& b, unsigned prec) {
    CF r{mpf_class(0, prec), mpf_class(0, prec)};
    r.re = a.re - b.re;
    r.im = a.im - b.im;
    return r;
}

CF mul(const CF& a, const CF& b, unsigned prec) {
    CF r{mpf_class(0, prec), mpf_class(0, prec)};
    r.re = a.re * b.re - a.im * b.im;
    r.im = a.re * b.im + a.im * b.re;
    return r;
}

CF div(const CF& a, const CF& b, unsigned prec) {
    mpf_class den(0, prec);
    den = b.re * b.re + b.im * b.im;
    CF r{mpf_class(0, prec), mpf_class(0, prec)};
    r.re = (a.re * b.re + a.im * b.im) / den;
    r.im = (a.im * b.re - a.re * b.im) / den;
    return r;
}

mpf_class mag2(const CF& a, unsigned prec) {
    mpf_class r(0, prec);
    r = a.re * a.re + a.im * a.im;
    return r;
}

ComplexRat to_rat(const CF& a) {
    BigRational re(a.re), im(a.im);
    return {re, im};
}

// p(z) and p'(z) in floating complex arithmetic.
// p and dp must arrive zeroed at working precision.
void horner2(const std::vector<mpf_class>& c, const CF& z, CF& p, CF& dp, unsigned prec) {
    for (std::size_t i = c.size(); i-- > 0;) {
        dp = add(mul(dp, z, prec), p, prec);
        p = mul(p, z, prec);
        p.re += c[i];
    }
}

// Aberth–Ehrlich iteration until corrections drop below 2^-prec relative.
void aberth(const UPoly& p, std::vector<CF>& z, unsigned prec) {
    std::vector<mpf_class> c;
    for (auto& v : p.coeffs()) c.emplace_back(v, prec);
    const std::size_t n = z.size();
    for (auto& w : z) {
        w.re.set_prec(prec);
        w.im.set_prec(prec);
    }
    mpf_class tol(1, prec);
    mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), prec - 8);
    for (int iter = 0; iter < 2000; ++iter) {
        bool converged = true;
        for (std::size_t i = 0; i < n; ++i) {
            CF pv = cf(0, 0, prec), dpv = cf(0, 0, prec);
            horner2(c, z[i], pv, dpv, prec);
            if (mpf_sgn(pv.re.get_mpf_t()) == 0 && mpf_sgn(pv.im.get_mpf_t()) == 0) continue;
            CF ratio = div(pv, dpv, prec);
            CF sum = cf(0, 0, prec);
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                CF diff = sub(z[i], z[j], prec);
                if (mpf_sgn(diff.re.get_mpf_t()) == 0 && mpf_sgn(diff.im.get_mpf_t()) == 0) {
                    diff.re = tol;
                }
                sum = add(sum, div(cf(1, 0, prec), diff, prec), prec);
            }
            CF denom = sub(cf(1, 0, prec), mul(ratio, sum, prec), prec);
            CF w = div(ratio, denom, prec);
            z[i] = sub(z[i], w, prec);
            mpf_class scale(1, prec);
            mpf_class m = mag2(z[i], prec);
            if (m > 1) scale = m;
            if (mag2(w, prec) > tol * tol * scale) converged = false;
        }
        if (converged) return;
    }
}

struct Certificate {
    bool ok = false;
    std::vector<RootDisk> disks;
};

// Inclusion disks D(z_i, n |p(z_i)| / |lc ∏ (z_i − z_j)|): when pairwise
// disjoint each holds exactly one root.
Certificate certify(const UPoly& p, const std::vector<ComplexRat>& z, unsigned target_bits) {
    Certificate cert;
    const std::size_t n = z.size();
    const BigRational nn(static_cast<unsigned long>(n * n));
    BigRational target(1);
    mpq_div_2exp(target.get_mpq_t(), target.get_mpq_t(), target_bits);
    for (std::size_t i = 0; i < n; ++i) {
        ComplexRat pv = eval_complex(p, z[i]);
        ComplexRat q{p.lead(), 0};
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) q = q * (z[i] - z[j]);
        BigRational qn = q.norm2();
        if (qn == 0) return cert;
        BigRational r2 = nn * pv.norm2() / qn;
        BigRational r = r2 == 0 ? BigRational(0) : sqrt_upper(r2);
        if (r > target) return cert;
        cert.disks.push_back({z[i], r, Reality::Real});
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            BigRational s = cert.disks[i].radius + cert.disks[j].radius;
            if ((z[i] - z[j]).norm2() <= s * s) return cert;
        }
    for (std::size_t i = 0; i < n; ++i) {
        auto& d = cert.disks[i];
        if (d.center.im * d.center.im > d.radius * d.radius) {
            d.reality = Reality::NonReal;
            continue;
        }
        // The conjugate root lies in the mirrored disk; if that disk meets no
        // other disk, the root is its own conjugate.
        ComplexRat mirrored = d.center.conj();
        bool alone = true;
        for (std::size_t j = 0; j < n && alone; ++j) {
            if (j == i) continue;
            BigRational s = d.radius + cert.disks[j].radius;
            if ((mirrored - cert.disks[j].center).norm2() <= s * s) alone = false;
        }
        if (!alone) return cert;
        d.reality = Reality::Real;
        d.center.im = 0;
    }
    cert.ok = true;
    return cert;
}

}  // namespace

BigRational sqrt_upper(const BigRational& v) {
    if (v < 0) throw DomainError("sqrt_upper of a negative number");
    if (v == 0) return 0;
    mpf_class f(v, 128);
    mpf_class s(0, 128);
    mpf_sqrt(s.get_mpf_t(), f.get_mpf_t());
    BigRational r(s);
    BigRational bump(1);
    mpq_div_2exp(bump.get_mpq_t(), bump.get_mpq_t(), 50);
    r *= 1 + bump;
    while (r * r < v) r *= 1 + bump;
    return r;
}

ComplexRat eval_complex(const UPoly& p, const ComplexRat& z) {
    ComplexRat acc;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        acc = acc * z;
        acc.re += p.coeffs()[i];
    }
    return acc;
}

BigRational variation_bound(const UPoly& p, const ComplexRat& c, const BigRational& r) {
    BigRational a = sqrt_upper(c.norm2());
    BigRational b = a + r;
    BigRational bound = 0, pa = 1, pb = 1;
    for (std::size_t k = 1; k < p.coeffs().size(); ++k) {
        pa *= a;
        pb *= b;
        bound += abs(p.coeffs()[k]) * (pb - pa);
    }
    return bound;
}

std::vector<RootDisk> isolate_complex_roots(const UPoly& sqf, unsigned target_bits, unsigned max_bits) {
    const int deg = sqf.degree();
    if (deg <= 0) return {};
    if (deg == 1) {
        BigRational root = -sqf.coeffs()[0] / sqf.coeffs()[1];
        return {RootDisk{{root, 0}, BigRational(0), Reality::Real}};
    }
    const std::size_t n = static_cast<std::size_t>(deg);
    // Start on a circle of the Cauchy radius, rotated off the real axis.
    double bound = 0;
    for (int i = 0; i < deg; ++i)
        bound = std::max(bound, std::abs(BigRational(sqf.coeffs()[static_cast<std::size_t>(i)] / sqf.lead()).get_d()));
    bound = std::min(1.0 + bound, 1e300);
    unsigned prec = std::max(128u, target_bits + 64);
    std::vector<CF> z;
    for (std::size_t k = 0; k < n; ++k) {
        double ang = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
        z.push_back(cf(bound * std::cos(ang), bound * std::sin(ang), prec));
    }
    for (;;) {
        aberth(sqf, z, prec);
        std::vector<ComplexRat> centers;
        for (auto& w : z) centers.push_back(to_rat(w));
        Certificate cert = certify(sqf, centers, target_bits);
        if (cert.ok) return cert.disks;
        if (prec >= max_bits) throw Error("refinement exhausted");
        prec = std::min(max_bits, prec * 2);
        // Nudge coincident approximations apart so the iteration can separate them.
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (z[i].re == z[j].re && z[i].im == z[j].im) z[j].im += mpf_class(1e-3, prec);
    }
}

}  // namespace canon::algebra
