#include "canon/univariate.hpp"

#include "canon/error.hpp"

#include <algorithm>

namespace canon::algebra {

UPoly::UPoly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::constant(const BigRational& c) { return UPoly(std::vector<BigRational>{c}); }

UPoly UPoly::monomial(const BigRational& c, std::size_t power) {
    std::vector<BigRational> v(power + 1, BigRational(0));
    v[power] = c;
    return UPoly(std::move(v));
}

UPoly UPoly::from_roots(const std::vector<BigRational>& roots) {
    UPoly p = constant(1);
    for (auto& r : roots) p = p * UPoly({-r, BigRational(1)});
    return p;
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(1 / lead());
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigRational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return UPoly(std::move(d));
}

UPoly UPoly::primitive() const {
    if (is_zero()) return *this;
    BigInt den = 1;
    for (auto& c : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<BigInt> ints;
    BigInt g = 0;
    for (auto& c : c_) {
        BigInt v = c.get_num() * (den / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        ints.push_back(v);
    }
    if (c_.back() < 0) g = -g;
    std::vector<BigRational> out;
    for (auto& v : ints) out.emplace_back(v / g);
    return UPoly(std::move(out));
}

BigRational UPoly::eval(const BigRational& x) const {
    BigRational acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

QuadExt UPoly::eval(const QuadExt& x) const {
    QuadExt acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + QuadExt(c_[i]);
    return acc;
}

UPoly UPoly::operator-() const { return scaled(-1); }

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<BigRational> r(std::max(a.c_.size(), b.c_.size()), BigRational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> r(a.c_.size() + b.c_.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
}

UPoly UPoly::scaled(const BigRational& c) const {
    if (c == 0) return {};
    UPoly r = *this;
    for (auto& v : r.c_) v *= c;
    return r;
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        BigRational c = c_[i];
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        c = abs(c);
        if (i == 0) out += c.get_str();
        else {
            if (c != 1) out += c.get_str() + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<BigRational> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {UPoly{}, a};
    std::vector<BigRational> q(static_cast<std::size_t>(a.degree() - db + 1), BigRational(0));
    BigRational inv = 1 / b.lead();
    for (int i = a.degree(); i >= db; --i) {
        BigRational f = r[static_cast<std::size_t>(i)] * inv;
        if (f == 0) continue;
        q[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.coeff(static_cast<std::size_t>(j));
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = divmod(x, y).second;
        x = std::move(y);
        y = r.is_zero() ? r : r.primitive();
    }
    return x.monic();
}

UPoly squarefree_part(const UPoly& p) {
    if (p.degree() <= 0) return p.is_zero() ? p : UPoly::constant(1);
    UPoly g = gcd(p, p.derivative());
    return divmod(p, g).first.monic();
}

UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& m) { return divmod(a * b, m).second; }

UPoly compose_mod(const UPoly& p, const UPoly& q, const UPoly& m) {
    UPoly acc;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = mulmod(acc, q, m) + UPoly::constant(p.coeffs()[i]);
    return divmod(acc, m).second;
}

UPoly to_upoly(const MultiPoly& p, std::size_t var) {
    std::vector<BigRational> c;
    for (const auto& t : p.terms()) {
        if (t.m.deg != t.m.e[var]) throw DomainError("polynomial is not univariate in the requested variable");
        std::size_t d = t.m.e[var];
        if (c.size() <= d) c.resize(d + 1, BigRational(0));
        c[d] += t.c;
    }
    return UPoly(std::move(c));
}

MultiPoly to_multipoly(const UPoly& p, std::size_t nvars, std::size_t var, MonomialOrder order) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        if (p.coeffs()[i] != 0) terms.push_back({Monomial::var(var, static_cast<std::uint16_t>(i)), p.coeffs()[i]});
    return MultiPoly::from_terms(nvars, order, std::move(terms));
}

namespace {

std::vector<UPoly> sturm_chain(const UPoly& p) {
    std::vector<UPoly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        UPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        // Positive rescaling keeps the sign pattern.
        BigRational s = abs(r.lead());
        chain.push_back((-r).scaled(1 / s));
    }
    return chain;
}

int sign_changes(const std::vector<UPoly>& chain, const BigRational& x) {
    int changes = 0, prev = 0;
    for (auto& q : chain) {
        int s = sgn(q.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

BigRational cauchy_bound(const UPoly& p) {
    BigRational m = 0;
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, BigRational(abs(p.coeffs()[static_cast<std::size_t>(i)] / p.lead())));
    return m + 1;
}

}  // namespace

int sturm_count(const UPoly& p, const BigRational& a, const BigRational& b) {
    UPoly q = squarefree_part(p);
    if (q.degree() <= 0) return 0;
    auto chain = sturm_chain(q);
    return sign_changes(chain, a) - sign_changes(chain, b);
}

std::vector<RationalInterval> sturm_isolate(const UPoly& p, const BigRational& max_width) {
    if (p.is_zero()) throw DomainError("sturm_isolate of the zero polynomial");
    UPoly q = squarefree_part(p);
    std::vector<RationalInterval> out;
    if (q.degree() <= 0) return out;
    auto chain = sturm_chain(q);
    BigRational B = cauchy_bound(q);
    struct Job {
        BigRational lo, hi;
        int vlo, vhi;
    };
    std::vector<Job> stack{{-B, B, sign_changes(chain, -B), sign_changes(chain, B)}};
    while (!stack.empty()) {
        Job j = stack.back();
        stack.pop_back();
        int count = j.vlo - j.vhi;  // roots in (lo, hi]
        if (count == 0) continue;
        if (count == 1 && (max_width <= 0 || j.hi - j.lo <= max_width)) {
            if (q.eval(j.hi) == 0) out.push_back({j.hi, j.hi});
            else out.push_back({j.lo, j.hi});
            continue;
        }
        BigRational mid = (j.lo + j.hi) / 2;
        if (count == 1 && q.eval(mid) == 0) {
            out.push_back({mid, mid});
            continue;
        }
        int vm = sign_changes(chain, mid);
        stack.push_back({mid, j.hi, vm, j.vhi});
        stack.push_back({j.lo, mid, j.vlo, vm});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
    return out;
}

}  // namespace canon::algebra
