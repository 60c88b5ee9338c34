#include "canon/multipoly.hpp"

#include "canon/error.hpp"

#include <algorithm>

namespace canon::algebra {

Monomial Monomial::var(std::size_t i, std::uint16_t power) {
    Monomial m;
    m.e[i] = power;
    m.deg = power;
    return m;
}

bool Monomial::divides(const Monomial& o, std::size_t nvars) const {
    if (deg > o.deg) return false;
    for (std::size_t i = 0; i < nvars; ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] + o.e[i]);
    r.deg = deg + o.deg;
    return r;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(o.e[i] - e[i]);
    r.deg = o.deg - deg;
    return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial r;
    r.deg = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        r.e[i] = std::max(e[i], o.e[i]);
        r.deg += r.e[i];
    }
    return r;
}

bool Monomial::coprime(const Monomial& o, std::size_t nvars) const {
    for (std::size_t i = 0; i < nvars; ++i)
        if (e[i] && o.e[i]) return false;
    return true;
}

int Monomial::single_variable(std::size_t nvars) const {
    int found = -1;
    for (std::size_t i = 0; i < nvars; ++i) {
        if (e[i]) {
            if (found >= 0) return -1;
            found = static_cast<int>(i);
        }
    }
    return found;
}

int compare(const Monomial& a, const Monomial& b, MonomialOrder order, std::size_t nvars) {
    if (order == MonomialOrder::Lex) {
        for (std::size_t i = 0; i < nvars; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
        return 0;
    }
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    for (std::size_t i = nvars; i-- > 0;)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    return 0;
}

MultiPoly::MultiPoly(std::size_t nvars, MonomialOrder order) : nvars_(nvars), order_(order) {
    if (nvars > kMaxVars) throw DomainError("too many variables for MultiPoly");
}

MultiPoly MultiPoly::constant(std::size_t nvars, const BigRational& c, MonomialOrder order) {
    MultiPoly p(nvars, order);
    if (c != 0) p.terms_.push_back({Monomial{}, c});
    return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t i, MonomialOrder order) {
    if (i >= nvars) throw DomainError("variable index out of range");
    MultiPoly p(nvars, order);
    p.terms_.push_back({Monomial::var(i), BigRational(1)});
    return p;
}

MultiPoly MultiPoly::from_terms(std::size_t nvars, MonomialOrder order, std::vector<Term> terms) {
    MultiPoly p(nvars, order);
    p.terms_ = std::move(terms);
    p.sort_and_merge();
    return p;
}

void MultiPoly::sort_and_merge() {
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return compare(a.m, b.m, order_, nvars_) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().m == t.m) out.back().c += t.c;
        else out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.c == 0; }), out.end());
    terms_ = std::move(out);
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max<unsigned>(d, t.m.deg);
    return d;
}

unsigned MultiPoly::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max<unsigned>(d, t.m.e[var]);
    return d;
}

std::uint64_t MultiPoly::support() const {
    std::uint64_t s = 0;
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < nvars_; ++i)
            if (t.m.e[i]) s |= std::uint64_t{1} << i;
    return s;
}

MultiPoly MultiPoly::with_order(MonomialOrder order) const {
    if (order == order_) return *this;
    MultiPoly p(nvars_, order);
    p.terms_ = terms_;
    p.sort_and_merge();
    return p;
}

MultiPoly MultiPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(1 / lc());
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

namespace {

void check_compatible(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars() != b.nvars() || a.order() != b.order())
        throw DomainError("MultiPoly operands differ in variables or order");
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    sub_mul_term(BigRational(-1), Monomial{}, o);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    sub_mul_term(BigRational(1), Monomial{}, o);
    return *this;
}

void MultiPoly::sub_mul_term(const BigRational& c, const Monomial& m, const MultiPoly& g) {
    check_compatible(*this, g);
    if (c == 0 || g.is_zero()) return;
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    Monomial gm;
    bool gm_valid = false;
    while (i < terms_.size() || j < g.terms_.size()) {
        if (j < g.terms_.size() && !gm_valid) {
            gm = g.terms_[j].m * m;
            gm_valid = true;
        }
        int cmpv;
        if (i == terms_.size()) cmpv = -1;
        else if (j == g.terms_.size()) cmpv = 1;
        else cmpv = compare(terms_[i].m, gm, order_, nvars_);
        if (cmpv > 0) {
            out.push_back(std::move(terms_[i++]));
        } else if (cmpv < 0) {
            out.push_back({gm, -c * g.terms_[j].c});
            ++j;
            gm_valid = false;
        } else {
            BigRational v = terms_[i].c - c * g.terms_[j].c;
            if (v != 0) out.push_back({terms_[i].m, std::move(v)});
            ++i;
            ++j;
            gm_valid = false;
        }
    }
    terms_ = std::move(out);
}

Term MultiPoly::pop_lead() {
    Term t = std::move(terms_.front());
    terms_.erase(terms_.begin());
    return t;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    check_compatible(a, b);
    MultiPoly r(a.nvars(), a.order());
    for (const auto& t : b.terms()) r.sub_mul_term(-t.c, t.m, a);
    return r;
}

MultiPoly MultiPoly::scaled(const BigRational& c) const {
    MultiPoly r(nvars_, order_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.c *= c;
    return r;
}

MultiPoly MultiPoly::mul_term(const Monomial& m, const BigRational& c) const {
    MultiPoly r(nvars_, order_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
    return r;
}

BigRational MultiPoly::eval(std::span<const BigRational> x) const {
    if (x.size() < nvars_) throw DomainError("evaluation point too short");
    BigRational acc = 0;
    for (const auto& t : terms_) {
        BigRational v = t.c;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (t.m.e[i]) v *= pow_rat(x[i], t.m.e[i]);
        acc += v;
    }
    return acc;
}

QuadExt MultiPoly::eval(std::span<const QuadExt> x) const {
    if (x.size() < nvars_) throw DomainError("evaluation point too short");
    QuadExt acc(0);
    for (const auto& t : terms_) {
        QuadExt v(t.c);
        for (std::size_t i = 0; i < nvars_; ++i)
            for (unsigned k = 0; k < t.m.e[i]; ++k) v *= x[i];
        acc += v;
    }
    return acc;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        BigRational c = t.c;
        if (!first) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        c = abs(c);
        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (!t.m.e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (t.m.e[i] > 1) mono += "^" + std::to_string(t.m.e[i]);
        }
        if (mono.empty()) out += c.get_str();
        else if (c == 1) out += mono;
        else out += c.get_str() + "*" + mono;
        first = false;
    }
    return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    MultiPoly bb = b.with_order(a.order_);
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].m == bb.terms_[i].m) || a.terms_[i].c != bb.terms_[i].c) return false;
    return true;
}

MultiPoly pow(const MultiPoly& p, unsigned e) {
    MultiPoly r = MultiPoly::constant(p.nvars(), 1, p.order());
    for (unsigned k = 0; k < e; ++k) r = r * p;
    return r;
}

}  // namespace canon::algebra
