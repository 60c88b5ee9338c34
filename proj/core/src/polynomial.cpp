#include "canon/polynomial.hpp"

#include "canon/error.hpp"

#include <cctype>
#include <sstream>

namespace canon {

Polynomial Polynomial::constant(std::size_t nvars, const BigInt& c) {
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
    Exponents e(nvars, 0);
    e.at(i) = 1;
    return monomial(e, 1);
}

Polynomial Polynomial::monomial(const Exponents& e, const BigInt& c) {
    Polynomial p(e.size());
    p.add_term(e, c);
    return p;
}

BigInt Polynomial::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const BigInt& c) {
    if (e.size() != n_) throw DomainError("exponent length mismatch");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (fresh) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

unsigned Polynomial::degree_in(std::size_t i) const {
    unsigned d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, e.at(i));
    return d;
}

BigInt Polynomial::max_abs_coeff() const {
    BigInt m = 0;
    for (auto& [e, c] : terms_)
        if (abs(c) > m) m = abs(c);
    return m;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (n_ != o.n_) throw DomainError("variable count mismatch");
    Polynomial r(n_);
    for (auto& [ea, ca] : terms_)
        for (auto& [eb, cb] : o.terms_) {
            Exponents e(n_);
            for (std::size_t i = 0; i < n_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

BigRational Polynomial::eval(std::span<const BigRational> x) const {
    if (x.size() != n_) throw DomainError("assignment length mismatch");
    BigRational sum = 0;
    for (auto& [e, c] : terms_) {
        BigRational t = c;
        for (std::size_t i = 0; i < n_; ++i)
            if (e[i]) t *= pow_rat(x[i], e[i]);
        sum += t;
    }
    return sum;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    // Highest exponent vectors first reads more naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool is_const = std::all_of(e.begin(), e.end(), [](unsigned v) { return v == 0; });
        BigInt mag = abs(c);
        if (s.empty()) s += c < 0 ? "-" : "";
        else s += c < 0 ? " - " : " + ";
        std::string mono;
        for (std::size_t i = 0; i < n_; ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (is_const) s += mag.get_str();
        else if (mag == 1) s += mono;
        else s += mag.get_str() + "*" + mono;
    }
    return s;
}

namespace {

struct RawTerm {
    BigInt c;
    std::vector<std::pair<std::size_t, unsigned>> vars;  // 1-based index, power
};

class TermLexer {
public:
    TermLexer(std::string_view s, int line) : s_(s), line_(line) {}

    std::vector<RawTerm> terms() {
        std::vector<RawTerm> out;
        skip();
        if (pos_ == s_.size()) fail("empty polynomial");
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            RawTerm t = term();
            if (sign < 0) t.c = -t.c;
            out.push_back(std::move(t));
            skip();
        }
        return out;
    }

    std::size_t max_var = 0;

private:
    RawTerm term() {
        RawTerm t{1, {}};
        for (;;) {
            skip();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                t.c *= BigInt(number());
            } else if (peek() == 'x') {
                ++pos_;
                std::string idx = number();
                std::size_t i = std::stoul(idx);
                if (i == 0) fail("index out of range");
                max_var = std::max(max_var, i);
                unsigned p = 1;
                skip();
                if (peek() == '^') {
                    ++pos_;
                    skip();
                    p = static_cast<unsigned>(std::stoul(number()));
                }
                t.vars.push_back({i, p});
            } else {
                fail("malformed term");
            }
            skip();
            if (peek() != '*') return t;
            ++pos_;
        }
    }

    std::string number() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        if (pos_ - start > 1 && s_[start] == '0') fail("leading zero");
        return std::string(s_.substr(start, pos_ - start));
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(why + " in '" + std::string(s_) + "'", line_);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    int line_;
};

Polynomial build(const std::vector<RawTerm>& raw, std::size_t n, int line) {
    Polynomial p(n);
    for (auto& t : raw) {
        Exponents e(n, 0);
        for (auto [i, pw] : t.vars) {
            if (i > n) throw ParseError("index out of range", line);
            e[i - 1] += pw;
        }
        p.add_term(e, t.c);
    }
    return p;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t nvars, int line) {
    TermLexer lx(text, line);
    auto raw = lx.terms();
    return build(raw, nvars, line);
}

PolySystem parse_poly_system(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    std::size_t declared = 0;
    std::vector<std::pair<int, std::vector<RawTerm>>> lines;
    std::size_t max_var = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        auto first = raw.find_first_not_of(" \t");
        if (first == std::string::npos || raw[first] == '#') continue;
        if (lines.empty() && declared == 0 && raw.compare(first, 5, "vars ") == 0) {
            try {
                declared = std::stoul(raw.substr(first + 5));
            } catch (const std::exception&) {
                throw ParseError("expected 'vars <n>' header", line_no);
            }
            if (declared == 0) throw ParseError("expected 'vars <n>' header", line_no);
            continue;
        }
        TermLexer lx(raw, line_no);
        lines.push_back({line_no, lx.terms()});
        max_var = std::max(max_var, lx.max_var);
    }
    if (lines.empty()) throw ParseError("no polynomials");
    PolySystem sys;
    sys.n = declared ? declared : max_var;
    if (sys.n == 0) throw ParseError("no variables");
    for (auto& [ln, terms] : lines) sys.polys.push_back(build(terms, sys.n, ln));
    return sys;
}

std::string serialize_poly_system(const PolySystem& sys) {
    std::string s = "vars " + std::to_string(sys.n) + "\n";
    for (auto& p : sys.polys) s += p.str() + "\n";
    return s;
}

}  // namespace canon
