#include "canon/bigint.hpp"

#include "canon/error.hpp"

#include <cctype>

namespace canon {

namespace {

bool is_integer_token(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

BigInt parse_integer(std::string_view s) {
    if (!is_integer_token(s)) throw ParseError("malformed number '" + std::string(s) + "'");
    std::string t(s);
    if (t[0] == '+') t.erase(0, 1);
    return BigInt(t, 10);
}

}  // namespace

BigRational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return BigRational(parse_integer(text));
    BigInt num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw ParseError("malformed number '" + std::string(text) + "'");
    BigInt den = parse_integer(den_text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const BigRational& v) { return v.get_str(); }

BigInt pow_int(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

BigRational pow_rat(const BigRational& base, unsigned long exp) {
    BigRational r(pow_int(base.get_num(), exp), pow_int(base.get_den(), exp));
    r.canonicalize();
    return r;
}

BigInt pow2(unsigned long exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, exp);
    return r;
}

BigInt isqrt(const BigInt& v) {
    if (v < 0) throw DomainError("isqrt of a negative number");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

bool is_perfect_square(const BigInt& v, BigInt* root) {
    if (v < 0) return false;
    if (mpz_perfect_square_p(v.get_mpz_t()) == 0) return false;
    if (root) *root = isqrt(v);
    return true;
}

}  // namespace canon
