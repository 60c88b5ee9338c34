#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace canon {

using BigInt = mpz_class;
using BigRational = mpq_class;

// "p/q" or "p"; throws ParseError on anything else.
BigRational parse_rational(std::string_view text);
std::string to_string(const BigInt& v);
std::string to_string(const BigRational& v);

BigInt pow_int(const BigInt& base, unsigned long exp);
BigRational pow_rat(const BigRational& base, unsigned long exp);
BigInt pow2(unsigned long exp);

// floor(sqrt(v)) for v >= 0.
BigInt isqrt(const BigInt& v);
bool is_perfect_square(const BigInt& v, BigInt* root = nullptr);

}  // namespace canon
