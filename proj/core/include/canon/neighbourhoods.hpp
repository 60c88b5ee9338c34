#pragma once

#include "canon/bigint.hpp"
#include "canon/canonical.hpp"
#include "canon/solve.hpp"

#include <json.hpp>

#include <optional>
#include <set>
#include <vector>

namespace canon::nbhd {

struct Neighbourhood {
    std::vector<BigRational> elements;  // distinct
    BigRational target;
};

// Variables x_1..x_m with x_1 the target and the rest in increasing order.
std::vector<BigRational> variable_order(const Neighbourhood& a);
CanonicalSystem induced_system(const Neighbourhood& a);

enum class Verdict { Fixed, Moved, Unknown };
const char* verdict_name(Verdict v);

struct FixednessCertificate {
    Verdict verdict = Verdict::Unknown;
    CanonicalSystem system;
    std::vector<BigRational> order;                 // element assigned to x_i
    std::optional<std::vector<BigRational>> image;  // witness map, same order
    std::string evidence;
    nlohmann::json to_json() const;
};

struct FixedOptions {
    long witness_box = 1000;   // |num|, den of witness coordinates
    unsigned slice_attempts = 64;
    std::uint64_t seed = 1;
    algebra::SolveOptions solve;
};

// Fixedness over Q.
FixednessCertificate is_fixed(const Neighbourhood& a, const FixedOptions& opt = {});

// True when `image` is an arithmetic map on the elements in `order`.
bool is_arithmetic_map(const std::vector<BigRational>& order, const std::vector<BigRational>& image);

struct KtildeResult {
    unsigned n = 0;
    std::set<BigRational> values;
    std::size_t candidates = 0;  // neighbourhoods examined
    std::size_t unknown = 0;
    nlohmann::json to_json() const;
};

// r in K~_n iff some neighbourhood of at most n rationals fixes r. n <= 3.
KtildeResult compute_Ktilde(unsigned n, const FixedOptions& opt = {}, unsigned jobs = 1);

// Smallest n <= max_n with r in K~_n. max_n <= 3.
std::optional<unsigned> omega(const BigRational& r, unsigned max_n, const FixedOptions& opt = {});

struct Theorem10Report {
    unsigned n = 0;
    BigInt bound;  // (n+1)^(n^2+n) + 2
    std::optional<std::size_t> card;
    bool ok = true;
    nlohmann::json to_json() const;
};
Theorem10Report theorem10_bound_check(unsigned n, const FixedOptions& opt = {});

}  // namespace canon::nbhd
