#pragma once

#include "canon/canonical.hpp"
#include "canon/config.hpp"
#include "canon/polynomial.hpp"
#include "canon/rng.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace canon::compiler {

struct Profile {
    BigInt max_coeff;               // M
    std::size_t m = 0;              // number of polynomials
    std::vector<unsigned> degrees;  // d_1..d_n
};

// Throws DomainError "variable degree zero violates standing assumption".
Profile profile(const PolySystem& sys);

BigInt count_T(const BigInt& max_coeff, const std::vector<unsigned>& degrees,
               std::uint64_t exponent_cap = default_config().exponent_cap);

struct NewVarCount {
    BigInt p;
    BigInt constants;     // 2M+1
    BigInt monomials;     // Π(d_i+1) - 1 - n
    BigInt scaled;        // m(Π(d_i+1) - 1)
    BigInt partial_sums;  // m(Π(d_i+1) - 1)
};

NewVarCount count_new_vars(const BigInt& max_coeff, std::size_t m, std::size_t n,
                           const std::vector<unsigned>& degrees);

struct CompilationResult {
    CanonicalSystem canonical;
    std::vector<Polynomial> var_meaning;  // index i-1 holds the meaning of x_i
    std::vector<std::uint32_t> q;         // q[j] is the variable equal to f_{j+1}
    std::size_t n = 0;
    BigInt p;                             // new variables the construction calls for
    std::size_t total_vars = 0;
    std::size_t distinct_meanings = 0;    // variables after merging equal meanings
    bool coarse = false;

    nlohmann::json summary() const;
};

struct CompileOptions {
    // Emit every identity among the variable meanings (small instances only).
    bool full_h = false;
    std::size_t full_h_cap = 400;
    std::uint64_t coarse_cap = default_config().coarse_cap;
};

CompilationResult compile(const PolySystem& sys, const CompileOptions& opt = {});
// Throws DomainError "coarse construction too large" above the cap.
CompilationResult compile_coarse(const PolySystem& sys, const CompileOptions& opt = {});

struct VerifyFailure {
    std::string reason;
    std::vector<BigRational> assignment;
};

struct VerifyReport {
    bool structural_ok = false;
    bool identities_ok = false;
    bool q_count_ok = false;
    std::size_t trials = 0;
    std::vector<VerifyFailure> failures;

    bool ok() const { return structural_ok && identities_ok && q_count_ok && failures.empty(); }
    nlohmann::json to_json() const;
};

// Variables reachable from x_1..x_n through the defining equations (the
// Add(q,q,q) constraints excluded). True when every variable is reached.
bool structurally_grounded(const CompilationResult& r);

// Every equation other than the Add(q,q,q) constraints is a polynomial
// identity under var_meaning.
bool identities_hold(const CompilationResult& r);

struct RandomSystemLimits {
    std::size_t max_n = 3, max_m = 2;
    unsigned max_degree = 2;
    long max_coeff = 3;
};

// Every variable reaches its drawn degree and some coefficient reaches the
// drawn bound, so the profile is exactly the drawn (n, m, d, M).
PolySystem random_poly_system(Rng& rng, const RandomSystemLimits& lim = {});

VerifyReport verify_compilation(const PolySystem& sys, const CompilationResult& r, std::size_t trials,
                                std::uint64_t seed, unsigned jobs = 1);

}  // namespace canon::compiler
