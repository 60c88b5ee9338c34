#pragma once

#include "canon/canonical.hpp"
#include "canon/matrix.hpp"

#include <json.hpp>

#include <optional>
#include <vector>

namespace canon::linear {

using algebra::RatMatrix;

enum class AffineKind { Inconsistent, Point, Subspace };

struct AffineDescription {
    AffineKind kind = AffineKind::Inconsistent;
    std::vector<BigRational> point;               // particular solution
    std::vector<std::vector<BigRational>> basis;  // direction vectors
    std::size_t dimension() const { return basis.size(); }
};

// Rows [coefficients | right side] of a system without multiplications.
RatMatrix augmented_matrix(const CanonicalSystem& sys);

// Rows of the system in x_2..x_n after x_1 = 1 is substituted, with the
// right side appended. Requires Unit(1) in the system.
RatMatrix substituted_rows(const CanonicalSystem& sys);

// Throws DomainError when a multiplication is present.
AffineDescription solve_W(const CanonicalSystem& sys);

struct Refinement {
    std::vector<BigRational> point;
    std::vector<std::size_t> zeroed;  // 1-based indices forced to 0, in order
};

// Adjoins x_m + x_m = x_m for the smallest m that shrinks the solution set
// until one point is left. Throws DomainError on inconsistent input.
Refinement refine_to_point(const CanonicalSystem& sys);

struct Theorem11Result {
    std::vector<BigRational> point;
    bool ok = false;
};
Theorem11Result theorem11_check(const CanonicalSystem& sys);

struct Theorem12Result {
    bool rational_consistent = false;
    bool integer_consistent = false;
    std::optional<std::vector<BigInt>> point;  // small integer solution
    bool ok = false;                           // point within sqrt(5)^(n-1)
    std::optional<BigInt> delta;               // largest maximal minor of (A, b)
};
Theorem12Result theorem12_integer_check(const CanonicalSystem& sys);

// Integer solution of A x = b via column Hermite reduction, or nullopt when
// none exists. A and b must have integer entries.
std::optional<std::vector<BigInt>> integer_solution(const RatMatrix& A, const std::vector<BigRational>& b);

struct Conj3Report {
    unsigned n = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    BigRational max_norm;
    std::vector<std::vector<BigRational>> violations;      // norm > 2^(n-1)
    std::vector<std::vector<BigRational>> contradictions;  // norm > sqrt(5)^(n-1)
    nlohmann::json to_json() const;
};

// Random rank completion from the row e_1 with right side 1, rows
// e_i + e_j - e_k drawn uniformly. Trial t draws from seed ^ t.
Conj3Report probe_conj3(unsigned n, std::size_t iterations, std::uint64_t seed, unsigned jobs = 1);

// Rows of the six patterns placed in n columns.
std::vector<std::vector<int>> pattern_rows(unsigned n);

struct Conj4Report {
    unsigned n = 0;
    std::uint64_t matrices = 0;
    long long max_minor = 0;
    std::vector<std::vector<std::vector<int>>> violations;  // first few offending matrices
    std::uint64_t violation_count = 0;
    bool exhaustive = true;
    nlohmann::json to_json() const;
};

inline constexpr unsigned kConj4ExhaustiveCap = 5;

// Throws DomainError above kConj4ExhaustiveCap.
Conj4Report conj4_exhaustive(unsigned n, unsigned jobs = 1);
Conj4Report conj4_random(unsigned n, std::uint64_t iterations, std::uint64_t seed);

// |det| of every column-deleted square submatrix of an (n-1) x n matrix.
std::vector<long long> column_deleted_minors(const std::vector<std::vector<int>>& rows);

struct Obs4Report {
    unsigned n = 0;
    std::uint64_t subsets = 0;
    std::uint64_t unique = 0;
    BigRational max_abs;
    std::vector<std::vector<BigRational>> points;  // distinct solutions, sorted
    std::vector<std::vector<BigRational>> over_bound;
    std::uint64_t replacement_failures = 0;
    bool ok() const { return over_bound.empty() && replacement_failures == 0; }
    nlohmann::json to_json() const;
};

// Every unique-solution n-subset of W_n, n <= 4.
Obs4Report verify_obs4(unsigned n);

}  // namespace canon::linear
