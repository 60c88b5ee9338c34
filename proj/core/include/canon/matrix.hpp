#pragma once

#include "canon/bigint.hpp"

#include <initializer_list>
#include <optional>
#include <vector>

namespace canon::algebra {

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, BigRational(0)) {}
    RatMatrix(std::initializer_list<std::initializer_list<long>> rows);
    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    // Bounds-checked access.
    BigRational& at(std::size_t r, std::size_t c);
    const BigRational& at(std::size_t r, std::size_t c) const;
    BigRational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const BigRational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::vector<BigRational> row(std::size_t r) const;
    void append_row(const std::vector<BigRational>& row);
    RatMatrix without_column(std::size_t c) const;
    RatMatrix with_column(std::size_t c, const std::vector<BigRational>& v) const;
    std::vector<BigRational> apply(const std::vector<BigRational>& x) const;

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigRational> a_;
};

// Fraction-free elimination; throws DomainError for non-square input.
BigRational bareiss_det(const RatMatrix& m);

// x_j = det(A_j) / det(A). Throws Error("singular") when det(A) = 0.
std::vector<BigRational> cramer_solve(const RatMatrix& A, const std::vector<BigRational>& b);

// Product of row Euclidean lengths, held as its square.
struct HadamardBound {
    BigRational squared;
    bool dominates(const BigRational& det) const { return det * det <= squared; }
};
HadamardBound hadamard_bound(const RatMatrix& m);

struct Rref {
    RatMatrix m;
    std::vector<std::size_t> pivots;  // pivot column per non-zero row
    std::size_t rank() const { return pivots.size(); }
};
Rref rref(RatMatrix m);
std::size_t rank(const RatMatrix& m);

// Solution of A x = b for a square non-singular A via elimination, one
// column of `rhs` per right-hand side; nullopt when singular.
std::optional<std::vector<std::vector<BigRational>>> solve_square(const RatMatrix& A,
                                                                  const std::vector<std::vector<BigRational>>& rhs);

// Integer determinant of a small matrix by Bareiss in 64-bit arithmetic.
// Entries must stay small enough that no intermediate overflows.
long long small_det(long long* a, int n);

}  // namespace canon::algebra
