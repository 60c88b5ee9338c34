#include "canon/matrix.hpp"

#include "canon/error.hpp"

#include <utility>

namespace canon::algebra {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (auto& r : rows) {
        if (r.size() != cols_) throw DomainError("ragged matrix literal");
        for (long v : r) a_.emplace_back(v);
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

BigRational& RatMatrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw DomainError("matrix index out of range");
    return (*this)(r, c);
}

const BigRational& RatMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw DomainError("matrix index out of range");
    return (*this)(r, c);
}

std::vector<BigRational> RatMatrix::row(std::size_t r) const {
    return {a_.begin() + static_cast<long>(r * cols_), a_.begin() + static_cast<long>((r + 1) * cols_)};
}

void RatMatrix::append_row(const std::vector<BigRational>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw DomainError("row length mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

RatMatrix RatMatrix::without_column(std::size_t c) const {
    RatMatrix m(rows_, cols_ - 1);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0, o = 0; k < cols_; ++k)
            if (k != c) m(r, o++) = (*this)(r, k);
    return m;
}

RatMatrix RatMatrix::with_column(std::size_t c, const std::vector<BigRational>& v) const {
    RatMatrix m = *this;
    for (std::size_t r = 0; r < rows_; ++r) m(r, c) = v[r];
    return m;
}

std::vector<BigRational> RatMatrix::apply(const std::vector<BigRational>& x) const {
    if (x.size() != cols_) throw DomainError("dimension mismatch");
    std::vector<BigRational> y(rows_, BigRational(0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) y[r] += (*this)(r, c) * x[c];
    return y;
}

BigRational bareiss_det(const RatMatrix& m) {
    if (!m.square()) throw DomainError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    // Clear denominators row by row, then run integer Bareiss.
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    BigInt scale = 1;
    for (std::size_t r = 0; r < n; ++r) {
        BigInt l = 1;
        for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        scale *= l;
        for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    }
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    BigRational det(a[n - 1][n - 1] * sign, scale);
    det.canonicalize();
    return det;
}

std::vector<BigRational> cramer_solve(const RatMatrix& A, const std::vector<BigRational>& b) {
    if (!A.square() || b.size() != A.rows()) throw DomainError("cramer_solve needs a square system");
    BigRational d = bareiss_det(A);
    if (d == 0) throw Error("singular");
    std::vector<BigRational> x;
    for (std::size_t j = 0; j < A.cols(); ++j) x.push_back(bareiss_det(A.with_column(j, b)) / d);
    return x;
}

HadamardBound hadamard_bound(const RatMatrix& m) {
    BigRational prod = 1;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        BigRational s = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) s += m(r, c) * m(r, c);
        prod *= s;
    }
    return {prod};
}

Rref rref(RatMatrix m) {
    Rref out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
        BigRational inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) continue;
            BigRational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.m = std::move(m);
    return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).rank(); }

std::optional<std::vector<std::vector<BigRational>>> solve_square(const RatMatrix& A,
                                                                  const std::vector<std::vector<BigRational>>& rhs) {
    const std::size_t n = A.rows();
    if (!A.square()) throw DomainError("solve_square needs a square matrix");
    RatMatrix aug(n, n + rhs.size());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = A(r, c);
        for (std::size_t k = 0; k < rhs.size(); ++k) aug(r, n + k) = rhs[k][r];
    }
    Rref e = rref(std::move(aug));
    if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    std::vector<std::vector<BigRational>> out(rhs.size(), std::vector<BigRational>(n));
    for (std::size_t k = 0; k < rhs.size(); ++k)
        for (std::size_t r = 0; r < n; ++r) out[k][r] = e.m(r, n + k);
    return out;
}

long long small_det(long long* a, int n) {
    long long sign = 1, prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            int p = k + 1;
            while (p < n && a[p * n + k] == 0) ++p;
            if (p == n) return 0;
            for (int c = 0; c < n; ++c) std::swap(a[p * n + c], a[k * n + c]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
        prev = a[k * n + k];
    }
    return sign * a[(n - 1) * n + (n - 1)];
}

}  // namespace canon::algebra
